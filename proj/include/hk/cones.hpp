#pragma once

// Nef and movable cones of S^[2], S^[m] and Picard-rank-2 fourfolds.
//
// Slopes: for S^[m] the ray xL - y delta has slope y/x; for fourfolds the ray H - sL has slope s.

#include "hk/arith.hpp"
#include "hk/pell.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk::cones {

// Either a rational p/q >= 0 or sqrt(r) for a positive rational r that is not a square.
class ExtremalSlope {
public:
    static ExtremalSlope rational(const Rational& v);
    static ExtremalSlope sqrt_of(const Rational& r);  // collapses to a rational when r is a square

    bool is_rational() const { return rational_; }
    const Rational& value() const { return v_; }  // the rational, or the radicand
    Rational squared() const { return rational_ ? v_ * v_ : v_; }
    std::string str() const;  // "p/q" or "sqrt(p/q)"

    friend bool operator==(const ExtremalSlope& a, const ExtremalSlope& b) {
        return a.rational_ == b.rational_ && a.v_ == b.v_;
    }
    friend bool operator<(const ExtremalSlope& a, const ExtremalSlope& b) { return a.squared() < b.squared(); }
    friend bool operator<=(const ExtremalSlope& a, const ExtremalSlope& b) { return !(b < a); }

private:
    bool rational_ = true;
    Rational v_;
};

struct ConeReport {
    ExtremalSlope mov_slope;
    ExtremalSlope nef_slope;
    // Wall slopes inside the movable cone, ascending.  The first one bounds the nef cone.
    std::vector<Rational> walls;
    bool infinitely_many = false;  // walls is then a prefix
    bool nef_equals_mov = false;
};

// S^[2]
ExtremalSlope mov_slope_s2(long long e);
ExtremalSlope nef_slope_s2(long long e);
ConeReport walls_s2(long long e);

struct S2Row {
    long long e;
    std::optional<pell::Solution> p1;  // absent when e is a square
    std::optional<pell::Solution> p5;  // minimal solution of P_{4e}(5)
    bool square;
    ExtremalSlope mov, nef;
};
S2Row s2_row(long long e);

// S^[m]
struct DivisorClass {
    BigInt cL;
    BigInt cDelta;  // the class cL * L_m - cDelta * delta
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct MovRay {
    DivisorClass ray;
    int case_tag;  // 1: e(m-1) square, 2: (m-1)a^2 - e b^2 = 1 solvable, 3: otherwise
    Rational slope() const { return Rational(ray.cDelta, ray.cL); }
};
MovRay mov_ray_sm(long long e, long long m);

struct NefSpecial {
    DivisorClass ray;
    bool nef_equals_mov;
};
std::optional<NefSpecial> nef_ray_sm_special(long long e, long long m);

struct WallType {
    long long kappa_sq;
    long long div;
};
const std::vector<WallType>& wall_types(long long m);
ConeReport walls_sm(long long e, long long m);

// Fourfolds with Pic = diag(2n, -2e'), H of divisibility 2.
ConeReport fourfold_cones(long long n, long long e_prime, std::size_t prefix = 8);

// Embeddings
bool k_very_ample(long long a, long long e, long long k);

struct EmbeddingStatus {
    bool base_point_free;
    bool very_ample;
};
EmbeddingStatus hilb_embedding_status(long long a, long long e, long long m);

struct ModuliEmbedding {
    bool bpf_if;
    bool very_ample_if;
    BigInt ambient_dim;
};
ModuliEmbedding moduli_embedding_status(long long m, long long n, long long gamma);

}  // namespace hk::cones
