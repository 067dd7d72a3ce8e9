#pragma once

// Block-sum lattices (U, E8(-1), I1(t), small Gram blocks) and their discriminant forms.

#include "hk/arith.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hk::lattice {

using i64 = std::int64_t;
using IntMatrix = std::vector<std::vector<i64>>;
using RatVector = std::vector<Rational>;

struct Block {
    enum class Kind { U, E8, I1, Gram };
    Kind kind = Kind::U;
    IntMatrix gram;  // filled for every kind

    static Block hyperbolic();
    static Block e8();
    static Block i1(i64 t);
    static Block custom(IntMatrix g);

    std::size_t rank() const { return gram.size(); }
    bool unimodular() const { return kind == Kind::U || kind == Kind::E8; }
    std::string name() const;
};

struct LatticeSpec {
    std::vector<Block> blocks;

    std::size_t rank() const;
    BigInt det() const;
    std::size_t offset(std::size_t block) const;
    int count(Block::Kind k) const;
    std::string describe() const;
};

LatticeSpec k3();                       // U^3 + E8(-1)^2
LatticeSpec k3m(i64 m);                 // U^3 + E8(-1)^2 + I1(-(2m-2))
LatticeSpec k3_polarized(i64 e);        // U^2 + E8(-1)^2 + I1(-2e)
LatticeSpec unimodular_m();             // M = U^2 + E8(-1)^2
LatticeSpec polarized_orthogonal(i64 m, i64 n, i64 gamma);

struct LatticeVector {
    std::shared_ptr<const LatticeSpec> lattice;
    std::vector<i64> coords;
};

LatticeVector make_vector(const LatticeSpec& spec, std::vector<i64> coords);
BigInt pairing(const LatticeVector& x, const LatticeVector& y);
BigInt square(const LatticeVector& x);
i64 divisibility(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

// Discriminant group D = L^dual / L of the non-unimodular part.  Elements are written in the
// coordinates of the chosen generators, each taken modulo its order.
class DiscGroup {
public:
    DiscGroup() = default;
    explicit DiscGroup(IntMatrix gram, std::vector<RatVector> preferred = {});

    std::size_t size() const { return size_; }
    const std::vector<i64>& invariant_factors() const { return invariant_; }
    const std::vector<i64>& orders() const { return orders_; }
    const std::vector<Rational>& generator_q() const { return gen_q_; }
    const std::vector<std::vector<Rational>>& generator_pairings() const { return gen_b_; }
    const std::vector<RatVector>& generators() const { return gens_; }

    using Element = std::vector<i64>;
    std::vector<Element> elements() const;
    RatVector vector_of(const Element& x) const;
    Element element_of(const RatVector& v) const;  // v must lie in the dual lattice
    Rational q(const Element& x) const;             // in [0, 2)
    Rational b(const Element& x, const Element& y) const;  // in [0, 1)
    i64 order(const Element& x) const;
    Element negate(const Element& x) const;
    Element sign_normalized(const Element& x) const;  // lexicographic min of x and -x

private:
    IntMatrix gram_;
    std::vector<i64> snf_;       // full diagonal of the Smith form
    IntMatrix qinv_, qmat_;
    std::size_t size_ = 1;
    std::vector<i64> invariant_;
    std::vector<i64> orders_;
    std::vector<RatVector> gens_;
    std::vector<Rational> gen_q_;
    std::vector<std::vector<Rational>> gen_b_;
    std::map<std::vector<i64>, Element> lookup_;  // Smith coordinates -> generator coordinates

    std::vector<i64> smith_coords(const RatVector& v) const;
    Rational form(const RatVector& x, const RatVector& y) const;
    bool try_generators(const std::vector<RatVector>& cand);
};

// Discriminant group of the whole block sum.
DiscGroup disc_group(const LatticeSpec& spec);
DiscGroup disc_group(i64 m, i64 n, i64 gamma);

// Non-unimodular coordinates of a lattice vector (the part seen by D).
RatVector nonunimodular_part(const LatticeSpec& spec, const RatVector& full);
IntMatrix nonunimodular_gram(const LatticeSpec& spec);

struct OrbitKey {
    BigInt square;
    i64 star_order = 1;
    Rational star_q;  // in [0, 2)
    friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
};

OrbitKey orbit_key(const LatticeVector& v);
bool exists_primitive_vector(const LatticeSpec& spec, const OrbitKey& key);

i64 monodromy_index(i64 m);

struct ComponentCount {
    std::optional<i64> count;
    std::string note;  // provenance of the rule used, or why it is unknown
};
ComponentCount moduli_component_count(i64 m, i64 n, i64 gamma);

struct DualParams {
    i64 m, n, gamma;
    friend bool operator==(const DualParams&, const DualParams&) = default;
};
DualParams strange_dual_params(i64 m, i64 n, i64 gamma);
bool polarization_determined(i64 m, i64 n, i64 gamma);
i64 heegner_finiteness_bound(i64 m, i64 n, i64 gamma, i64 d);

// |disc(h-perp)| = (2n)(2m-2)/gamma^2.
i64 disc_order(i64 m, i64 n, i64 gamma);

void check_params(i64 m, i64 n, i64 gamma);

}  // namespace hk::lattice
