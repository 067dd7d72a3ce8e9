#pragma once

// Heegner divisors and the image of the period map for polarized K3^[m]-type manifolds.
//
// A Heegner key describes the orbit of kappa, a primitive generator of K cap h-perp:
// its square, its divisibility s in h-perp and +-kappa_* = kappa/s in D(h-perp).

#include "hk/arith.hpp"
#include "hk/lattice.hpp"

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace hk::periods {

using lattice::i64;
using Element = lattice::DiscGroup::Element;

struct HeegnerKey {
    i64 d;        // |disc(K-perp)| = |kappa2| |D(h-perp)| / s^2
    i64 kappa2;   // square of the primitive kappa
    i64 s;        // divisibility of kappa in h-perp
    Element star; // sign-normalized kappa_*
    bool multiplicity_uncertain = false;

    auto tie() const { return std::tie(d, kappa2, s, star); }
    friend bool operator==(const HeegnerKey& a, const HeegnerKey& b) { return a.tie() == b.tie(); }
    friend bool operator<(const HeegnerKey& a, const HeegnerKey& b) { return a.tie() < b.tie(); }
    std::string str() const;
};

struct WallConstraint {
    i64 k;
    i64 a;
    i64 kappa_sq;  // 2(m-1)(4(m-1)a - k^2) < 0
    friend bool operator==(const WallConstraint&, const WallConstraint&) = default;
};

// m = 2
bool heegner_nonempty_m2(i64 n, i64 gamma, i64 e);

struct ComponentInfo {
    std::optional<i64> count;  // absent outside the proven hypotheses
    std::vector<HeegnerKey> keys;
    std::string note;
};
ComponentInfo heegner_components_m2(i64 n, i64 gamma, i64 e);

std::vector<HeegnerKey> excluded_heegner_m2(i64 n, i64 gamma);

// All keys of primitive kappa in h-perp with |disc(K-perp)| = d.
std::vector<HeegnerKey> keys_with_discriminant(i64 m, i64 n, i64 gamma, i64 d);

// general m with m-1 equal to 1 or a prime
std::vector<WallConstraint> wall_constraints(i64 m);
std::vector<HeegnerKey> realize_orthogonal_classes(i64 m, i64 n, i64 gamma, const WallConstraint& wc);
std::vector<HeegnerKey> excluded_heegner(i64 m, i64 n, i64 gamma);

// Divisibility in the full K3^[m] lattice of the primitive kappa with the given kappa_*.
i64 ambient_divisibility(i64 m, i64 n, i64 gamma, const Element& star);

struct OracleHit {
    i64 kappa2;
    i64 s;
    Element star;
    i64 total_div;
    auto tie() const { return std::tie(kappa2, s, star, total_div); }
    friend bool operator<(const OracleHit& a, const OracleHit& b) { return a.tie() < b.tie(); }
    friend bool operator==(const OracleHit& a, const OracleHit& b) { return a.tie() == b.tie(); }
};

// Brute force over explicit coordinates in the rank-2 block plus one hyperbolic plane.
std::set<OracleHit> coordinate_oracle(i64 m, i64 n, i64 gamma, i64 bound, unsigned threads = 0);

// Keys the oracle hits realize for one wall constraint: kappa = b * kappa_prim with
// b^2 kappa_prim^2 = wc.kappa_sq and 2(m-1) | b * total_div.
std::set<HeegnerKey> oracle_keys(const std::set<OracleHit>& hits, i64 m, i64 n, i64 gamma, const WallConstraint& wc);

// Hilbert squares
struct HilbPoint {
    BigInt a, b;
    i64 gamma;
    friend bool operator==(const HilbPoint&, const HilbPoint&) = default;
};
// Admissible (a, b): a^2 - e b^2 = -n, a/b < nu_e, gcd(a, b) = 1, optionally with the parity of b
// fixed by gamma.  Ascending in a.
std::vector<HilbPoint> hilbert_square_points(i64 n, i64 e, std::optional<i64> gamma = std::nullopt);
std::optional<HilbPoint> hilbert_square_point(i64 n, i64 e, std::optional<i64> gamma = std::nullopt);

std::vector<i64> nl_family(i64 n, i64 gamma, i64 a_max);

}  // namespace hk::periods
