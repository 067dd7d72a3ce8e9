#include "hk/autgroups.hpp"

#include "hk/pell.hpp"

namespace hk::autgroups {

namespace {

bool solvable(long long e1, long long e2, long long t) { return pell::generalized_min(e1, e2, t).has_value(); }

}  // namespace

std::string GroupTag::str() const {
    switch (kind) {
        case Kind::Trivial: return "Trivial";
        case Kind::Z2: return "Z2";
        case Kind::Z2xZ2: return "Z2xZ2";
        case Kind::InfiniteCyclic: return "InfiniteCyclic";
        case Kind::InfiniteDihedral: return "InfiniteDihedral";
        case Kind::Unknown: return "Unknown(" + reason + ")";
    }
    return "?";
}

bool minus_one_is_square_mod(long long k) {
    if (k < 1) throw Error("InvalidArgument", "modulus must be positive");
    if (k % 4 == 0) return false;
    for (auto p : prime_factors(k))
        if (p % 4 == 3) return false;
    return true;
}

GroupTag aut_k3_rank1(long long two_e) {
    if (two_e < 2 || two_e % 2 != 0) throw Error("InvalidArgument", "L^2 must be even and positive");
    return two_e == 2 ? GroupTag::z2() : GroupTag::trivial();
}

GroupTag aut_s2(long long e) { return bir_s2(e).aut; }

AutBir bir_s2(long long e) {
    if (e < 1) throw Error("InvalidArgument", "e >= 1 required");
    if (e == 1) return {GroupTag::z2(), GroupTag::z2()};
    bool pm1 = solvable(1, e, -1);
    bool p5 = solvable(1, 4 * e, 5);
    if (pm1 && !p5) return {GroupTag::z2(), GroupTag::z2()};
    if (e == 5 || (e % 5 != 0 && pm1 && p5)) return {GroupTag::trivial(), GroupTag::z2()};
    return {GroupTag::trivial(), GroupTag::trivial()};
}

GroupTag bir_sm(long long e, long long m) {
    if (e < 2 || m < 3) throw Error("InvalidArgument", "need e > 1 and m >= 3");
    if (m == e) return GroupTag::z2();  // Beauville involution
    if (m == e + 1 || m == e + 2 || m == e + 3 || m == e - 1) return GroupTag::trivial();
    long long p = m - 1;
    BigInt d = BigInt(e) * p;
    if (is_square(d)) return GroupTag::trivial();
    if (gcd64(e, p) != 1) return GroupTag::trivial();
    if (solvable(p, e, 1)) return GroupTag::trivial();
    // least solution of a^2 - e(m-1) b^2 = 1 with a = +-1 mod m-1
    auto unit = pell::fundamental_solution(d);
    pell::Solution cur = unit;
    while (mod(cur.a, p) != 1 && mod(cur.a, p) != mod(BigInt(-1), p))
        cur = {cur.a * unit.a + d * cur.b * unit.b, cur.a * unit.b + cur.b * unit.a};
    BigInt r = mod(cur.a, 2 * e);
    bool d_holds = (r == 1 || r == mod(BigInt(-1), 2 * e)) && cur.b % 2 == 0;
    if (!d_holds) return GroupTag::trivial();
    return GroupTag::unknown("necessary conditions (a)-(d) hold; sufficiency not established");
}

AutBir fourfold_groups(long long n, long long e_prime) {
    if (mod64(n, 4) != 3) throw Error("BadCongruence", "n must be -1 mod 4");
    if (e_prime < 2) throw Error("InvalidArgument", "e' >= 2 required");
    if (solvable(n, e_prime, -1) || is_square(BigInt(n) * e_prime)) return {GroupTag::trivial(), GroupTag::trivial()};
    GroupTag infinite = solvable(n, e_prime, 1) ? GroupTag::dihedral() : GroupTag::cyclic();
    if (solvable(n, 4 * e_prime, -5)) return {GroupTag::trivial(), infinite};
    return {infinite, infinite};
}

GroupTag very_general_bir(long long m, long long n, long long gamma) {
    if (m < 2 || n < 1 || gamma < 1) throw Error("InvalidArgument", "need m >= 2, n >= 1, gamma >= 1");
    if ((2 * n) % gamma != 0 || (2 * m - 2) % gamma != 0)
        throw Error("InvalidArgument", "gamma must divide 2n and 2m-2");
    if (n == 1) return GroupTag::z2();
    if (n == m - 1 && gamma == n && minus_one_is_square_mod(m - 1)) return GroupTag::z2();
    return GroupTag::trivial();
}

Trichotomy rank2_trichotomy(bool nef_rational, bool mov_rational) {
    if (nef_rational && mov_rational) return Trichotomy::FiniteBoth;
    if (nef_rational) return Trichotomy::FiniteAutInfiniteBir;
    if (!mov_rational) return Trichotomy::EqualInfinite;
    throw Error("InconsistentFlags", "an irrational nef ray inside a rational movable cone is impossible");
}

const char* trichotomy_name(Trichotomy t) {
    switch (t) {
        case Trichotomy::FiniteBoth: return "FiniteBoth";
        case Trichotomy::FiniteAutInfiniteBir: return "FiniteAutInfiniteBir";
        case Trichotomy::EqualInfinite: return "EqualInfinite";
    }
    return "?";
}

}  // namespace hk::autgroups
