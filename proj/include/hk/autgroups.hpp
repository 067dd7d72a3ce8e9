#pragma once

// Biregular and birational automorphism groups in the classified Picard rank 1 and 2 cases.

#include "hk/arith.hpp"

#include <string>
#include <utility>

namespace hk::autgroups {

struct GroupTag {
    enum class Kind { Trivial, Z2, Z2xZ2, InfiniteCyclic, InfiniteDihedral, Unknown };
    Kind kind = Kind::Trivial;
    std::string reason;  // only for Unknown

    static GroupTag trivial() { return {Kind::Trivial, {}}; }
    static GroupTag z2() { return {Kind::Z2, {}}; }
    static GroupTag cyclic() { return {Kind::InfiniteCyclic, {}}; }
    static GroupTag dihedral() { return {Kind::InfiniteDihedral, {}}; }
    static GroupTag unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }

    bool finite() const { return kind == Kind::Trivial || kind == Kind::Z2 || kind == Kind::Z2xZ2; }
    std::string str() const;
    friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

struct AutBir {
    GroupTag aut;
    GroupTag bir;
    friend bool operator==(const AutBir&, const AutBir&) = default;
};

GroupTag aut_k3_rank1(long long two_e);

// S^[2] for Pic(S) = ZL, L^2 = 2e
GroupTag aut_s2(long long e);
AutBir bir_s2(long long e);

// Bir(S^[m]), m >= 3.  Unknown when every known necessary condition holds.
GroupTag bir_sm(long long e, long long m);

// Fourfolds with Pic = diag(2n, -2e'), H of divisibility 2.
AutBir fourfold_groups(long long n, long long e_prime);

GroupTag very_general_bir(long long m, long long n, long long gamma);

enum class Trichotomy { FiniteBoth, FiniteAutInfiniteBir, EqualInfinite };
Trichotomy rank2_trichotomy(bool nef_rational, bool mov_rational);
const char* trichotomy_name(Trichotomy t);

bool minus_one_is_square_mod(long long k);

}  // namespace hk::autgroups
