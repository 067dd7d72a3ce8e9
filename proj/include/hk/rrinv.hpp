#pragma once

// Riemann-Roch and Fujiki invariants of the two Beauville series.

#include "hk/arith.hpp"

namespace hk::rrinv {

enum class Series { HilbK3, Kummer };

struct RiemannRochInput {
    Series series = Series::HilbK3;
    long long m = 1;
    BigInt q;  // Beauville-Fujiki square, even
};

BigInt chi(const RiemannRochInput& in);
BigInt h0_polarized(long long m, long long n);
Rational fujiki_constant(Series s, long long m);
Rational top_self_intersection(Series s, long long m, const BigInt& q);
int betti2(Series s);

const char* series_name(Series s);

}  // namespace hk::rrinv
