#include "hk/rrinv.hpp"

namespace hk::rrinv {

namespace {
void check_m(long long m) {
    if (m < 1) throw Error("InvalidArgument", "m >= 1 required");
}
}  // namespace

BigInt chi(const RiemannRochInput& in) {
    check_m(in.m);
    if (in.q % 2 != 0) throw Error("OddSquare", "the square of a line bundle is even");
    BigInt half = in.q / 2;
    auto m = static_cast<unsigned>(in.m);
    if (in.series == Series::HilbK3) return binomial(half + in.m + 1, m);
    return (in.m + 1) * binomial(half + in.m, m);
}

BigInt h0_polarized(long long m, long long n) {
    if (m < 2 || n < 1) throw Error("InvalidArgument", "need m >= 2 and n >= 1");
    return chi({Series::HilbK3, m, BigInt(2 * n)});
}

Rational fujiki_constant(Series s, long long m) {
    check_m(m);
    if (m == 1) return 1;
    auto um = static_cast<unsigned>(m);
    Rational c(factorial(2 * um), factorial(um) * (BigInt(1) << um));
    if (s == Series::Kummer) c *= m + 1;
    return c;
}

Rational top_self_intersection(Series s, long long m, const BigInt& q) {
    if (q % 2 != 0) throw Error("OddSquare", "the square of a line bundle is even");
    return fujiki_constant(s, m) * Rational(pow(q, static_cast<unsigned>(m)));
}

int betti2(Series s) { return s == Series::HilbK3 ? 23 : 7; }

const char* series_name(Series s) { return s == Series::HilbK3 ? "HilbK3" : "Kummer"; }

}  // namespace hk::rrinv
