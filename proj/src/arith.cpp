#include "hk/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace hk {

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw Error("NegativeInput", "isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const BigInt& n, BigInt* root) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_square(std::int64_t n) { return is_square(BigInt(n)); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt mm = m < 0 ? BigInt(-m) : m;
    BigInt r = a % mm;
    if (r < 0) r += mm;
    return r;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
    m = std::llabs(m);
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    n = std::llabs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) return std::numeric_limits<int>::max();
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = n < 0 ? BigInt(-n) : n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(const BigInt& x, unsigned k) {
    BigInt num = 1;
    for (unsigned i = 0; i < k; ++i) num *= (x - i);
    return num / factorial(k);
}

Rational rat_mod(const Rational& q, const Rational& r) {
    // q - r*floor(q/r)
    Rational t = q / r;
    BigInt fl = floor_div(numerator(t), denominator(t));
    return q - r * Rational(fl);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error("Overflow", "value does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

}  // namespace hk
