#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Domain error carrying a stable machine-readable name (e.g. "PerfectSquareInput").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

BigInt isqrt(const BigInt& n);                  // floor(sqrt(n)), n >= 0
bool is_square(const BigInt& n, BigInt* root = nullptr);
bool is_square(std::int64_t n);
BigInt gcd(const BigInt& a, const BigInt& b);   // nonnegative
std::int64_t gcd64(std::int64_t a, std::int64_t b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod(const BigInt& a, const BigInt& m);   // in [0, |m|)
std::int64_t mod64(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
int valuation(std::int64_t n, std::int64_t p);
std::vector<BigInt> divisors(const BigInt& n);             // positive divisors of |n|, ascending

// Generalized binomial C(x, k) for any integer x via the falling factorial.
BigInt binomial(const BigInt& x, unsigned k);
BigInt factorial(unsigned n);

// Residue of a rational modulo r (r > 0 integer), in [0, r).
Rational rat_mod(const Rational& q, const Rational& r);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);   // "p/q" or "p"
std::int64_t to_i64(const BigInt& v);       // throws Overflow if out of range

}  // namespace hk
