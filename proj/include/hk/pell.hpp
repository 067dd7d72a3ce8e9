#pragma once

// Pell-type equations e1*a^2 - e2*b^2 = t.

#include "hk/arith.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hk::pell {

struct Equation {
    BigInt e1 = 1;
    BigInt e2;
    BigInt t;
};

struct Solution {
    BigInt a;
    BigInt b;
    friend bool operator==(const Solution&, const Solution&) = default;
};

bool satisfies(const Equation& eq, const Solution& s);

// Minimal positive solution of a^2 - d b^2 = 1 (continued fraction of sqrt d).
Solution fundamental_solution(const BigInt& d);

std::optional<Solution> min_positive_solution(const Equation& eq);
std::optional<Solution> generalized_min(const BigInt& e1, const BigInt& e2, const BigInt& t);

struct Solvability {
    bool nonzero_b = false;  // some solution with b != 0
    bool zero_b = false;     // (a, 0) solves it
    bool any() const { return nonzero_b || zero_b; }
};
Solvability is_solvable(const Equation& eq);

struct SolutionClass {
    Solution representative;   // least a > 0, b > 0 in the class
    std::size_t conjugate_of;  // index of the conjugate class (itself if ambiguous)
};

// Classes of x^2 - d y^2 = t under multiplication by units of norm 1.
std::vector<SolutionClass> solution_classes(const BigInt& d, const BigInt& t);

std::vector<Solution> solutions_in_order(const BigInt& d, const BigInt& t, std::size_t count);

Solution compose_to_unit(const BigInt& e1, const BigInt& e2, int eps, const Solution& s);

bool same_class(const BigInt& d, const BigInt& t, const Solution& s1, const Solution& s2);

// Positive solutions of e1 a^2 - e2 b^2 = t in increasing a.  Finite when e1*e2 is a square.
class Stream {
public:
    Stream(BigInt e1, BigInt e2, BigInt t);
    ~Stream();
    Stream(Stream&&) noexcept;
    Stream& operator=(Stream&&) noexcept;

    std::optional<Solution> next();
    std::vector<Solution> take(std::size_t count);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace hk::pell
