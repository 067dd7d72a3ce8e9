#include "hk/pell.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace hk::pell {

namespace {

struct Period {
    Solution conv;     // convergent at the end of the first period
    std::size_t len;   // period length of sqrt(d)
};

Period sqrt_period(const BigInt& d) {
    const BigInt a0 = isqrt(d);
    BigInt m = 0, den = 1, a = a0;
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (std::size_t i = 0;; ++i) {
        BigInt h = a * h1 + h2;
        BigInt k = a * k1 + k2;
        h2 = h1; h1 = h;
        k2 = k1; k1 = k;
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        if (a == 2 * a0) return {{h, k}, i + 1};
    }
}

void require_nonsquare(const BigInt& d) {
    if (d <= 0) throw Error("InvalidArgument", "d must be positive");
    if (is_square(d)) throw Error("PerfectSquareInput", "d = " + d.str() + " is a perfect square");
}

Solution mul(const BigInt& d, const Solution& x, const Solution& y) {
    return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}

// Minimal solution of x^2 - d y^2 = -1 if the period is odd.
std::optional<Solution> negative_unit(const BigInt& d) {
    Period p = sqrt_period(d);
    if (p.len % 2 == 0) return std::nullopt;
    return p.conv;
}

bool positive(const Solution& s) { return s.a > 0 && s.b > 0; }

// Sign of x + y sqrt d for a solution of norm t.
int alpha_sign(const Solution& s, const BigInt& t) {
    if (s.a >= 0 && s.b >= 0) return 1;
    if (s.a <= 0 && s.b <= 0) return -1;
    if (t > 0) return s.a > 0 ? 1 : -1;
    return s.b > 0 ? 1 : -1;
}

// Least positive element of the class of s.
Solution normalize(const BigInt& d, const BigInt& t, Solution s, const Solution& unit) {
    if (alpha_sign(s, t) < 0) s = {-s.a, -s.b};
    const Solution inv{unit.a, -unit.b};
    while (!positive(s)) s = mul(d, s, unit);
    for (;;) {
        Solution down = mul(d, s, inv);
        if (!positive(down)) break;
        s = down;
    }
    return s;
}

BigInt floor_quad(const BigInt& P, const BigInt& Q, const BigInt& sq) {
    // floor((P + sqrt D)/Q) with sq = floor(sqrt D), sqrt D irrational
    if (Q > 0) return floor_div(P + sq, Q);
    return -floor_div(P + sq, -Q) - 1;
}

// Lagrange-Matthews-Mollin: one representative per class of x^2 - D y^2 = N.
std::vector<Solution> lmm_representatives(const BigInt& D, const BigInt& N) {
    std::vector<Solution> reps;
    const BigInt sq = isqrt(D);
    const auto neg = negative_unit(D);
    const BigInt absN = N < 0 ? BigInt(-N) : N;
    for (const BigInt& f : divisors(absN)) {
        if (absN % (f * f) != 0) continue;
        const BigInt m = N / (f * f);
        const BigInt am = m < 0 ? BigInt(-m) : m;
        // z in (-am/2, am/2]
        const BigInt zlo = floor_div(-am, 2) + 1;
        const BigInt zhi = floor_div(am, 2);
        for (BigInt z = zlo; z <= zhi; ++z) {
            if (mod(z * z - D, am) != 0) continue;
            BigInt P = z, Q = am;
            BigInt B2 = 1, B1 = 0, G2 = -z, G1 = am;
            std::set<std::pair<BigInt, BigInt>> seen{{P, Q}};
            bool hit = false;
            BigInt r, s;
            for (;;) {
                BigInt a = floor_quad(P, Q, sq);
                BigInt B = a * B1 + B2;
                BigInt G = a * G1 + G2;
                B2 = B1; B1 = B;
                G2 = G1; G1 = G;
                BigInt Pn = a * Q - P;
                BigInt Qn = (D - Pn * Pn) / Q;
                P = Pn;
                Q = Qn;
                if (Q == 1 || Q == -1) {
                    r = G;
                    s = B;
                    hit = true;
                    break;
                }
                if (!seen.insert({P, Q}).second) break;
            }
            if (!hit) continue;
            BigInt nrm = r * r - D * s * s;
            if (nrm == m) {
                reps.push_back({f * r, f * s});
            } else if (nrm == -m && neg) {
                reps.push_back({f * (r * neg->a + s * neg->b * D), f * (r * neg->b + s * neg->a)});
            }
        }
    }
    return reps;
}

struct ClassData {
    std::vector<Solution> reps;       // normalized, ascending a
    std::vector<std::size_t> conj;
};

ClassData classes_of(const BigInt& D, const BigInt& N) {
    const Solution unit = fundamental_solution(D);
    std::vector<Solution> reps;
    for (const auto& s : lmm_representatives(D, N)) {
        Solution n = normalize(D, N, s, unit);
        if (std::find(reps.begin(), reps.end(), n) == reps.end()) reps.push_back(n);
    }
    std::sort(reps.begin(), reps.end(), [](const Solution& x, const Solution& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    ClassData out;
    out.reps = reps;
    for (const auto& r : reps) {
        Solution c = normalize(D, N, {r.a, -r.b}, unit);
        auto it = std::find(reps.begin(), reps.end(), c);
        if (it == reps.end()) throw Error("InternalError", "conjugate class not found");
        out.conj.push_back(static_cast<std::size_t>(it - reps.begin()));
    }
    return out;
}

// All solutions (X, b) with X > 0, b >= 0 of X^2 - r^2 b^2 = T.
std::vector<Solution> square_case(const BigInt& r, const BigInt& T) {
    std::vector<Solution> out;
    for (const BigInt& f0 : divisors(T)) {
        for (int sgn : {1, -1}) {
            BigInt f = sgn * f0;
            BigInt g = T / f;
            if (g < f) continue;
            BigInt sum = f + g, diff = g - f;
            if (sum <= 0 || mod(sum, 2) != 0 || mod(diff, 2 * r) != 0) continue;
            out.push_back({sum / 2, diff / (2 * r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Solution& x, const Solution& y) { return x.a < y.a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

bool satisfies(const Equation& eq, const Solution& s) {
    return eq.e1 * s.a * s.a - eq.e2 * s.b * s.b == eq.t;
}

Solution fundamental_solution(const BigInt& d) {
    require_nonsquare(d);
    Period p = sqrt_period(d);
    if (p.len % 2 == 0) return p.conv;
    return mul(d, p.conv, p.conv);
}

// ---------------------------------------------------------------- Stream

struct Stream::Impl {
    BigInt e1, e2, t, D, T;
    bool finite = false;
    std::vector<Solution> list;
    std::size_t pos = 0;
    Solution unit;

    struct Item {
        Solution s;
        bool operator>(const Item& o) const { return s.a > o.s.a; }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

    Solution advance(Solution s) const {
        while (mod(s.a, e1) != 0) s = mul(D, s, unit);
        return s;
    }

    // Does the class of s contain an element with e1 | X?  The orbit mod e1 is purely periodic.
    bool reaches(const Solution& s) const {
        if (e1 == 1) return true;
        const Solution start{mod(s.a, e1), mod(s.b, e1)};
        Solution cur = start;
        do {
            if (cur.a == 0) return true;
            Solution nx = mul(D, cur, unit);
            cur = {mod(nx.a, e1), mod(nx.b, e1)};
        } while (!(cur == start));
        return false;
    }
};

Stream::Stream(BigInt e1, BigInt e2, BigInt t) : impl_(std::make_unique<Impl>()) {
    if (e1 < 1 || e2 < 1) throw Error("InvalidArgument", "coefficients must be positive");
    if (t == 0) throw Error("InvalidArgument", "t must be nonzero");
    auto& I = *impl_;
    I.e1 = e1;
    I.e2 = e2;
    I.t = t;
    I.D = e1 * e2;
    I.T = e1 * t;
    BigInt r;
    if (is_square(I.D, &r)) {
        I.finite = true;
        for (const auto& s : square_case(r, I.T))
            if (s.b > 0 && mod(s.a, e1) == 0) I.list.push_back({s.a / e1, s.b});
        return;
    }
    I.unit = fundamental_solution(I.D);
    for (const auto& rep : classes_of(I.D, I.T).reps)
        if (I.reaches(rep)) I.heap.push({I.advance(rep)});
}

Stream::~Stream() = default;
Stream::Stream(Stream&&) noexcept = default;
Stream& Stream::operator=(Stream&&) noexcept = default;

std::optional<Solution> Stream::next() {
    auto& I = *impl_;
    if (I.finite) {
        if (I.pos >= I.list.size()) return std::nullopt;
        return I.list[I.pos++];
    }
    if (I.heap.empty()) return std::nullopt;
    Solution s = I.heap.top().s;
    I.heap.pop();
    I.heap.push({I.advance(mul(I.D, s, I.unit))});
    return Solution{s.a / I.e1, s.b};
}

std::vector<Solution> Stream::take(std::size_t count) {
    std::vector<Solution> out;
    while (out.size() < count) {
        auto s = next();
        if (!s) break;
        out.push_back(*s);
    }
    return out;
}

// ---------------------------------------------------------------- queries

std::optional<Solution> min_positive_solution(const Equation& eq) {
    return Stream(eq.e1, eq.e2, eq.t).next();
}

std::optional<Solution> generalized_min(const BigInt& e1, const BigInt& e2, const BigInt& t) {
    return min_positive_solution({e1, e2, t});
}

Solvability is_solvable(const Equation& eq) {
    Solvability out;
    out.nonzero_b = min_positive_solution(eq).has_value();
    if (!out.nonzero_b && eq.t < 0 && mod(-eq.t, eq.e2) == 0) {
        BigInt q = -eq.t / eq.e2;
        out.nonzero_b = is_square(q);  // a = 0
    }
    if (eq.t > 0 && mod(eq.t, eq.e1) == 0) out.zero_b = is_square(BigInt(eq.t / eq.e1));
    return out;
}

std::vector<SolutionClass> solution_classes(const BigInt& d, const BigInt& t) {
    require_nonsquare(d);
    if (t == 0) throw Error("InvalidArgument", "t must be nonzero");
    ClassData cd = classes_of(d, t);
    std::vector<SolutionClass> out;
    for (std::size_t i = 0; i < cd.reps.size(); ++i) out.push_back({cd.reps[i], cd.conj[i]});
    return out;
}

std::vector<Solution> solutions_in_order(const BigInt& d, const BigInt& t, std::size_t count) {
    require_nonsquare(d);
    auto out = Stream(1, d, t).take(count);
    if (out.empty()) throw Error("Unsolvable", "x^2 - " + d.str() + " y^2 = " + t.str() + " has no solution");
    return out;
}

Solution compose_to_unit(const BigInt& e1, const BigInt& e2, int eps, const Solution& s) {
    if (eps != 1 && eps != -1) throw Error("InvalidArgument", "eps must be +1 or -1");
    if ((e1 == 1 && eps == 1) || (e2 == 1 && eps == -1))
        throw Error("ExcludedDegenerateCase", "e1 = eps = 1 or e2 = -eps = 1");
    if (!satisfies({e1, e2, eps}, s)) throw Error("WrongEquation", "input does not solve the equation");
    return {e1 * s.a * s.a + e2 * s.b * s.b, 2 * s.a * s.b};
}

bool same_class(const BigInt& d, const BigInt& t, const Solution& s1, const Solution& s2) {
    require_nonsquare(d);
    if (!satisfies({1, d, t}, s1) || !satisfies({1, d, t}, s2))
        throw Error("WrongEquation", "input does not solve the equation");
    // alpha1 * conj(alpha2) / t must be integral
    BigInt x = s1.a * s2.a - d * s1.b * s2.b;
    BigInt y = s2.a * s1.b - s1.a * s2.b;
    return mod(x, t) == 0 && mod(y, t) == 0;
}

}  // namespace hk::pell
