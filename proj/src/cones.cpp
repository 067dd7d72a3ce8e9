#include "hk/cones.hpp"

#include <algorithm>

namespace hk::cones {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using pell::Solution;

ExtremalSlope ExtremalSlope::rational(const Rational& v) {
    if (v < 0) throw Error("InvalidArgument", "slopes are nonnegative");
    ExtremalSlope s;
    s.v_ = v;
    return s;
}

ExtremalSlope ExtremalSlope::sqrt_of(const Rational& r) {
    if (r <= 0) throw Error("InvalidArgument", "radicand must be positive");
    BigInt p, q;
    if (is_square(numerator(r), &p) && is_square(denominator(r), &q)) return rational(Rational(p, q));
    ExtremalSlope s;
    s.rational_ = false;
    s.v_ = r;
    return s;
}

std::string ExtremalSlope::str() const { return rational_ ? to_string(v_) : "sqrt(" + to_string(v_) + ")"; }

namespace {

std::optional<Solution> pmin(const BigInt& e1, const BigInt& e2, const BigInt& t) {
    return pell::generalized_min(e1, e2, t);
}

// Slopes e*x/(p*y) of walls from p y^2 - e x^2 = N with exact divisibility s, below `limit`.
std::vector<Rational> sm_walls_of_type(long long e, long long p, long long N, long long s, const ExtremalSlope& limit) {
    std::vector<Rational> out;
    pell::Stream st(p, e, N);
    while (auto sol = st.next()) {
        const BigInt& y = sol->a;
        const BigInt& x = sol->b;
        Rational slope(BigInt(e) * x, BigInt(p) * y);
        if (!(ExtremalSlope::rational(slope) < limit)) break;
        if (gcd(x, y) != 1) continue;
        if (gcd(x, 2 * p * y) != s) continue;
        out.push_back(slope);
    }
    return out;
}

}  // namespace

// ---- S^[2] ----

ExtremalSlope mov_slope_s2(long long e) {
    if (e < 1) throw Error("InvalidArgument", "e >= 1 required");
    BigInt r;
    if (is_square(BigInt(e), &r)) return ExtremalSlope::rational(Rational(r));
    auto u = pell::fundamental_solution(e);
    return ExtremalSlope::rational(Rational(e * u.b, u.a));
}

ExtremalSlope nef_slope_s2(long long e) {
    auto mov = mov_slope_s2(e);
    auto p5 = pmin(1, 4 * e, 5);
    if (!p5) return mov;
    return ExtremalSlope::rational(Rational(2 * e * p5->b, p5->a));
}

ConeReport walls_s2(long long e) {
    ConeReport r;
    r.mov_slope = mov_slope_s2(e);
    r.nef_slope = nef_slope_s2(e);
    auto p5 = pmin(1, 4 * e, 5);
    if (!p5) {
        r.nef_equals_mov = true;
        return r;
    }
    BigInt a1 = 1, b1 = 1;
    if (e > 1 && !is_square(e)) {
        auto u = pell::fundamental_solution(e);
        a1 = u.a;
        b1 = u.b;
    }
    const BigInt &a5 = p5->a, &b5 = p5->b;
    r.walls.push_back(Rational(2 * e * b5, a5));
    if (b1 % 2 == 0 && e % 5 != 0)
        r.walls.push_back(Rational(e * (a5 * b1 - 2 * a1 * b5), a1 * a5 - 2 * e * b1 * b5));
    std::sort(r.walls.begin(), r.walls.end());
    return r;
}

S2Row s2_row(long long e) {
    S2Row row;
    row.e = e;
    row.square = is_square(e);
    if (!row.square) row.p1 = pell::fundamental_solution(e);
    row.p5 = pmin(1, 4 * e, 5);
    row.mov = mov_slope_s2(e);
    row.nef = nef_slope_s2(e);
    return row;
}

// ---- S^[m] ----

MovRay mov_ray_sm(long long e, long long m) {
    if (e < 1 || m < 2) throw Error("InvalidArgument", "need e >= 1 and m >= 2");
    long long p = m - 1;
    BigInt r;
    if (is_square(BigInt(e) * p, &r)) return {{p, r}, 1};
    if (auto s = pmin(p, e, 1)) return {{p * s->a, e * s->b}, 2};
    // least solution of a^2 - e p b^2 = 1 with a = +-1 mod p; some power of the unit works
    auto unit = pell::fundamental_solution(BigInt(e) * p);
    Solution cur = unit;
    while (mod(cur.a, p) != 1 && mod(cur.a, p) != mod(BigInt(-1), p))
        cur = {cur.a * unit.a + BigInt(e) * p * cur.b * unit.b, cur.a * unit.b + cur.b * unit.a};
    return {{cur.a, e * cur.b}, 3};
}

std::optional<NefSpecial> nef_ray_sm_special(long long e, long long m) {
    if (e < 1 || m < 2) throw Error("InvalidArgument", "need e >= 1 and m >= 2");
    if (2 * m >= e + 3) return NefSpecial{{m + e, 2 * e}, m == e + 2};
    long long p = m - 1;
    if (e % p == 0) {
        BigInt b;
        if (is_square(BigInt(e / p), &b) && b >= 2) return NefSpecial{{1, b}, true};
    }
    return std::nullopt;
}

const std::vector<WallType>& wall_types(long long m) {
    static const std::vector<WallType> m2{{-2, 1}, {-10, 2}};
    static const std::vector<WallType> m3{{-2, 1}, {-4, 2}, {-4, 4}, {-12, 2}, {-36, 4}};
    static const std::vector<WallType> m4{{-2, 1}, {-6, 2}, {-6, 3}, {-6, 6}, {-14, 2}, {-24, 3}, {-78, 6}};
    if (m == 2) return m2;
    if (m == 3) return m3;
    if (m == 4) return m4;
    throw Error("UnsupportedM", "wall lists are known for m in {2, 3, 4}");
}

ConeReport walls_sm(long long e, long long m) {
    const auto& types = wall_types(m);
    if (e < 1) throw Error("InvalidArgument", "e >= 1 required");
    long long p = m - 1;
    ConeReport r;
    auto mov = mov_ray_sm(e, m);
    r.mov_slope = mov.case_tag == 1 ? ExtremalSlope::sqrt_of(Rational(e, p)) : ExtremalSlope::rational(mov.slope());
    for (const auto& t : types) {
        if (t.kappa_sq == -2) continue;  // these bound the movable cone
        for (const auto& w : sm_walls_of_type(e, p, -t.kappa_sq / 2, t.div, r.mov_slope)) r.walls.push_back(w);
    }
    std::sort(r.walls.begin(), r.walls.end());
    r.walls.erase(std::unique(r.walls.begin(), r.walls.end()), r.walls.end());
    r.nef_slope = r.walls.empty() ? r.mov_slope : ExtremalSlope::rational(r.walls.front());
    r.nef_equals_mov = r.walls.empty();
    return r;
}

// ---- fourfolds ----

ConeReport fourfold_cones(long long n, long long e_prime, std::size_t prefix) {
    if (mod64(n, 4) != 3) throw Error("BadCongruence", "n must be -1 mod 4");
    if (e_prime < 2) throw Error("InvalidArgument", "e' >= 2 required");
    ConeReport r;
    auto m1 = pmin(n, e_prime, -1);
    r.mov_slope = m1 ? ExtremalSlope::rational(Rational(n * m1->a, e_prime * m1->b))
                     : ExtremalSlope::sqrt_of(Rational(n, e_prime));
    auto m5 = pmin(n, 4 * e_prime, -5);
    if (!m5) {
        r.nef_slope = r.mov_slope;
        r.nef_equals_mov = true;
        return r;
    }
    r.nef_slope = ExtremalSlope::rational(Rational(n * m5->a, 2 * e_prime * m5->b));
    r.infinitely_many = !r.mov_slope.is_rational();
    pell::Stream st(n, 4 * e_prime, -5);
    while (auto s = st.next()) {
        Rational slope(n * s->a, 2 * e_prime * s->b);
        if (!(ExtremalSlope::rational(slope) < r.mov_slope)) break;
        r.walls.push_back(slope);
        if (r.infinitely_many && r.walls.size() >= prefix) break;
    }
    return r;
}

// ---- embeddings ----

bool k_very_ample(long long a, long long e, long long k) {
    if (a < 1 || e < 1 || k < 0) throw Error("InvalidArgument", "need a, e >= 1 and k >= 0");
    if (a == 1) return 2 * k <= e;
    return k <= 2 * (a - 1) * e - 2;
}

EmbeddingStatus hilb_embedding_status(long long a, long long e, long long m) {
    if (a < 1 || e < 1 || m < 2) throw Error("InvalidArgument", "need a, e >= 1 and m >= 2");
    if (a == 1) return {2 * (m - 1) <= e, 2 * m <= e};
    return {m <= 2 * (a - 1) * e - 1, m <= 2 * (a - 1) * e - 2};
}

ModuliEmbedding moduli_embedding_status(long long m, long long n, long long gamma) {
    if (m < 2 || n < 1) throw Error("InvalidArgument", "need m >= 2 and n >= 1");
    if (gamma != 1 && gamma != 2) throw Error("InvalidArgument", "divisibility must be 1 or 2");
    BigInt dim = binomial(BigInt(n + m + 1), static_cast<unsigned>(m)) - 1;
    if (gamma == 1) return {n >= m - 1, n >= m + 1, dim};
    return {n >= m + 3, n >= m + 5, dim};
}

}  // namespace hk::cones
