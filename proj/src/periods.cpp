#include "hk/periods.hpp"

#include "hk/cones.hpp"
#include "hk/pell.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace hk::periods {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using lattice::DiscGroup;

namespace {

bool is_square_mod(i64 x, i64 mod) {
    i64 r = mod64(x, mod);
    for (i64 y = 0; y < mod; ++y)
        if ((y * y) % mod == r) return true;
    return false;
}

bool squarefree(i64 n) {
    for (auto p : prime_factors(n))
        if (n % (p * p) == 0) return false;
    return true;
}

void check_m2(i64 n, i64 gamma) {
    if (n < 1) throw Error("InvalidArgument", "n >= 1 required");
    if (gamma != 1 && gamma != 2) throw Error("InvalidArgument", "divisibility must be 1 or 2");
    if (gamma == 2 && mod64(n, 4) != 3) throw Error("BadCongruence", "divisibility 2 needs n = -1 mod 4");
}

void check_prime_p(i64 m) {
    if (m < 2) throw Error("InvalidArgument", "m >= 2 required");
    if (m - 1 != 1 && !is_prime(m - 1)) throw Error("UnsupportedParameters", "m-1 must be 1 or a prime");
}

Element zero_of(const DiscGroup& D) { return Element(D.orders().size(), 0); }

// Element data used by every enumeration below.
struct ElementInfo {
    Element x;
    i64 s;
    Rational q;
};

std::vector<ElementInfo> element_table(const DiscGroup& D) {
    std::vector<ElementInfo> out;
    for (auto& x : D.elements()) out.push_back({x, D.order(x), D.q(x)});
    return out;
}

bool q_matches(const ElementInfo& e, i64 kappa2) {
    return e.q == rat_mod(Rational(kappa2, e.s * e.s), Rational(2));
}

}  // namespace

std::string HeegnerKey::str() const {
    std::string st = "(";
    for (std::size_t i = 0; i < star.size(); ++i) st += (i ? "," : "") + std::to_string(star[i]);
    st += ")";
    return "d=" + std::to_string(d) + " kappa^2=" + std::to_string(kappa2) + " s=" + std::to_string(s) + " star=" + st +
           (multiplicity_uncertain ? " (multiplicity uncertain)" : "");
}

// ---- m = 2 ----

bool heegner_nonempty_m2(i64 n, i64 gamma, i64 e) {
    check_m2(n, gamma);
    if (e < 1) throw Error("InvalidArgument", "e >= 1 required");
    if (gamma == 1) return is_square_mod(e, 4 * n) || is_square_mod(e - n, 4 * n);
    return is_square_mod(e, n);
}

std::vector<HeegnerKey> keys_with_discriminant(i64 m, i64 n, i64 gamma, i64 d) {
    lattice::check_params(m, n, gamma);
    if (d < 1) throw Error("InvalidArgument", "d >= 1 required");
    auto D = lattice::disc_group(m, n, gamma);
    i64 size = static_cast<i64>(D.size());
    std::set<HeegnerKey> keys;
    for (const auto& e : element_table(D)) {
        i64 num = d * e.s * e.s;
        if (num % size) continue;
        i64 k2 = -num / size;
        if (k2 % 2) continue;
        if (!q_matches(e, k2)) continue;
        keys.insert({d, k2, e.s, D.sign_normalized(e.x)});
    }
    return {keys.begin(), keys.end()};
}

ComponentInfo heegner_components_m2(i64 n, i64 gamma, i64 e) {
    ComponentInfo info;
    if (!heegner_nonempty_m2(n, gamma, e)) {
        info.count = 0;
        info.note = "empty";
        return info;
    }
    info.keys = keys_with_discriminant(2, n, gamma, 2 * e);
    bool proven = (squarefree(n) && e % n == 0) || is_prime(n);
    if (proven) {
        info.count = static_cast<i64>(info.keys.size());
        info.note = is_prime(n) ? "n prime" : "n square-free and n | e";
    } else {
        info.note = "orbit classification not established for these parameters";
    }
    return info;
}

std::vector<HeegnerKey> excluded_heegner_m2(i64 n, i64 gamma) {
    check_m2(n, gamma);
    auto D = lattice::disc_group(2, n, gamma);
    std::vector<HeegnerKey> out;
    if (gamma == 2) {
        out.push_back({2 * n, -2, 1, zero_of(D)});
        return out;
    }
    // coordinates: (ell part mod 2, (u - nv) part mod 2n)
    out.push_back({2 * n, -2, 2, D.sign_normalized({1, 0})});
    if (mod64(n, 4) == 1) out.push_back({2 * n, -2, 2, D.sign_normalized({0, n})});
    if (mod64(n, 4) == 0) out.push_back({2 * n, -2, 2, D.sign_normalized({1, n})});
    out.push_back({8 * n, -2, 1, zero_of(D)});
    out.push_back({10 * n, -10, 2, D.sign_normalized({1, 0})});
    int v5 = valuation(n, 5);
    i64 rest = n;
    for (int i = 0; i < v5; ++i) rest /= 5;
    if (v5 % 2 == 1 && (rest % 5 == 1 || rest % 5 == 4)) {
        std::set<Element> stars;
        for (i64 a = 0; a < 2 * n; a += 2) {
            Element x{1, a};
            if (D.order(x) != 10) continue;
            if (D.q(x) != rat_mod(Rational(-10, 100), Rational(2))) continue;
            // kappa keeps divisibility 2 in the full lattice
            if (ambient_divisibility(2, n, 1, x) % 2 != 0) continue;
            stars.insert(D.sign_normalized(x));
        }
        for (const auto& x : stars) out.push_back({2 * n / 5, -10, 10, x, !squarefree(rest)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- general m ----

std::vector<WallConstraint> wall_constraints(i64 m) {
    if (m < 2) throw Error("InvalidArgument", "m >= 2 required");
    i64 p = m - 1;
    if (p != 1 && !is_prime(p)) throw Error("NonPrimePower", "m-1 must be 1 or a prime");
    std::vector<WallConstraint> out;
    for (i64 k = 0; k <= p; ++k)
        for (i64 a = -1; 4 * p * a < k * k; ++a) out.push_back({k, a, 2 * p * (4 * p * a - k * k)});
    return out;
}

i64 ambient_divisibility(i64 m, i64 n, i64 gamma, const Element& star) {
    lattice::check_params(m, n, gamma);
    auto D = lattice::disc_group(m, n, gamma);
    i64 p = m - 1;
    i64 s = D.order(star);
    auto y = D.vector_of(star);
    std::vector<BigInt> c;
    for (const auto& v : y) {
        Rational w = v * s;
        if (denominator(w) != 1) throw Error("InternalError", "s * kappa_* is not integral");
        c.push_back(numerator(w));
    }
    BigInt t = gamma == 1 ? gcd(gcd(c[1], 2 * p * c[0]), BigInt(s)) : gcd(gcd(p * c[0], c[1]), BigInt(s));
    return to_i64(t);
}

std::vector<HeegnerKey> realize_orthogonal_classes(i64 m, i64 n, i64 gamma, const WallConstraint& wc) {
    check_prime_p(m);
    if (gamma != 1 && gamma != 2) throw Error("UnsupportedParameters", "divisibility must be 1 or 2");
    lattice::check_params(m, n, gamma);
    if (wc.kappa_sq >= 0) throw Error("InvalidArgument", "kappa^2 must be negative");
    i64 p = m - 1;
    auto D = lattice::disc_group(m, n, gamma);
    i64 size = static_cast<i64>(D.size());
    auto table = element_table(D);
    std::vector<i64> tdiv;
    for (const auto& e : table) tdiv.push_back(ambient_divisibility(m, n, gamma, e.x));

    std::set<HeegnerKey> keys;
    i64 K = -wc.kappa_sq;
    for (i64 b = 1; b * b <= K; ++b) {
        if (K % (b * b)) continue;
        i64 N = -(K / (b * b));
        if (N % 2) continue;
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& e = table[i];
            if ((b * tdiv[i]) % (2 * p)) continue;
            if (!q_matches(e, N)) continue;
            i64 num = -N * size;
            if (num % (e.s * e.s)) continue;
            keys.insert({num / (e.s * e.s), N, e.s, D.sign_normalized(e.x)});
        }
    }
    return {keys.begin(), keys.end()};
}

std::vector<HeegnerKey> excluded_heegner(i64 m, i64 n, i64 gamma) {
    check_prime_p(m);
    std::set<HeegnerKey> keys;
    for (const auto& wc : wall_constraints(m))
        for (auto& k : realize_orthogonal_classes(m, n, gamma, wc)) keys.insert(k);
    return {keys.begin(), keys.end()};
}

// ---- coordinate oracle ----

std::set<OracleHit> coordinate_oracle(i64 m, i64 n, i64 gamma, i64 bound, unsigned threads) {
    lattice::check_params(m, n, gamma);
    std::set<OracleHit> hits;
    if (bound <= 0) return hits;
    i64 p = m - 1;
    auto D = lattice::disc_group(m, n, gamma);
    auto G0 = lattice::nonunimodular_gram(lattice::polarized_orthogonal(m, n, gamma));

    // explicit ambient basis u1, v1, ell, u3, v3
    const i64 amb[5][5] = {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, -2 * p, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
    std::vector<i64> h = gamma == 1 ? std::vector<i64>{1, n, 0, 0, 0} : std::vector<i64>{2, (n + p) / 2, 1, 0, 0};
    auto embed = [&](i64 c0, i64 c1, i64 X, i64 Y) -> std::vector<i64> {
        if (gamma == 1) return {c1, -n * c1, c0, X, Y};  // c0 on ell, c1 on u - n v
        return {-c1, p * c0 + c1 * (n + p) / 4, c0, X, Y};  // c0 on p v + ell, c1 on -u + (n+p)/4 v
    };
    auto apply = [&](const std::vector<i64>& v) {
        std::vector<i64> r(5, 0);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) r[i] += amb[i][j] * v[j];
        return r;
    };

    auto work = [&](i64 c0, std::set<OracleHit>& out) {
        for (i64 c1 = -bound; c1 <= bound; ++c1)
            for (i64 X = -bound; X <= bound; ++X)
                for (i64 Y = -bound; Y <= bound; ++Y) {
                    if (gcd64(gcd64(c0, c1), gcd64(X, Y)) != 1) continue;
                    auto v = embed(c0, c1, X, Y);
                    auto gv = apply(v);
                    i64 k2 = 0, hk = 0, t = 0;
                    for (int i = 0; i < 5; ++i) {
                        k2 += v[i] * gv[i];
                        hk += h[i] * gv[i];
                        t = gcd64(t, gv[i]);
                    }
                    if (hk != 0) throw Error("InternalError", "oracle vector not orthogonal to h");
                    if (k2 >= 0) continue;
                    i64 s = gcd64(gcd64(G0[0][0] * c0 + G0[0][1] * c1, G0[1][0] * c0 + G0[1][1] * c1), gcd64(X, Y));
                    auto x = D.element_of({Rational(c0, s), Rational(c1, s)});
                    out.insert({k2, s, D.sign_normalized(x), t});
                }
    };

    unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(2 * bound + 1));
    std::vector<std::set<OracleHit>> parts(nt);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nt; ++w)
        pool.emplace_back([&, w] {
            for (i64 c0 = -bound + w; c0 <= bound; c0 += nt) work(c0, parts[w]);
        });
    for (auto& th : pool) th.join();
    for (auto& part : parts) hits.insert(part.begin(), part.end());
    return hits;
}

// ---- Hilbert squares ----

std::vector<HilbPoint> hilbert_square_points(i64 n, i64 e, std::optional<i64> gamma) {
    if (n < 1 || e < 1) throw Error("InvalidArgument", "n, e >= 1 required");
    if (gamma && *gamma != 1 && *gamma != 2) throw Error("InvalidArgument", "divisibility must be 1 or 2");
    auto nu = cones::nef_slope_s2(e);
    std::vector<HilbPoint> out;
    pell::Stream st(1, e, -n);
    while (auto sol = st.next()) {
        if (sol->a == 0) continue;
        // a/b increases along the stream, so the first failure ends the search
        if (!(cones::ExtremalSlope::rational(Rational(sol->a, sol->b)) < nu)) break;
        if (gcd(sol->a, sol->b) != 1) continue;
        i64 g = sol->b % 2 == 0 ? 2 : 1;
        if (gamma && g != *gamma) continue;
        out.push_back({sol->a, sol->b, g});
    }
    return out;
}

std::optional<HilbPoint> hilbert_square_point(i64 n, i64 e, std::optional<i64> gamma) {
    auto all = hilbert_square_points(n, e, gamma);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<i64> nl_family(i64 n, i64 gamma, i64 a_max) {
    check_m2(n, gamma);
    std::vector<i64> out;
    if (gamma == 1) {
        for (i64 a = 1; a <= a_max; ++a)
            if (!(n == 1 && a == 2)) out.push_back(a * a + n);
    } else {
        for (i64 a = 0; a <= a_max; ++a)
            if (!(n == 3 && a == 1)) out.push_back(a * a + a + (n + 1) / 4);
    }
    return out;
}

std::set<HeegnerKey> oracle_keys(const std::set<OracleHit>& hits, i64 m, i64 n, i64 gamma, const WallConstraint& wc) {
    i64 p = m - 1;
    i64 disc = lattice::disc_order(m, n, gamma);
    std::set<HeegnerKey> out;
    for (const auto& x : hits) {
        if (x.kappa2 >= 0 || wc.kappa_sq % x.kappa2 != 0) continue;
        i64 b2 = wc.kappa_sq / x.kappa2, b = 0;
        while ((b + 1) * (b + 1) <= b2) ++b;
        if (b * b != b2 || (b * x.total_div) % (2 * p) != 0) continue;
        out.insert({-x.kappa2 * disc / (x.s * x.s), x.kappa2, x.s, x.star});
    }
    return out;
}

}  // namespace hk::periods
