#include "hk/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hk::lattice {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Rational rmod(const Rational& q, i64 r) { return rat_mod(q, Rational(r)); }

i64 lcm64(i64 a, i64 b) { return a / gcd64(a, b) * b; }

bool is_square_mod(i64 a, i64 n) {
    if (n == 1) return true;
    a = mod64(a, n);
    for (i64 x = 0; x <= n / 2; ++x)
        if (mod64(x * x, n) == a) return true;
    return false;
}

i64 inverse_mod(i64 a, i64 n) {
    a = mod64(a, n);
    for (i64 x = 1; x < n; ++x)
        if (mod64(a * x, n) == 1) return x;
    throw Error("InvalidArgument", "no inverse modulo " + std::to_string(n));
}

BigInt det_of(const IntMatrix& g) {
    // Bareiss on exact integers
    std::size_t k = g.size();
    if (k == 0) return 1;
    std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = g[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < k && a[r][p] == 0) ++r;
            if (r == k) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i)
            for (std::size_t j = p + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

IntMatrix e8_gram() {
    IntMatrix g(8, std::vector<i64>(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto& e : edges) g[e[0]][e[1]] = g[e[1]][e[0]] = 1;
    return g;
}

// Smith form D = P G Q; only Q and Q^{-1} are tracked.
struct Smith {
    std::vector<i64> diag;
    IntMatrix q, qinv;
};

Smith smith(IntMatrix a) {
    std::size_t k = a.size();
    Smith s;
    s.q.assign(k, std::vector<i64>(k, 0));
    s.qinv = s.q;
    for (std::size_t i = 0; i < k; ++i) s.q[i][i] = s.qinv[i][i] = 1;

    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : s.q) std::swap(row[i], row[j]);
        std::swap(s.qinv[i], s.qinv[j]);
    };
    auto col_add = [&](std::size_t i, std::size_t j, i64 c) {  // col_i += c col_j
        for (auto& row : a) row[i] += c * row[j];
        for (auto& row : s.q) row[i] += c * row[j];
        for (std::size_t t = 0; t < k; ++t) s.qinv[j][t] -= c * s.qinv[i][t];
    };
    auto row_add = [&](std::size_t i, std::size_t j, i64 c) {
        for (std::size_t t = 0; t < k; ++t) a[i][t] += c * a[j][t];
    };

    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t bi = k, bj = k;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < k; ++j)
                    if (a[i][j] != 0 && (bi == k || std::abs(a[i][j]) < std::abs(a[bi][bj]))) bi = i, bj = j;
            if (bi == k) break;
            std::swap(a[t], a[bi]);
            if (bj != t) col_swap(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < k; ++i) {
                row_add(i, t, -(a[i][t] / a[t][t]));
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                col_add(j, t, -(a[t][j] / a[t][t]));
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = k;
            for (std::size_t i = t + 1; i < k && bad == k; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == k) break;
            row_add(t, bad, 1);
        }
        if (a[t][t] < 0) {
            for (auto& row : a) row[t] = -row[t];
            for (auto& row : s.q) row[t] = -row[t];
            for (auto& x : s.qinv[t]) x = -x;
        }
        s.diag.push_back(a[t][t]);
    }
    return s;
}

}  // namespace

Block Block::hyperbolic() { return {Kind::U, {{0, 1}, {1, 0}}}; }
Block Block::e8() { return {Kind::E8, e8_gram()}; }
Block Block::i1(i64 t) {
    if (t == 0 || t % 2 != 0) throw Error("InvalidArgument", "I1(t) needs a nonzero even t");
    return {Kind::I1, {{t}}};
}
Block Block::custom(IntMatrix g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].size() != g.size()) throw Error("InvalidArgument", "Gram block must be square");
        if (g[i][i] % 2 != 0) throw Error("InvalidArgument", "Gram block must be even");
        for (std::size_t j = 0; j < i; ++j)
            if (g[i][j] != g[j][i]) throw Error("InvalidArgument", "Gram block must be symmetric");
    }
    return {Kind::Gram, std::move(g)};
}

std::string Block::name() const {
    switch (kind) {
        case Kind::U: return "U";
        case Kind::E8: return "E8(-1)";
        case Kind::I1: return "I1(" + std::to_string(gram[0][0]) + ")";
        case Kind::Gram: {
            std::ostringstream os;
            os << "Gram[";
            for (std::size_t i = 0; i < gram.size(); ++i) {
                os << (i ? ";" : "");
                for (std::size_t j = 0; j < gram.size(); ++j) os << (j ? "," : "") << gram[i][j];
            }
            os << "]";
            return os.str();
        }
    }
    return "?";
}

std::size_t LatticeSpec::rank() const {
    std::size_t r = 0;
    for (const auto& b : blocks) r += b.rank();
    return r;
}

BigInt LatticeSpec::det() const {
    BigInt d = 1;
    for (const auto& b : blocks) d *= det_of(b.gram);
    return d;
}

std::size_t LatticeSpec::offset(std::size_t block) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < block; ++i) r += blocks[i].rank();
    return r;
}

int LatticeSpec::count(Block::Kind k) const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.kind == k; }));
}

std::string LatticeSpec::describe() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? " + " : "") + blocks[i].name();
    return s;
}

LatticeSpec unimodular_m() {
    return {{Block::hyperbolic(), Block::hyperbolic(), Block::e8(), Block::e8()}};
}

LatticeSpec k3() {
    auto s = unimodular_m();
    s.blocks.insert(s.blocks.begin(), Block::hyperbolic());
    return s;
}

LatticeSpec k3m(i64 m) {
    if (m < 2) throw Error("InvalidArgument", "m >= 2 required");
    auto s = k3();
    s.blocks.push_back(Block::i1(-(2 * m - 2)));
    return s;
}

LatticeSpec k3_polarized(i64 e) {
    if (e < 1) throw Error("InvalidArgument", "e >= 1 required");
    auto s = unimodular_m();
    s.blocks.push_back(Block::i1(-2 * e));
    return s;
}

void check_params(i64 m, i64 n, i64 gamma) {
    if (m < 2 || n < 1) throw Error("InvalidArgument", "need m >= 2 and n >= 1");
    if (gamma != 1 && gamma != 2) throw Error("InvalidArgument", "divisibility must be 1 or 2");
    if (gamma == 2 && mod64(n + m, 4) != 1)
        throw Error("IncompatibleDivisibility", "divisibility 2 needs n + m = 1 mod 4");
}

LatticeSpec polarized_orthogonal(i64 m, i64 n, i64 gamma) {
    check_params(m, n, gamma);
    auto s = unimodular_m();
    i64 p = m - 1;
    if (gamma == 1) {
        s.blocks.push_back(Block::i1(-2 * p));
        s.blocks.push_back(Block::i1(-2 * n));
    } else {
        s.blocks.push_back(Block::custom({{-2 * p, -p}, {-p, -(n + p) / 2}}));
    }
    return s;
}

i64 disc_order(i64 m, i64 n, i64 gamma) { return (2 * n) * (2 * m - 2) / (gamma * gamma); }

LatticeVector make_vector(const LatticeSpec& spec, std::vector<i64> coords) {
    if (coords.size() != spec.rank()) throw Error("InvalidArgument", "coordinate count does not match rank");
    return {std::make_shared<const LatticeSpec>(spec), std::move(coords)};
}

BigInt pairing(const LatticeVector& x, const LatticeVector& y) {
    const auto& spec = *x.lattice;
    BigInt s = 0;
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j)
                if (b.gram[i][j]) s += BigInt(x.coords[off + i]) * b.gram[i][j] * y.coords[off + j];
        off += b.rank();
    }
    return s;
}

BigInt square(const LatticeVector& x) { return pairing(x, x); }

i64 divisibility(const LatticeVector& v) {
    const auto& spec = *v.lattice;
    BigInt g = 0;
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        for (std::size_t i = 0; i < b.rank(); ++i) {
            BigInt s = 0;
            for (std::size_t j = 0; j < b.rank(); ++j) s += BigInt(b.gram[i][j]) * v.coords[off + j];
            g = gcd(g, s);
        }
        off += b.rank();
    }
    if (g == 0) throw Error("ZeroVector", "divisibility of the zero vector");
    return to_i64(g);
}

bool is_primitive(const LatticeVector& v) {
    i64 g = 0;
    for (auto c : v.coords) g = gcd64(g, c);
    return g == 1;
}

// ---- discriminant groups ----

DiscGroup::DiscGroup(IntMatrix gram, std::vector<RatVector> preferred) : gram_(std::move(gram)) {
    if (det_of(gram_) == 0) throw Error("InvalidArgument", "degenerate lattice");
    auto s = smith(gram_);
    snf_ = s.diag;
    qmat_ = s.q;
    qinv_ = s.qinv;
    for (auto d : snf_) {
        size_ *= static_cast<std::size_t>(d);
        if (d > 1) invariant_.push_back(d);
    }
    if (!preferred.empty() && try_generators(preferred)) return;

    // Small groups: look for an orthogonal pair realizing the invariant factors.
    if (invariant_.size() == 2 && size_ <= 4096) {
        std::vector<RatVector> smith_basis;
        for (std::size_t i = 0; i < snf_.size(); ++i) {
            if (snf_[i] == 1) continue;
            RatVector v(snf_.size());
            for (std::size_t r = 0; r < snf_.size(); ++r) v[r] = Rational(qmat_[r][i], snf_[i]);
            smith_basis.push_back(v);
        }
        try_generators(smith_basis);
        std::vector<Element> first, second;
        for (const auto& x : elements()) {
            auto o = order(x);
            if (o == invariant_[0]) first.push_back(x);
            if (o == invariant_[1]) second.push_back(x);
        }
        int budget = 200;  // generation checks, each O(|D|)
        for (const auto& y : second) {
            for (const auto& x : first) {
                if (b(x, y) != 0) continue;
                if (--budget < 0) break;
                auto gx = vector_of(x), gy = vector_of(y);
                if (try_generators({gx, gy})) return;
            }
            if (budget < 0) break;
        }
        return;
    }
    std::vector<RatVector> basis;
    for (std::size_t i = 0; i < snf_.size(); ++i) {
        if (snf_[i] == 1) continue;
        RatVector v(snf_.size());
        for (std::size_t r = 0; r < snf_.size(); ++r) v[r] = Rational(qmat_[r][i], snf_[i]);
        basis.push_back(v);
    }
    try_generators(basis);
}

std::vector<i64> DiscGroup::smith_coords(const RatVector& v) const {
    std::vector<i64> c(snf_.size());
    for (std::size_t i = 0; i < snf_.size(); ++i) {
        Rational w = 0;
        for (std::size_t j = 0; j < snf_.size(); ++j) w += qinv_[i][j] * v[j];
        w *= snf_[i];
        if (denominator(w) != 1) throw Error("InvalidArgument", "vector is not in the dual lattice");
        c[i] = mod64(to_i64(numerator(w)), snf_[i]);
    }
    return c;
}

Rational DiscGroup::form(const RatVector& x, const RatVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i)
        for (std::size_t j = 0; j < gram_.size(); ++j)
            if (gram_[i][j]) s += x[i] * gram_[i][j] * y[j];
    return s;
}

bool DiscGroup::try_generators(const std::vector<RatVector>& cand) {
    std::vector<RatVector> gens;
    std::vector<std::vector<i64>> coords;
    std::vector<i64> ords;
    for (const auto& g : cand) {
        std::vector<i64> c;
        try {
            c = smith_coords(g);
        } catch (const Error&) {
            return false;
        }
        i64 o = 1;
        for (std::size_t i = 0; i < c.size(); ++i) o = lcm64(o, snf_[i] / gcd64(snf_[i], c[i]));
        if (o == 1) continue;
        gens.push_back(g);
        coords.push_back(c);
        ords.push_back(o);
    }
    std::size_t prod = 1;
    for (auto o : ords) prod *= static_cast<std::size_t>(o);
    if (prod != size_) return false;

    std::map<std::vector<i64>, Element> table;
    Element x(gens.size(), 0);
    std::vector<i64> acc(snf_.size(), 0);
    for (;;) {
        if (!table.emplace(acc, x).second) return false;
        std::size_t i = 0;
        for (; i < x.size(); ++i) {
            // odometer step on digit i, keeping acc = sum x_i c_i (mod snf)
            ++x[i];
            for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = mod64(acc[r] + coords[i][r], snf_[r]);
            if (x[i] < ords[i]) break;
            x[i] = 0;  // ords[i] * c_i = 0, so acc already wrapped
        }
        if (i == x.size()) break;
    }
    gens_ = gens;
    orders_ = ords;
    lookup_ = std::move(table);
    gen_q_.clear();
    gen_b_.assign(gens_.size(), std::vector<Rational>(gens_.size()));
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        gen_q_.push_back(rmod(form(gens_[i], gens_[i]), 2));
        for (std::size_t j = 0; j < gens_.size(); ++j) gen_b_[i][j] = rmod(form(gens_[i], gens_[j]), 1);
    }
    return true;
}

std::vector<DiscGroup::Element> DiscGroup::elements() const {
    std::vector<Element> out;
    Element x(orders_.size(), 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == orders_[i]) x[i++] = 0;
        if (i == x.size()) break;
    }
    return out;
}

RatVector DiscGroup::vector_of(const Element& x) const {
    RatVector v(gram_.size(), Rational(0));
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t r = 0; r < v.size(); ++r) v[r] += x[i] * gens_[i][r];
    return v;
}

DiscGroup::Element DiscGroup::element_of(const RatVector& v) const { return lookup_.at(smith_coords(v)); }

Rational DiscGroup::q(const Element& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        s += x[i] * x[i] * gen_q_[i];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j]) s += 2 * x[i] * x[j] * gen_b_[i][j];
    }
    return rmod(s, 2);
}

Rational DiscGroup::b(const Element& x, const Element& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] && y[j]) s += x[i] * y[j] * gen_b_[i][j];
    return rmod(s, 1);
}

i64 DiscGroup::order(const Element& x) const {
    i64 o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = lcm64(o, orders_[i] / gcd64(orders_[i], x[i]));
    return o;
}

DiscGroup::Element DiscGroup::negate(const Element& x) const {
    Element y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = mod64(-x[i], orders_[i]);
    return y;
}

DiscGroup::Element DiscGroup::sign_normalized(const Element& x) const { return std::min(x, negate(x)); }

IntMatrix nonunimodular_gram(const LatticeSpec& spec) {
    std::size_t k = 0;
    for (const auto& b : spec.blocks)
        if (!b.unimodular()) k += b.rank();
    IntMatrix g(k, std::vector<i64>(k, 0));
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        if (b.unimodular()) continue;
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j) g[off + i][off + j] = b.gram[i][j];
        off += b.rank();
    }
    return g;
}

RatVector nonunimodular_part(const LatticeSpec& spec, const RatVector& full) {
    RatVector out;
    std::size_t off = 0;
    for (const auto& b : spec.blocks) {
        if (!b.unimodular())
            for (std::size_t i = 0; i < b.rank(); ++i) out.push_back(full[off + i]);
        off += b.rank();
    }
    return out;
}

DiscGroup disc_group(const LatticeSpec& spec) {
    auto g = nonunimodular_gram(spec);
    std::vector<RatVector> pref;
    bool diagonal = true;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && g[i][j] != 0) diagonal = false;
    if (diagonal)
        for (std::size_t i = 0; i < g.size(); ++i) {
            RatVector v(g.size(), Rational(0));
            v[i] = Rational(1, std::abs(g[i][i]));
            pref.push_back(v);
        }
    return DiscGroup(g, pref);
}

DiscGroup disc_group(i64 m, i64 n, i64 gamma) {
    auto spec = polarized_orthogonal(m, n, gamma);
    auto g = nonunimodular_gram(spec);
    i64 p = m - 1;
    if (gamma == 1) return DiscGroup(g, {{Rational(1, 2 * p), 0}, {0, Rational(1, 2 * n)}});
    if (n == p && n % 2 == 0) {
        DiscGroup d(g, {{Rational(1, n), Rational(-1, n)}, {0, Rational(1, n)}});
        return d;
    }
    return DiscGroup(g, {{Rational(1, p), 0}, {Rational(1, n), Rational(-2, n)}});
}

// ---- Eichler invariants ----

OrbitKey orbit_key(const LatticeVector& v) {
    const auto& spec = *v.lattice;
    if (spec.count(Block::Kind::U) < 2) throw Error("NoDoubleU", "lattice does not contain U + U");
    if (!is_primitive(v)) throw Error("NotPrimitive", "vector is not primitive");
    OrbitKey k;
    k.square = square(v);
    i64 d = divisibility(v);
    // v/d lies in the dual lattice, and its class has order exactly d
    RatVector full;
    for (auto c : v.coords) full.push_back(Rational(c, d));
    auto part = nonunimodular_part(spec, full);
    auto disc = disc_group(spec);
    auto x = disc.element_of(part);
    k.star_order = disc.order(x);
    k.star_q = disc.q(x);
    return k;
}

bool exists_primitive_vector(const LatticeSpec& spec, const OrbitKey& key) {
    if (spec.count(Block::Kind::U) < 2) throw Error("NoDoubleU", "lattice does not contain U + U");
    if (key.star_order < 1) return false;
    Rational want = rmod(key.star_q, 2);
    if (want != rmod(Rational(key.square) / (key.star_order * key.star_order), 2)) return false;
    auto disc = disc_group(spec);
    for (const auto& x : disc.elements())
        if (disc.order(x) == key.star_order && disc.q(x) == want) return true;
    return false;
}

i64 monodromy_index(i64 m) {
    if (m < 2) throw Error("InvalidArgument", "m >= 2 required");
    auto rho = static_cast<int>(prime_factors(m - 1).size());
    return i64(1) << std::max(rho - 1, 0);
}

ComponentCount moduli_component_count(i64 m, i64 n, i64 gamma) {
    if (m < 2 || n < 1 || gamma < 1 || (2 * n) % gamma || (2 * m - 2) % gamma)
        throw Error("InvalidArgument", "divisibility must divide 2n and 2m-2");
    i64 p = m - 1;
    const std::string tabulated = "tabulated irreducibility criterion";
    const std::string transcribed =
        "prime-power criterion transcribed as published; its source carried an extra hypothesis";
    if (gamma == 1) return {1, tabulated};
    if (gamma == 2) {
        if (mod64(n + m, 4) == 1) return {1, tabulated};
        return {std::nullopt, "divisibility 2 with n + m != 1 mod 4 is not covered"};
    }
    if (gamma == 3 && gcd64(p, n) % 9 == 0) return {1, tabulated};
    if (gamma == 4) {
        int a = valuation(p, 2), b = valuation(n, 2);
        if ((a == 2 && b == 2 && mod64(n + m, 16) == 1) || (a == 3 && b == 3) || gcd64(p, n) % 16 == 0)
            return {1, transcribed};
    }
    auto primes = prime_factors(gamma);
    if (primes.size() == 1) {
        i64 q = primes[0];
        int a = valuation(gamma, q);
        if (q != 2 && valuation(p, q) == a && valuation(n, q) == a) {
            i64 pa = gamma;
            i64 ratio = mod64(-(p / pa) * inverse_mod(n / pa, pa), pa);
            if (is_square_mod(ratio, pa)) return {1, transcribed};
        }
        if (q == 2 && a >= 2 && valuation(p, 2) == a - 1 && valuation(n, 2) == a - 1) {
            i64 mod = i64(1) << (a + 1);
            i64 unit = i64(1) << (a - 1);
            i64 ratio = mod64(-(p / unit) * inverse_mod(n / unit, mod), mod);
            if (is_square_mod(ratio, mod)) return {1, transcribed};
        }
    }
    bool squarefree_odd = gamma % 2 == 1;
    for (auto q : primes) squarefree_odd = squarefree_odd && valuation(gamma, q) == 1;
    if (squarefree_odd && p % gamma == 0 && n % gamma == 0) {
        i64 a = p / gamma, b = n / gamma;
        if (gcd64(gcd64(a, b), gamma) == 1 && is_square_mod(-a * b, n))
            return {i64(1) << (primes.size() - 1), "square-free odd divisibility count"};
    }
    return {std::nullopt, "not covered by the known cases"};
}

DualParams strange_dual_params(i64 m, i64 n, i64 gamma) {
    check_params(m, n, gamma);
    DualParams d{n + 1, m - 1, gamma};
    check_params(d.m, d.n, d.gamma);
    auto a = nonunimodular_gram(polarized_orthogonal(m, n, gamma));
    auto b = nonunimodular_gram(polarized_orthogonal(d.m, d.n, gamma));
    if (gamma == 1) {
        std::swap(b[0][0], b[1][1]);
        if (a != b) throw Error("InternalError", "dual blocks differ");
    } else {
        // (x, y) -> (-x, 2x + y)
        IntMatrix t{{-1, 0}, {2, 1}};
        IntMatrix r(2, std::vector<i64>(2, 0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) r[i][j] += t[k][i] * a[k][l] * t[l][j];
        // the image has the dual Gram with its basis vectors swapped
        IntMatrix swapped{{b[1][1], b[1][0]}, {b[0][1], b[0][0]}};
        if (r != b && r != swapped) throw Error("InternalError", "base change does not match dual block");
    }
    return d;
}

bool polarization_determined(i64 m, i64 n, i64 gamma) {
    if (gamma < 1 || (2 * n) % gamma || (2 * m - 2) % gamma)
        throw Error("InvalidArgument", "divisibility must divide 2n and 2m-2");
    if (gamma == 2) return true;
    return gcd64(gcd64(2 * n / gamma, (2 * m - 2) / gamma), gamma) == 1;
}

i64 heegner_finiteness_bound(i64 m, i64 n, i64 gamma, i64 d) {
    check_params(m, n, gamma);
    if (d < 0) throw Error("InvalidArgument", "d must be nonnegative");
    return d * disc_order(m, n, gamma);
}

}  // namespace hk::lattice
