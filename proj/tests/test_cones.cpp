#include "doctest.h"
#include "hk/cones.hpp"
#include "oracles.hpp"

#include <set>

using namespace hk;
using namespace hk::cones;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }
ExtremalSlope Q(long long p, long long q = 1) { return ExtremalSlope::rational(R(p, q)); }

// Walls of S^[m] by exhaustive search over y <= ymax for every listed type.
std::set<Rational> brute_walls(long long e, long long m, long long ymax, const ExtremalSlope& mov) {
    std::set<Rational> out;
    long long p = m - 1;
    for (const auto& t : wall_types(m)) {
        if (t.kappa_sq == -2) continue;
        long long N = -t.kappa_sq / 2;
        for (long long y = 1; y <= ymax; ++y) {
            long long rest = p * y * y - N;
            if (rest <= 0 || rest % e) continue;
            long long x = oracle::isqrt64(rest / e);
            if (x * x != rest / e) continue;
            if (gcd64(x, y) != 1 || gcd64(x, 2 * p * y) != t.div) continue;
            Rational s(e * x, p * y);
            if (ExtremalSlope::rational(s) < mov) out.insert(s);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("extremal slope arithmetic") {
    CHECK(ExtremalSlope::sqrt_of(R(9, 4)) == Q(3, 2));
    CHECK_FALSE(ExtremalSlope::sqrt_of(R(3, 2)).is_rational());
    CHECK(ExtremalSlope::sqrt_of(R(3, 2)).str() == "sqrt(3/2)");
    CHECK(Q(60, 19).str() == "60/19");
    CHECK(Q(2).str() == "2");
    CHECK(Q(3, 4) < ExtremalSlope::sqrt_of(R(3, 2)));
    CHECK(ExtremalSlope::sqrt_of(R(3, 2)) < Q(5, 4));
}

TEST_CASE("S^[2] cone table") {
    const char* mov[] = {"1", "4/3", "3/2", "2", "20/9", "12/5", "21/8", "8/3", "3", "60/19", "33/10", "24/7", "2340/649"};
    const char* nef[] = {"2/3", "=", "=", "=", "2", "=", "=", "=", "=", "=", "22/7", "=", "="};
    for (long long e = 1; e <= 13; ++e) {
        CAPTURE(e);
        CHECK(mov_slope_s2(e).str() == mov[e - 1]);
        auto n = nef_slope_s2(e);
        if (std::string(nef[e - 1]) == "=")
            CHECK(n == mov_slope_s2(e));
        else
            CHECK(n.str() == nef[e - 1]);
    }
    auto r13 = s2_row(13);
    CHECK(*r13.p1 == pell::Solution{649, 180});
    CHECK_FALSE(r13.p5.has_value());
    CHECK(*s2_row(11).p5 == pell::Solution{7, 1});
    CHECK(*s2_row(5).p5 == pell::Solution{5, 1});
    CHECK(s2_row(9).square);
}

TEST_CASE("S^[2] walls table") {
    std::map<long long, std::vector<Rational>> want{
        {5, {R(2)}},           {11, {R(22, 7)}},      {19, {R(38, 9)}}, {29, {R(58, 11), R(12122, 2251)}},
        {31, {R(3658, 657)}},  {41, {R(82, 13), R(2542, 397)}}, {55, {R(22, 3)}}, {71, {R(142, 17)}}};
    std::map<long long, Rational> mov{{5, R(20, 9)},         {11, R(33, 10)},      {19, R(741, 170)},
                                      {29, R(52780, 9801)},  {31, R(8463, 1520)},  {41, R(13120, 2049)},
                                      {55, R(660, 89)},      {71, R(29323, 3480)}};
    for (auto& [e, w] : want) {
        CAPTURE(e);
        auto r = walls_s2(e);
        CHECK(r.walls == w);
        CHECK(r.mov_slope == ExtremalSlope::rational(mov[e]));
        CHECK_FALSE(r.nef_equals_mov);
    }
    CHECK(walls_s2(3).nef_equals_mov);
    CHECK(walls_s2(3).walls.empty());
}

TEST_CASE("S^[2] walls are exactly the P_4e(5) rays inside the movable cone") {
    for (long long e = 1; e <= 300; ++e) {
        CAPTURE(e);
        auto r = walls_s2(e);
        std::vector<Rational> stream;
        pell::Stream st(1, 4 * e, 5);
        while (auto s = st.next()) {
            Rational slope(2 * e * s->b, s->a);
            if (!(ExtremalSlope::rational(slope) < r.mov_slope)) break;
            stream.push_back(slope);
        }
        CHECK(r.walls == stream);
        CHECK(r.walls.size() <= 2);
        BigInt b1 = 1;
        if (e > 1 && !is_square(e)) b1 = pell::fundamental_solution(e).b;
        if (!r.walls.empty()) CHECK((r.walls.size() == 2) == (b1 % 2 == 0 && e % 5 != 0));
        for (const auto& w : r.walls) CHECK(ExtremalSlope::rational(w) < r.mov_slope);
    }
}

TEST_CASE("nef slope lower bound") {
    // nu_e >= floor(sqrt e), with equality iff e is a square > 1, except at e = 1 (nu = 2/3) and
    // e = 5 (nu = 2), both values of the printed cone table.
    std::vector<long long> exceptions;
    for (long long e = 1; e <= 2000; ++e) {
        auto nu = nef_slope_s2(e);
        long long f = oracle::isqrt64(e);
        CAPTURE(e);
        bool bound = ExtremalSlope::rational(R(f)) <= nu;
        bool eq = (nu == ExtremalSlope::rational(R(f))) == (e > 1 && f * f == e);
        if (!bound || !eq) exceptions.push_back(e);
        CHECK(nu <= mov_slope_s2(e));
    }
    CHECK(exceptions == std::vector<long long>{1, 5});
    CHECK(nef_slope_s2(1) == Q(2, 3));
    CHECK(nef_slope_s2(5) == Q(2));
}

TEST_CASE("movable ray of S^[m]") {
    auto a = mov_ray_sm(5, 3);
    CHECK(a.ray == DivisorClass{19, 30});
    CHECK(a.case_tag == 3);
    auto b = mov_ray_sm(2, 3);
    CHECK(b.ray == DivisorClass{2, 2});
    CHECK(b.case_tag == 1);
    auto c = mov_ray_sm(2, 2);
    CHECK(c.ray == DivisorClass{3, 4});
    CHECK(c.slope() == R(4, 3));
    for (long long e = 1; e <= 200; ++e) {
        auto s = mov_slope_s2(e);
        CHECK(ExtremalSlope::rational(mov_ray_sm(e, 2).slope()) == s);
    }
    // squares of the classes: 0, 2e(m-1), 2e in the three cases
    for (long long m = 2; m <= 9; ++m)
        for (long long e = 1; e <= 60; ++e) {
            auto r = mov_ray_sm(e, m);
            BigInt sq = 2 * e * r.ray.cL * r.ray.cL - 2 * (m - 1) * r.ray.cDelta * r.ray.cDelta;
            CAPTURE(m);
            CAPTURE(e);
            if (r.case_tag == 1) CHECK(sq == 0);
            if (r.case_tag == 2) CHECK(sq == 2 * e * (m - 1));
            if (r.case_tag == 3) {
                CHECK(sq == 2 * e);
                auto am = mod(r.ray.cL, m - 1);
                CHECK((am == mod(BigInt(1), m - 1) || am == mod(BigInt(-1), m - 1)));
            }
        }
}

TEST_CASE("special nef rays") {
    auto a = nef_ray_sm_special(2, 5);
    REQUIRE(a);
    CHECK(a->ray == DivisorClass{7, 4});
    CHECK_FALSE(a->nef_equals_mov);
    auto b = nef_ray_sm_special(4, 2);
    REQUIRE(b);
    CHECK(b->ray == DivisorClass{1, 2});
    CHECK(b->nef_equals_mov);
    auto c = nef_ray_sm_special(3, 5);
    REQUIRE(c);
    CHECK(c->ray == DivisorClass{8, 6});
    CHECK(c->nef_equals_mov);
    CHECK_FALSE(nef_ray_sm_special(13, 2).has_value());
}

TEST_CASE("walls of S^[m]") {
    auto r = walls_sm(5, 3);
    CHECK(r.walls == std::vector<Rational>{R(10, 7), R(20, 13)});
    CHECK(r.mov_slope == Q(30, 19));
    CHECK(walls_sm(5, 2).walls == std::vector<Rational>{R(2)});
    // a^2 - 6b^2 = 3 has (3, 1): a (-12, 2) wall at slope 1, which is the nef ray 6L - 6delta
    CHECK(walls_sm(3, 3).walls == std::vector<Rational>{R(1)});
    CHECK(walls_sm(3, 3).mov_slope == Q(6, 5));
    CHECK(walls_sm(1, 3).nef_equals_mov);  // m = e + 2
    for (long long m : {3, 4})
        for (long long e = 1; e <= 60; ++e) {
            auto sp = nef_ray_sm_special(e, m);
            if (!sp) continue;
            auto r = walls_sm(e, m);
            CAPTURE(m);
            CAPTURE(e);
            CHECK(r.nef_slope == ExtremalSlope::rational(Rational(sp->ray.cDelta, sp->ray.cL)));
            CHECK(r.nef_equals_mov == sp->nef_equals_mov);
        }
    try {
        walls_sm(5, 5);
        FAIL("expected UnsupportedM");
    } catch (const Error& e) {
        CHECK(e.name() == "UnsupportedM");
    }
    for (long long e = 1; e <= 200; ++e) {
        auto a = walls_sm(e, 2);
        auto b = walls_s2(e);
        CAPTURE(e);
        CHECK(a.walls == b.walls);
        CHECK(a.mov_slope == b.mov_slope);
        CHECK(a.nef_slope == b.nef_slope);
    }
}

TEST_CASE("walls of S^[m] against exhaustive search") {
    for (long long m : {2, 3, 4})
        for (long long e = 1; e <= 40; ++e) {
            auto r = walls_sm(e, m);
            std::set<Rational> got(r.walls.begin(), r.walls.end());
            auto want = brute_walls(e, m, 3000, r.mov_slope);
            CAPTURE(m);
            CAPTURE(e);
            // brute force sees every wall with y <= 3000
            for (const auto& w : want) CHECK(got.count(w));
            for (const auto& w : got)
                if (denominator(w) <= 3000 * (m - 1)) CHECK((want.count(w) || denominator(w) > 3000));
        }
}

TEST_CASE("fourfold cones") {
    auto a = fourfold_cones(3, 2);
    CHECK(a.mov_slope.str() == "sqrt(3/2)");
    CHECK(a.nef_slope == Q(3, 4));
    CHECK(a.infinitely_many);
    CHECK(a.walls.size() == 8);
    CHECK(a.walls.front() == R(3, 4));
    auto b = fourfold_cones(3, 3);
    CHECK(b.nef_equals_mov);
    try {
        fourfold_cones(5, 2);
        FAIL("expected BadCongruence");
    } catch (const Error& e) {
        CHECK(e.name() == "BadCongruence");
    }
    for (long long n = 3; n <= 51; n += 4)
        for (long long ep = 2; ep <= 50; ++ep) {
            auto r = fourfold_cones(n, ep, 4);
            CAPTURE(n);
            CAPTURE(ep);
            CHECK(r.nef_slope <= r.mov_slope);
            if (is_square(n * ep)) CHECK(r.nef_equals_mov);
            if (!r.nef_equals_mov && r.mov_slope.is_rational()) CHECK(r.walls.size() == 1);
            for (std::size_t i = 1; i < r.walls.size(); ++i) CHECK(r.walls[i - 1] < r.walls[i]);
        }
}

TEST_CASE("very ampleness and embeddings") {
    CHECK(k_very_ample(1, 10, 5));
    CHECK(k_very_ample(2, 3, 4));
    CHECK_FALSE(k_very_ample(1, 10, 6));
    auto q = hilb_embedding_status(1, 2, 2);  // quartic surface
    CHECK(q.base_point_free);
    CHECK_FALSE(q.very_ample);
    auto s = hilb_embedding_status(1, 3, 3);  // degree 6, third Hilbert power
    CHECK_FALSE(s.base_point_free);
    CHECK_FALSE(s.very_ample);
    auto t = hilb_embedding_status(2, 1, 2);
    CHECK_FALSE(t.base_point_free);
    CHECK_FALSE(t.very_ample);
    // Hilbert power status is k-very-ampleness of L^a with k = m - 1 and k = m
    for (long long a = 1; a <= 4; ++a)
        for (long long e = 1; e <= 20; ++e)
            for (long long m = 2; m <= 12; ++m) {
                auto h = hilb_embedding_status(a, e, m);
                CHECK(h.base_point_free == k_very_ample(a, e, m - 1));
                CHECK(h.very_ample == k_very_ample(a, e, m));
            }
    auto x = moduli_embedding_status(2, 3, 1);
    CHECK(x.bpf_if);
    CHECK(x.very_ample_if);
    CHECK(x.ambient_dim == 14);
    auto y = moduli_embedding_status(2, 11, 2);
    CHECK(y.very_ample_if);
    CHECK(y.ambient_dim == 90);
    auto z = moduli_embedding_status(2, 1, 1);
    CHECK(z.bpf_if);
    CHECK_FALSE(z.very_ample_if);
    CHECK(z.ambient_dim == 5);
}
