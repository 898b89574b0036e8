#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fatpoints/geometry.hpp"
#include "fatpoints/rng.hpp"
#include "oracles.hpp"

using namespace fatpoints;

namespace {
const FieldContext F;

PrimePoint e(int i, int n) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(i)] = 1;
    return PrimePoint{std::move(c)};
}

PrimePoint pt(std::vector<std::int64_t> raw) { return make_point(raw, F); }
}  // namespace

TEST_CASE("point normalization and parsing round trip") {
    CHECK(pt({0, 2, 4}).coords == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(pt({-1, 1, 0}).coords == std::vector<std::uint32_t>{1, 32748, 0});
    CHECK_THROWS_AS(pt({0, 0, 0}), std::invalid_argument);

    Xorshift64Star rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::int64_t> raw(4);
        for (auto& v : raw) v = static_cast<std::int64_t>(rng.next() % 200001) - 100000;
        if (raw == std::vector<std::int64_t>(4, 0)) continue;
        const PrimePoint q = pt(raw);
        // re-parsing the normalized representative is the identity
        std::vector<std::int64_t> again(q.coords.begin(), q.coords.end());
        CHECK(pt(again) == q);
    }
}

TEST_CASE("spans") {
    CHECK(span_of({e(0, 4)}, F).dim() == 0);
    CHECK(span_of({e(0, 2), e(1, 2), pt({1, 1, 0})}, F).dim() == 1);
    CHECK(span_of({e(0, 4), e(1, 4), e(2, 4), e(3, 4), e(4, 4)}, F).dim() == 4);

    // canonical: different spanning sets of the same subspace compare equal
    const auto L1 = span_of({e(0, 3), e(1, 3)}, F);
    const auto L2 = span_of({pt({1, 1, 0, 0}), pt({1, 2, 0, 0})}, F);
    CHECK(L1 == L2);
}

TEST_CASE("containment") {
    const auto line = span_of({e(0, 2), e(1, 2)}, F);
    CHECK(contains(line, pt({1, 1, 0})));
    CHECK_FALSE(contains(line, e(2, 2)));

    const auto hyp = span_of({e(1, 3), e(2, 3), e(3, 3)}, F);  // x0 = 0 in P^3
    CHECK(contains(hyp, pt({0, 1, 2, 3})));
    CHECK_FALSE(contains(hyp, pt({1, 1, 2, 3})));

    // span idempotence: adding a contained point does not change the span
    Xorshift64Star rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = gen_general(F, 3, 3, rng.next());
        auto L = span_of(pts, F);
        std::vector<std::uint32_t> comb(4, 0);
        for (const auto& q : pts) {
            const std::uint32_t lam = 1 + rng.residue(F) % (F.p() - 1);
            for (std::size_t j = 0; j < 4; ++j)
                comb[j] = F.add(comb[j], F.mul(lam, q.coords[j]));
        }
        const PrimePoint inside = make_point_residues(comb, F);
        CHECK(contains(L, inside));
        auto bigger = pts;
        bigger.push_back(inside);
        CHECK(span_of(bigger, F) == L);
    }
}

TEST_CASE("weight_on") {
    FatPointScheme Z = make_scheme(F, 2, {e(0, 2), e(1, 2), e(2, 2)}, {2, 2, 1});
    CHECK(weight_on(Z, ambient_span(F, 2)) == Z.weight());
    CHECK(weight_on(Z, span_of({e(0, 2), e(1, 2)}, F)) == 4);

    FatPointScheme A1 = gen_appendix(1, F);
    CHECK(A1.s() == 7);
    CHECK(A1.weight() == 21);
    const auto H = span_of({e(0, 4), e(1, 4), e(2, 4), e(3, 4)}, F);
    CHECK(weight_on(A1, H) == 15);  // five of the seven triple points lie on H
}

TEST_CASE("linearly general position") {
    CHECK(is_linearly_general({e(0, 3), e(1, 3), e(2, 3), e(3, 3)}, F));
    CHECK_FALSE(is_linearly_general({e(0, 2), e(1, 2), pt({1, 1, 0}), e(2, 2)}, F));
    CHECK_FALSE(is_linearly_general(gen_appendix(1, F).points, F));

    std::vector<PrimePoint> too_many;
    for (int t = 1; t <= 17; ++t) too_many.push_back(pt({1, t, t * t}));
    CHECK_THROWS_AS(is_linearly_general(too_many, F), std::invalid_argument);
}

TEST_CASE("residual") {
    const auto H3 = span_of({e(1, 3), e(2, 3), e(3, 3)}, F);
    FatPointScheme Z = make_scheme(F, 3, {e(1, 3), e(0, 3)}, {2, 1});
    FatPointScheme W = residual(Z, H3);
    REQUIRE(W.s() == 2);
    CHECK(W.mults == std::vector<int>{1, 1});

    FatPointScheme both = make_scheme(F, 3, {e(1, 3), e(2, 3)}, {1, 1});
    CHECK(residual(both, H3).s() == 0);

    FatPointScheme A1 = gen_appendix(1, F);
    const auto H = span_of({e(0, 4), e(1, 4), e(2, 4), e(3, 4)}, F);
    CHECK(residual(A1, H).mults == std::vector<int>{2, 2, 2, 2, 3, 2, 3});

    CHECK_THROWS_AS(residual(Z, span_of({e(0, 3), e(1, 3)}, F)), std::invalid_argument);
}

TEST_CASE("residual weight identity") {
    Xorshift64Star rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const int s = n + 2 + static_cast<int>(rng.below(3));
        auto pts = gen_general(F, n, s, rng.next());
        std::vector<int> mults;
        for (int i = 0; i < s; ++i) mults.push_back(1 + static_cast<int>(rng.below(3)));
        FatPointScheme Z = make_scheme(F, n, pts, mults);
        std::vector<PrimePoint> first_n(pts.begin(), pts.begin() + n);
        const auto H = span_of(first_n, F);
        REQUIRE(H.dim() == n - 1);
        std::int64_t on_h = 0;
        for (const auto& q : pts)
            if (contains(H, q)) ++on_h;
        CHECK(residual(Z, H).weight() == Z.weight() - on_h);
    }
}

TEST_CASE("gen_general determinism and generality") {
    const auto a = gen_general(F, 4, 10, 7);
    const auto b = gen_general(F, 4, 10, 7);
    CHECK(a == b);
    CHECK(a.size() == 10);

    const auto single = gen_general(F, 3, 1, 99);
    CHECK(single.size() == 1);

    // P^1 over GF(2) has only three points; asking for four must fail
    // loudly instead of spinning
    CHECK_THROWS_AS(gen_general(FieldContext(2), 1, 4, 1), std::runtime_error);
    CHECK_THROWS_AS(gen_cone_example(FieldContext(5), 3, 4, 1), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto pts = gen_general(F, 2, 6, seed);
        CHECK(is_linearly_general(pts, F));
    }
}

TEST_CASE("gen_rnc lies on the curve and is linearly general") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto conic = gen_rnc(F, 2, 6, seed);
        for (const auto& q : conic)
            CHECK(F.mul(q.coords[0], q.coords[2]) == F.mul(q.coords[1], q.coords[1]));
        CHECK(is_linearly_general(conic, F));

        for (int n : {3, 4})
            CHECK(is_linearly_general(gen_rnc(F, n, n + 3, seed), F));
    }
}

TEST_CASE("rational normal curve membership") {
    const auto on = is_on_rational_normal_curve(gen_rnc(F, 3, 9, 5), F);
    REQUIRE(on.has_value());
    CHECK(*on);

    auto mixed = gen_rnc(F, 3, 9, 5);
    mixed[4] = gen_general(F, 3, 1, 1234)[0];
    const auto off = is_on_rational_normal_curve(mixed, F);
    REQUIRE(off.has_value());
    CHECK_FALSE(*off);

    CHECK_FALSE(is_on_rational_normal_curve(gen_rnc(F, 3, 6, 5), F).has_value());
}

TEST_CASE("gen_cone_example") {
    const FatPointScheme Z = gen_cone_example(F, 3, 2, 11);
    CHECK(Z.s() == 7);
    CHECK(Z.mults == std::vector<int>{2, 1, 1, 1, 1, 1, 1});
    CHECK(gen_cone_example(F, 4, 2, 11).s() == 9);

    // projecting a non-vertex point from the vertex lands on the base curve:
    // the last n coordinates have the (1 : t : ... : t^{n-1}) shape
    for (std::size_t i = 1; i < Z.points.size(); ++i) {
        const auto& c = Z.points[i].coords;
        std::vector<std::uint32_t> proj(c.begin() + 1, c.end());
        REQUIRE(proj[0] != 0);
        const std::uint32_t t = F.mul(proj[1], F.inv(proj[0]));
        std::uint32_t power = proj[0];
        for (std::size_t j = 1; j < proj.size(); ++j) {
            power = F.mul(power, t);
            CHECK(proj[j] == power);
        }
    }
    CHECK_THROWS_AS(gen_cone_example(F, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("gen_appendix configurations") {
    const FatPointScheme A1 = gen_appendix(1, F);
    CHECK(A1.n == 4);
    CHECK(A1.s() == 7);
    CHECK(A1.weight() == 21);
    CHECK(A1.points[5] == pt({1, 1, 1, 1, 0}));
    CHECK(A1.points[6] == pt({1, 1, -1, 0, 1}));

    const FatPointScheme A2 = gen_appendix(2, F);
    CHECK(A2.n == 5);
    CHECK(A2.s() == 8);
    CHECK(A2.weight() == 16);
    CHECK(A2.points[7] == pt({1, 1, 0, 0, 1, 1}));
    CHECK_THROWS_AS(gen_appendix(3, F), std::invalid_argument);
}

TEST_CASE("gen_rnc_plus_general") {
    // n=4, alpha=2: w = 4d+2; d=4 -> w=18; b=s-alpha with unit tail
    std::vector<int> mults{3, 3, 3, 3, 2, 2, 1, 1};  // w = 18, s = 8
    const FatPointScheme Z = gen_rnc_plus_general(F, 4, 6, 8, mults, 3);
    CHECK(Z.s() == 8);
    CHECK(is_linearly_general(Z.points, F));
    for (int i = 0; i < 6; ++i) {
        const auto& c = Z.points[static_cast<std::size_t>(i)].coords;
        CHECK(c[0] == 1);
        CHECK(c[2] == F.mul(c[1], c[1]));
    }

    // failed preconditions name the inequality
    CHECK_THROWS_WITH_AS(gen_rnc_plus_general(F, 3, 2, 5, {2, 2, 1, 1, 1}, 1),
                         doctest::Contains("n >= 4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gen_rnc_plus_general(F, 4, 4, 8, {3, 3, 3, 3, 2, 2, 1, 1}, 1),
                         doctest::Contains("<= alpha"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gen_rnc_plus_general(F, 4, 6, 8, {3, 3, 3, 3, 2, 2, 1, 3}, 1),
                         doctest::Contains("alpha"), std::invalid_argument);
}

TEST_CASE("uniform position in bounded degree") {
    CHECK(is_uniform_position_deg(gen_general(F, 2, 4, 5), F, 1));
    CHECK_FALSE(is_uniform_position_deg(
        {e(0, 2), e(1, 2), pt({1, 1, 0}), pt({1, 2, 3})}, F, 1));
    CHECK(is_uniform_position_deg(gen_rnc(F, 2, 6, 9), F, 2));

    std::vector<PrimePoint> big = gen_rnc(F, 2, 13, 1);
    CHECK_THROWS_AS(is_uniform_position_deg(big, F, 1), std::invalid_argument);
}

TEST_CASE("scheme construction validation") {
    CHECK_THROWS_AS(make_scheme(F, 2, {e(0, 2), e(0, 2)}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(F, 2, {e(0, 2)}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(F, 2, {e(0, 2)}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_scheme(F, 3, {e(0, 2)}, {1}), std::invalid_argument);
}
