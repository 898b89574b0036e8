#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/bounds.hpp"
#include "fatpoints/cohomology.hpp"
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

FatPointScheme doubles(int n, int s, std::uint64_t seed) {
    return make_scheme(F, n, gen_general(F, n, s, seed), std::vector<int>(s, 2));
}
}  // namespace

TEST_CASE("conditions matrix shapes and reference ranks") {
    const FatPointScheme A1 = gen_appendix(1, F);
    const DenseMatrix m1 = conditions_matrix(A1, 5);
    CHECK(m1.rows == 105);
    CHECK(m1.cols == 126);
    CHECK(rank(m1, F) == 105);
    CHECK(rank_serial(m1, F) == 105);

    const FatPointScheme A2 = gen_appendix(2, F);
    const DenseMatrix m2 = conditions_matrix(A2, 3);
    CHECK(m2.rows == 48);
    CHECK(m2.cols == 56);
    CHECK(rank(m2, F) == 48);
    CHECK(row_reduce(m2, F).pivots.size() == 48);

    const FatPointScheme single = make_scheme(F, 3, {gen_general(F, 3, 1, 4)[0]}, {1});
    for (int d : {1, 2, 5}) {
        const DenseMatrix m = conditions_matrix(single, d);
        CHECK(m.rows == 1);
        CHECK(static_cast<std::int64_t>(m.cols) == binomial(3 + d, 3));
        CHECK(rank(m, F) == 1);
    }
}

TEST_CASE("characteristic must exceed the degree") {
    const FieldContext small(5);
    const FatPointScheme Z =
        make_scheme(small, 2, {e(0, 2), e(1, 2)}, std::vector<int>{2, 1});
    CHECK_THROWS_AS(conditions_matrix(Z, 5), std::invalid_argument);
    CHECK_NOTHROW(conditions_matrix(Z, 4));
}

TEST_CASE("top-order rows carry the same rank as all-order rows") {
    Xorshift64Star rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const int s = 1 + static_cast<int>(rng.below(4));
        std::vector<int> mults;
        for (int i = 0; i < s; ++i) mults.push_back(1 + static_cast<int>(rng.below(3)));
        const int d = 2 + static_cast<int>(rng.below(4));
        FatPointScheme Z = make_scheme(F, n, gen_general(F, n, s, rng.next()), mults);
        CHECK(rank(conditions_matrix(Z, d), F) ==
              rank(oracles::full_conditions_matrix(Z, d), F));
    }
}

TEST_CASE("reference cohomology values") {
    // seven double points in P^3: quartics are non-special
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto rep = cohomology(doubles(3, 7, seed), 4);
        CHECK(rep.h1 == 0);
        CHECK(rep.h0 == 7);
    }
    // seven double points in P^4 at d = 3: the classical exceptional case
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        CHECK(cohomology(doubles(4, 7, seed), 3).h1 > 0);
    // six double points in P^2: quintics vanish, h0 = 3
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto rep = cohomology(doubles(2, 6, seed), 5);
        CHECK(rep.h1 == 0);
        CHECK(rep.h0 == 3);
    }
}

TEST_CASE("empty scheme") {
    FatPointScheme empty{F, 3, {}, {}};
    auto rep = cohomology(empty, 2);
    CHECK(rep.h0 == binomial(5, 3));
    CHECK(rep.h1 == 0);
    CHECK(rep.deg_scheme == 0);
    CHECK(regularity_index(empty) == 1);
}

TEST_CASE("Euler identity h0 - h1 = vdim on a random corpus") {
    Xorshift64Star rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const int s = 1 + static_cast<int>(rng.below(6));
        std::vector<int> mults;
        for (int i = 0; i < s; ++i) mults.push_back(1 + static_cast<int>(rng.below(4)));
        const int d = 1 + static_cast<int>(rng.below(6));
        FatPointScheme Z = make_scheme(F, n, gen_general(F, n, s, rng.next()), mults);
        const auto rep = cohomology(Z, d);
        LinearSystemSpec spec(n, d, mults);
        CHECK(rep.h0 - rep.h1 == vdim(spec));
        CHECK(rep.h0 >= 0);
        CHECK(rep.h1 >= 0);
        CHECK(rep.hilbert == rep.rank);
    }
}

TEST_CASE("multiplicities above d+1 are capped without corrupting h1") {
    // single point of multiplicity 5 against cubics in P^2: no cubic
    // vanishes to order 5, so h0 = 0 and h1 = degZ - N = 15 - 10
    FatPointScheme Z = make_scheme(F, 2, {e(0, 2)}, {5});
    const auto rep = cohomology(Z, 3);
    CHECK(rep.h0 == 0);
    CHECK(rep.h1 == 5);
    CHECK(rep.rank == 10);
}

TEST_CASE("regularity index") {
    for (int m = 2; m <= 5; ++m) {
        FatPointScheme Z = make_scheme(F, 3, {gen_general(F, 3, 1, 2)[0]}, {m});
        CHECK(regularity_index(Z) == m - 1);
        CHECK(regularity_index(Z, true) == m - 1);
    }
    FatPointScheme simple = make_scheme(F, 3, {gen_general(F, 3, 1, 2)[0]}, {1});
    CHECK(regularity_index(simple) == 1);

    // nine general double points in P^3
    CHECK(regularity_index(doubles(3, 9, 1)) == 5);

    // six simple points on a conic: the quadric through them is unique, so
    // h1(2) = 1, and cubics restore independence
    FatPointScheme conic = make_scheme(F, 2, gen_rnc(F, 2, 6, 3), std::vector<int>(6, 1));
    CHECK(cohomology(conic, 2).h1 == 1);
    CHECK(cohomology(conic, 2).h0 == 1);
    CHECK(cohomology(conic, 3).h1 == 0);
    CHECK(regularity_index(conic) == 3);
}

TEST_CASE("h1 degree monotonicity") {
    Xorshift64Star rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const int s = 2 + static_cast<int>(rng.below(5));
        std::vector<int> mults;
        for (int i = 0; i < s; ++i) mults.push_back(1 + static_cast<int>(rng.below(3)));
        FatPointScheme Z = make_scheme(F, n, gen_general(F, n, s, rng.next()), mults);
        std::int64_t prev = -1;
        for (int d = 1; d <= static_cast<int>(Z.weight()); ++d) {
            const std::int64_t h1 = cohomology(Z, d).h1;
            if (prev >= 0) CHECK(h1 <= prev);
            prev = h1;
            if (h1 == 0) break;
        }
    }
}

TEST_CASE("subscheme monotonicity") {
    Xorshift64Star rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const int s = 2 + static_cast<int>(rng.below(4));
        std::vector<int> mz, mw;
        for (int i = 0; i < s; ++i) mz.push_back(2 + static_cast<int>(rng.below(3)));
        bool proper = false;
        for (int i = 0; i < s; ++i) {
            int drop = static_cast<int>(rng.below(2));
            if (drop) proper = true;
            mw.push_back(mz[static_cast<std::size_t>(i)] - drop);
        }
        if (!proper) mw[0] -= 1;
        auto pts = gen_general(F, n, s, rng.next());
        FatPointScheme Z = make_scheme(F, n, pts, mz);
        FatPointScheme W = make_scheme(F, n, pts, mw);
        for (int d = 2; d <= 6; ++d) {
            const auto rz = cohomology(Z, d), rw = cohomology(W, d);
            if (rw.h1 > 0) CHECK(rz.h1 > 0);
            CHECK(rw.h1 <= rz.h1 + (rz.deg_scheme - rw.deg_scheme));
        }
        CHECK(regularity_index(W) <= regularity_index(Z));
    }
}

TEST_CASE("system dimension") {
    CHECK(system_dimension(LinearSystemSpec(2, 4, {3, 3, 2}), gen_general(F, 2, 3, 2), F) ==
          1);
    CHECK(system_dimension(LinearSystemSpec(3, 4, {}), {}, F) == binomial(7, 3));
    CHECK(system_dimension(LinearSystemSpec(2, 2, {2, 2}), gen_general(F, 2, 2, 2), F) ==
          1);
    CHECK(system_dimension(LinearSystemSpec(2, 5, {3, 3, 3}), gen_general(F, 2, 3, 5), F) ==
          3);
}

TEST_CASE("restricted cohomology on a line") {
    const auto line = span_of({e(0, 3), e(1, 3)}, F);
    FatPointScheme Z =
        make_scheme(F, 3, {e(0, 3), e(1, 3), e(2, 3)}, std::vector<int>{2, 2, 1});
    const auto rep = restricted_cohomology(Z, line, 3);
    CHECK(rep.deg_scheme == 4);
    CHECK(rep.rank == 4);
    CHECK(rep.h1 == 0);

    // w_L = d + 2 on a line forces h1 = 1 on binary forms
    const PrimePoint third = make_point({1, 1, 0, 0}, F);
    FatPointScheme heavy = make_scheme(F, 3, {e(0, 3), e(1, 3), third, e(2, 3)},
                                       {2, 2, 1, 1});
    const auto rep2 = restricted_cohomology(heavy, line, 3);
    CHECK(rep2.deg_scheme == 5);
    CHECK(rep2.h1 == 1);
}

TEST_CASE("restricted cohomology: whole space, empty trace, basis independence") {
    FatPointScheme Z = doubles(3, 5, 6);
    const auto whole = restricted_cohomology(Z, ambient_span(F, 3), 3);
    const auto direct = cohomology(Z, 3);
    CHECK(whole.rank == direct.rank);
    CHECK(whole.h0 == direct.h0);
    CHECK(whole.h1 == direct.h1);

    const auto far_line = span_of({gen_general(F, 3, 2, 999)[0],
                                   gen_general(F, 3, 2, 999)[1]},
                                  F);
    const auto none = restricted_cohomology(Z, far_line, 2);
    CHECK(none.deg_scheme == 0);
    CHECK(none.h1 == 0);

    // two spanning subsets of the same plane give identical reports
    auto pts = gen_general(F, 3, 4, 42);
    std::vector<PrimePoint> abc = {pts[0], pts[1], pts[2]};
    // a point inside the plane: combination of the three
    std::vector<std::uint32_t> comb(4, 0);
    for (const auto& q : abc)
        for (std::size_t j = 0; j < 4; ++j) comb[j] = F.add(comb[j], q.coords[j]);
    const PrimePoint inside = make_point_residues(comb, F);
    std::vector<PrimePoint> alt = {pts[0], pts[1], inside};
    const auto L1 = span_of(abc, F), L2 = span_of(alt, F);
    REQUIRE(L1 == L2);
    FatPointScheme S = make_scheme(F, 3, {pts[0], pts[1], pts[2], pts[3]}, {2, 1, 1, 2});
    const auto r1 = restricted_cohomology(S, L1, 2), r2 = restricted_cohomology(S, L2, 2);
    CHECK(r1.rank == r2.rank);
    CHECK(r1.h0 == r2.h0);
    CHECK(r1.h1 == r2.h1);

    CHECK_THROWS_AS(restricted_cohomology(Z, span_of({e(0, 3)}, F), 2),
                    std::invalid_argument);
}

TEST_CASE("h1_positive shortcut is consistent with full reports") {
    Xorshift64Star rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        const int s = 2 + static_cast<int>(rng.below(5));
        std::vector<int> mults;
        for (int i = 0; i < s; ++i) mults.push_back(1 + static_cast<int>(rng.below(3)));
        FatPointScheme Z = make_scheme(F, n, gen_general(F, n, s, rng.next()), mults);
        for (int d = 1; d <= 6; ++d)
            CHECK(h1_positive(Z, d) == (cohomology(Z, d).h1 > 0));
    }
}
