#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twopos/canonical.hpp"
#include "twopos/families.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"

using namespace twopos;

TEST_CASE("small G_n are the expected paths") {
    CHECK(are_isomorphic(build_gn(3), path(3)));
    CHECK(are_isomorphic(build_gn(4), path(4)));
}

TEST_CASE("G_5 hand-checked edge list") {
    // v1 v2 v3 clique at 0 1 2, w1 w2 clique at 3 4,
    // cross edges v2-w2, v3-w1, v3-w2
    Graph g = build_gn(5);
    CHECK(g.edge_count() == 7);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(3, 4));
    CHECK(g.adjacent(1, 4));
    CHECK(g.adjacent(2, 3));
    CHECK(g.adjacent(2, 4));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("G_n cross neighborhoods are nested") {
    for (int n = 4; n <= 16; ++n) {
        Graph g = build_gn(n);
        int nv = (n + 1) / 2, nw = n / 2;
        std::uint64_t wmask = g.vertex_mask() & ~((std::uint64_t{1} << nv) - 1);
        std::uint64_t prev = 0;
        for (int i = 0; i < nv; ++i) {
            std::uint64_t cur = g.neighbors(i) & wmask;
            CHECK((prev & ~cur) == 0);  // strictly growing chain
            if (i > 0) CHECK(cur != prev);
            prev = cur;
        }
        CHECK((g.neighbors(0) & wmask) == 0);
        (void)nw;
    }
}

TEST_CASE("G_n inertia profile: two positive eigenvalues up to order 14") {
    for (int n = 4; n <= 14; ++n) CHECK(inertia(build_gn(n)).p == 2);
    for (int n = 4; n <= 12; ++n) CHECK(inertia(build_gn(n)).eta == 0);
    // nullity creeps in at 13 and 14, and a third positive eigenvalue at 15;
    // this is exactly why the blow-up catalog stops at order 14
    CHECK(inertia(build_gn(13)) == Inertia{2, 10, 1});
    CHECK(inertia(build_gn(14)) == Inertia{2, 10, 2});
    CHECK(inertia(build_gn(15)).p == 3);
    CHECK(inertia(build_gn(16)).p == 4);
}

TEST_CASE("lex_product of K2 gives a clique") {
    CHECK(are_isomorphic(lex_product(complete(2), {3, 4}), complete(7)));
    CHECK_THROWS_AS(lex_product(complete(2), {3}), std::invalid_argument);
    CHECK_THROWS_AS(lex_product(complete(2), {3, 0}), std::invalid_argument);
}

TEST_CASE("lex_product blows vertices into joined cliques") {
    Graph g = lex_product(path(3), {2, 1, 2});
    CHECK(g.order() == 5);
    // clique {0,1}, center 2, clique {3,4}; joins 01-2 and 2-34 only
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(3, 4));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(1, 4));
}

TEST_CASE("build_bk places parts onto the right base vertices") {
    // B4(a,b; c,d) = G_4[K_a, K_b, K_c, K_d] with base path v1-v2-w2... the
    // base is P4 as v1 v2 w1 w2 with edges v1v2, w1w2, v2w2
    Graph g = build_bk({4, {2, 1, 1, 3}});
    CHECK(g.order() == 7);
    CHECK(are_isomorphic(g, lex_product(build_gn(4), {2, 1, 1, 3})));
    // odd k: last part goes to the dominating vertex
    Graph h = build_bk({5, {1, 1, 1, 1, 4}});
    CHECK(h.order() == 8);
    CHECK(are_isomorphic(h, lex_product(build_gn(5), {1, 1, 4, 1, 1})));
}

TEST_CASE("bk spec validation") {
    CHECK_THROWS_AS(build_bk({2, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_bk({4, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_bk({4, {1, 1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("parse and format B_k names") {
    BkSpec s = parse_bk("B6(4,3,3;2,1,1)");
    CHECK(s.k == 6);
    CHECK(s.parts == std::vector<int>{4, 3, 3, 2, 1, 1});
    CHECK(format_bk(s) == "B6(4,3,3;2,1,1)");
    // swapped input normalizes to first block >= second
    CHECK(format_bk(parse_bk("B6(2,1,1;4,3,3)")) == "B6(4,3,3;2,1,1)");
    BkSpec odd = parse_bk("B7(5,3,2;5,2,4;8)");
    CHECK(odd.parts == std::vector<int>{5, 3, 2, 5, 2, 4, 8});
    CHECK(format_bk(odd) == "B7(5,3,2;5,2,4;8)");
    CHECK(format_bk(parse_bk("B7(5,2,4;5,3,2;8)")) == "B7(5,3,2;5,2,4;8)");
    CHECK(parse_bk("B6( 4,3,3; 2,1,1 )").parts ==
          std::vector<int>{4, 3, 3, 2, 1, 1});

    CHECK_THROWS_AS(parse_bk("B6(4,3,3;2,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bk("B6(4,3,3;2,1,1;5)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bk("B7(1,1,1;1,1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bk("X6(1,1,1;1,1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bk("B6(1,,1;1,1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bk("B6(1,a,1;1,1,1)"), std::invalid_argument);
}

TEST_CASE("block swap is an isomorphism") {
    std::mt19937 rng(41);
    for (int it = 0; it < 100; ++it) {
        int k = 4 + int(rng() % 7);
        BkSpec spec{k, {}};
        int budget = 15 - k;  // keep orders small so canonicalization is fast
        for (int i = 0; i < k; ++i) {
            int extra = budget > 0 ? int(rng() % 3) : 0;
            budget -= extra;
            spec.parts.push_back(1 + extra);
        }
        CHECK(are_isomorphic(build_bk(spec), build_bk(block_swapped(spec))));
        CHECK(format_bk(spec) == format_bk(block_swapped(spec)));
    }
}

TEST_CASE("canonical graph quotient and reconstruction") {
    // blowing up then quotienting recovers the base when the base has no
    // congruent pair
    Graph base = build_gn(6);
    CanonicalDecomposition d = canonical_graph(lex_product(base, {2, 1, 3, 1, 2, 2}));
    CHECK(are_isomorphic(d.quotient, base));
    std::vector<int> mult = d.multiplicities;
    std::sort(mult.begin(), mult.end());
    CHECK(mult == std::vector<int>{1, 1, 2, 2, 2, 3});

    // a clique collapses to a point
    CanonicalDecomposition k = canonical_graph(complete(5));
    CHECK(k.quotient.order() == 1);
    CHECK(k.multiplicities == std::vector<int>{5});

    // classes partition the vertex set
    Graph g = lex_product(path(3), {2, 2, 2});
    CanonicalDecomposition p = canonical_graph(g);
    int covered = 0;
    for (const auto& cls : p.classes) covered += int(cls.size());
    CHECK(covered == g.order());
}
