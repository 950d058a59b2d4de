#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twopos/canonical.hpp"
#include "twopos/families.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"
#include "twopos/transforms.hpp"

using namespace twopos;

TEST_CASE("type I findings on twins") {
    // K_{2,3}: twins inside each part
    auto found = find_type1(complete_multipartite({2, 3}));
    CHECK(found.size() == 1 + 3);  // C(2,2) + C(3,2)
    for (const auto& f : found) {
        CHECK(f.kind == TransformKind::TypeI);
        CHECK(f.removable == f.witness[1]);
        CHECK(f.witness[0] < f.witness[1]);
    }
    // C4: the two diagonals
    CHECK(find_type1(cycle(4)).size() == 2);
    CHECK(find_type1(path(4)).empty());
    CHECK(find_type1(complete(4)).empty());  // adjacent twins do not count
}

TEST_CASE("type II finding at the center of P5") {
    auto found = find_type2(path(5));
    REQUIRE(found.size() == 1);
    // row(center) = row(end) + row(end): A_2* = A_0* + A_4* in P5
    CHECK(found[0].witness == std::vector<VertexId>{2, 0, 4});
    CHECK(found[0].removable == 2);
    Graph reduced = apply(path(5), found[0]);
    CHECK(are_isomorphic(reduced,
                         disjoint_union(complete(2), complete(2))));
    CHECK(find_type2(cycle(5)).empty());
}

TEST_CASE("type III findings on C4") {
    auto found = find_type3(cycle(4));
    CHECK(found.size() == 2);  // both opposite-edge pairings
    for (const auto& f : found) {
        CHECK(f.kind == TransformKind::TypeIII);
        CHECK(f.removable == f.witness[0]);
        Graph reduced = apply(cycle(4), f);
        CHECK(are_isomorphic(reduced, path(3)));
    }
    CHECK(find_type3(complete(4)).empty());
    CHECK(find_type3(cycle(5)).empty());
}

TEST_CASE("type III with asymmetric pairings") {
    // C4 plus a pendant on vertex 0: only the pairing whose congruent-edge
    // equations ignore the pendant correctly can hold
    Graph g = cycle(4);
    Graph h(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            if (g.adjacent(u, v)) h.add_edge(u, v);
    h.add_edge(0, 4);
    auto found = find_type3(h);
    for (const auto& f : found) {
        CHECK(finding_holds(h, f));
        Inertia before = inertia(h);
        Inertia after = inertia(apply(h, f));
        CHECK(after.p == before.p);
        CHECK(after.n == before.n);
        CHECK(after.eta == before.eta - 1);
    }
}

TEST_CASE("stale findings are rejected") {
    auto found = find_type1(cycle(4));
    REQUIRE_FALSE(found.empty());
    CHECK_THROWS_AS(apply(path(4), found[0]), std::invalid_argument);
    TransformFinding bogus{TransformKind::TypeI, {0, 9}, 9};
    CHECK_FALSE(finding_holds(cycle(4), bogus));
}

TEST_CASE("format_finding line shapes") {
    CHECK(format_finding({TransformKind::TypeI, {0, 3}, 3}) == "TYPE1 0 3");
    CHECK(format_finding({TransformKind::TypeII, {2, 1, 3}, 2}) == "TYPE2 2|1,3");
    CHECK(format_finding({TransformKind::TypeIII, {0, 1, 2, 3}, 0}) ==
          "TYPE3 0,1,2,3");
}

TEST_CASE("find_all concatenates in kind order") {
    auto found = find_all(cycle(4));
    REQUIRE(found.size() == 4);
    CHECK(found[0].kind == TransformKind::TypeI);
    CHECK(found[1].kind == TransformKind::TypeI);
    CHECK(found[2].kind == TransformKind::TypeIII);
    CHECK(found[3].kind == TransformKind::TypeIII);
}

TEST_CASE("every finding obeys the inertia law on random graphs") {
    std::mt19937 rng(53);
    std::bernoulli_distribution coin(0.5);
    for (int it = 0; it < 300; ++it) {
        int n = 4 + int(rng() % 5);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        for (const auto& f : find_all(g))
            CHECK_NOTHROW(apply(g, f));  // apply re-verifies the law itself
    }
}

TEST_CASE("reduction chain reaches eta zero") {
    ReductionChain chain = reduction_chain(complete_multipartite({3, 3}));
    CHECK(chain.terminal_kind == TerminalKind::EtaZero);
    CHECK(chain.steps.size() == 4);  // eta(K_{3,3}) = 4, one step each
    CHECK(inertia(chain.terminal).eta == 0);
    CHECK(are_isomorphic(chain.terminal, complete_multipartite({1, 1})));

    ReductionChain trivial = reduction_chain(path(4));
    CHECK(trivial.steps.empty());
    CHECK(trivial.terminal_kind == TerminalKind::EtaZero);
}

TEST_CASE("reduction chain stops at a catalog member") {
    Graph g = cycle(4);
    std::set<CanonicalForm> catalog{canonical_form(g)};
    ReductionChain chain = reduction_chain(g, catalog);
    CHECK(chain.terminal_kind == TerminalKind::DStarMember);
    CHECK(chain.steps.empty());
}
