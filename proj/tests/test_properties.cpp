#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "twopos/canonical.hpp"
#include "twopos/census.hpp"
#include "twopos/families.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"
#include "twopos/spectral.hpp"
#include "twopos/spectrum.hpp"

using namespace twopos;

namespace {

Graph random_graph(int n, std::mt19937& rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix random_unimodular(int n, std::mt19937& rng) {
    Matrix c(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 1;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::bernoulli_distribution sign(0.5);
    for (int op = 0; op < 6; ++op) {
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            std::swap(c[i], c[pick(rng)]);
            continue;
        }
        std::int64_t f = sign(rng) ? 1 : -1;
        for (int k = 0; k < n; ++k) c[i][k] += f * c[j][k];
    }
    return c;
}

Matrix congruent(const Matrix& a, const Matrix& c) {
    int n = int(a.size());
    Matrix ac(n, std::vector<std::int64_t>(n, 0)), out = ac;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ac[i][j] += a[i][k] * c[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[i][j] += c[k][i] * ac[k][j];
    return out;
}

}  // namespace

TEST_CASE("sylvester: congruence preserves inertia, 1000 cases") {
    std::mt19937 rng(101);
    for (int it = 0; it < 1000; ++it) {
        int n = 2 + int(rng() % 7);
        Graph g = random_graph(n, rng, 0.2 + 0.6 * (rng() % 100) / 100.0);
        Matrix a = adjacency_matrix(g);
        Matrix m = congruent(a, random_unimodular(n, rng));
        CHECK(matrix_inertia(m) == inertia(g));
    }
}

TEST_CASE("interlacing under vertex deletion, 500 cases") {
    std::mt19937 rng(103);
    for (int it = 0; it < 500; ++it) {
        int n = 3 + int(rng() % 6);
        Graph g = random_graph(n, rng);
        int drop = int(rng() % n);
        Graph h = induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t{1} << drop));
        auto lg = eigenvalues(g).values;
        auto lh = eigenvalues(h).values;
        for (int i = 0; i < n - 1; ++i) {
            CHECK(lg[i] >= lh[i] - 1e-8);
            CHECK(lh[i] >= lg[i + 1] - 1e-8);
        }
    }
}

TEST_CASE("pendant reduction law, 500 cases") {
    std::mt19937 rng(107);
    for (int it = 0; it < 500; ++it) {
        int n = 3 + int(rng() % 7);
        Graph base = random_graph(n - 1, rng);
        Graph g(n);
        for (int u = 0; u < n - 1; ++u)
            for (int v = u + 1; v < n - 1; ++v)
                if (base.adjacent(u, v)) g.add_edge(u, v);
        g.add_edge(n - 1, int(rng() % (n - 1)));  // forced pendant
        auto r = pendant_reduce(g);
        REQUIRE(r.has_value());
        Inertia before = inertia(g);
        Inertia after = inertia(r->reduced);
        CHECK(after.p == before.p - 1);
        CHECK(after.n == before.n - 1);
        CHECK(after.eta == before.eta);
        CHECK(g.degree(r->pendant) == 1);
        CHECK(g.adjacent(r->pendant, r->support));
    }
}

TEST_CASE("canonical-graph reconstruction round trip, 1000 cases") {
    std::mt19937 rng(109);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + int(rng() % 10);
        Graph g = random_graph(n, rng, 0.2 + 0.6 * (rng() % 100) / 100.0);
        CanonicalDecomposition d = canonical_graph(g);
        CHECK(are_isomorphic(lex_product(d.quotient, d.multiplicities), g));
        // quotient has no congruent pair left
        CanonicalDecomposition dd = canonical_graph(d.quotient);
        CHECK(dd.quotient.order() == d.quotient.order());
    }
}

TEST_CASE("G_n is an induced subgraph of G_{n+1}, n <= 16") {
    for (int n = 2; n <= 16; ++n)
        CHECK(contains_induced(build_gn(n + 1), build_gn(n)));
}

TEST_CASE("block-swap isomorphism, 200 random specs") {
    std::mt19937 rng(113);
    for (int it = 0; it < 200; ++it) {
        int k = 4 + int(rng() % 11);
        BkSpec spec{k, {}};
        int budget = 15 - k;  // keep orders small so canonicalization is fast
        for (int i = 0; i < k; ++i) {
            int extra = budget > 0 ? int(rng() % 3) : 0;
            budget -= extra;
            spec.parts.push_back(1 + extra);
        }
        CHECK(are_isomorphic(build_bk(spec), build_bk(block_swapped(spec))));
    }
}

TEST_CASE("canonical form is labeling-invariant, 1000 cases") {
    std::mt19937 rng(127);
    for (int it = 0; it < 1000; ++it) {
        int n = 2 + int(rng() % 9);
        Graph g = random_graph(n, rng, 0.15 + 0.7 * (rng() % 100) / 100.0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(g, perm)) == canonical_form(g));
    }
}
