#include "twopos/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace twopos {

namespace {

// Column-major upper-triangle bit positions: placing the vertex at position d
// appends exactly the d bits of its adjacency to the already placed vertices.
struct LexMinSearch {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> cur;   // flat bit string, one byte per bit
    std::vector<std::uint8_t> best;
    bool have_best = false;
    std::uint64_t best_gen = 0;
    std::vector<int> perm;           // perm[d] = original vertex at position d
    std::uint64_t used = 0;
    // twin[u] & (1<<v): transposing u and v is an automorphism
    std::array<std::uint64_t, Graph::kMaxOrder> twin{};

    explicit LexMinSearch(const Graph& graph) : g(graph), n(graph.order()) {
        cur.reserve(n * (n - 1) / 2);
        perm.reserve(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::uint64_t outside =
                    (g.neighbors(u) ^ g.neighbors(v)) &
                    ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if (outside == 0) {
                    twin[u] |= std::uint64_t{1} << v;
                    twin[v] |= std::uint64_t{1} << u;
                }
            }
    }

    void dfs(int depth, bool equal) {
        if (depth == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
                ++best_gen;
            }
            return;
        }
        // candidate columns: adjacency bits to already placed vertices
        struct Cand {
            int v;
            std::vector<std::uint8_t> col;
        };
        std::vector<Cand> cands;
        std::uint64_t kept = 0;
        for (int v = 0; v < n; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (used & bit) continue;
            if (twin[v] & kept) continue;  // a kept twin already represents v
            kept |= bit;
            Cand c{v, {}};
            c.col.resize(depth);
            for (int i = 0; i < depth; ++i)
                c.col[i] = g.adjacent(v, perm[i]) ? 1 : 0;
            cands.push_back(std::move(c));
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.col < b.col; });

        std::size_t seg = cur.size();
        for (const Cand& c : cands) {
            bool child_equal = false;
            if (equal && have_best) {
                int cmp = 0;
                for (int i = 0; i < depth && cmp == 0; ++i)
                    cmp = int(c.col[i]) - int(best[seg + i]);
                if (cmp > 0) break;  // sorted ascending: later candidates worse
                child_equal = (cmp == 0);
            }
            std::uint64_t gen0 = best_gen;
            cur.insert(cur.end(), c.col.begin(), c.col.end());
            perm.push_back(c.v);
            used |= std::uint64_t{1} << c.v;
            dfs(depth + 1, child_equal);
            used &= ~(std::uint64_t{1} << c.v);
            perm.pop_back();
            cur.resize(seg);
            if (best_gen != gen0) equal = true;  // best now extends cur
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    CanonicalForm form;
    int bits = n * (n - 1) / 2;
    form.bytes.assign(1 + (bits + 7) / 8, 0);
    form.bytes[0] = static_cast<std::uint8_t>(n);
    if (n >= 2) {
        LexMinSearch search(g);
        search.dfs(0, true);
        for (int b = 0; b < bits; ++b)
            if (search.best[b])
                form.bytes[1 + b / 8] |= std::uint8_t(0x80) >> (b % 8);
    }
    return form;
}

Graph from_canonical_form(const CanonicalForm& form) {
    int n = form.bytes.empty() ? 0 : form.bytes[0];
    Graph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (form.bytes[1 + b / 8] & (std::uint8_t(0x80) >> (b % 8)))
                g.add_edge(i, j);
    return g;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace twopos
