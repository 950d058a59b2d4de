#include "twopos/families.hpp"

#include <numeric>
#include <sstream>

namespace twopos {

Graph build_gn(int n) {
    if (n < 2) throw std::invalid_argument("G_n needs n >= 2");
    if (n > Graph::kMaxOrder) throw std::invalid_argument("order exceeds 64");
    int nv = (n + 1) / 2;  // v_1..v_nv at indices 0..nv-1
    int nw = n / 2;        // w_1..w_nw at indices nv..n-1
    Graph g(n);
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b) g.add_edge(a, b);
    for (int a = 0; a < nw; ++a)
        for (int b = a + 1; b < nw; ++b) g.add_edge(nv + a, nv + b);
    // v_i ~ w_j iff j >= nw - i + 2 (1-based), one rule for both parities
    for (int i = 1; i <= nv; ++i)
        for (int j = 1; j <= nw; ++j)
            if (j >= nw - i + 2) g.add_edge(i - 1, nv + j - 1);
    return g;
}

Graph lex_product(const Graph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.order())
        throw std::invalid_argument("sizes length must equal base order");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("clique sizes must be positive");
        n += s;
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("order exceeds 64");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
    Graph g(n);
    for (int bi = 0; bi < base.order(); ++bi) {
        for (int a = offset[bi]; a < offset[bi + 1]; ++a)
            for (int b = a + 1; b < offset[bi + 1]; ++b) g.add_edge(a, b);
        for (int bj = bi + 1; bj < base.order(); ++bj) {
            if (!base.adjacent(bi, bj)) continue;
            for (int a = offset[bi]; a < offset[bi + 1]; ++a)
                for (int b = offset[bj]; b < offset[bj + 1]; ++b) g.add_edge(a, b);
        }
    }
    return g;
}

int BkSpec::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

void BkSpec::validate() const {
    if (k < 3) throw std::invalid_argument("B_k needs k >= 3");
    if (static_cast<int>(parts.size()) != k)
        throw std::invalid_argument("B_k needs exactly k parts");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("parts must be positive");
    if (total() > Graph::kMaxOrder) throw std::invalid_argument("order exceeds 64");
}

Graph build_bk(const BkSpec& spec) {
    spec.validate();
    int k = spec.k;
    int s = k / 2;
    // parts n_1..n_s go to v_1..v_s, n_{s+1}..n_{2s} to w_1..w_s; for odd k
    // the final part goes to the dominating vertex v_{s+1}
    std::vector<int> sizes(k);
    for (int i = 0; i < s; ++i) sizes[i] = spec.parts[i];
    if (k % 2 == 0) {
        for (int j = 0; j < s; ++j) sizes[s + j] = spec.parts[s + j];
    } else {
        sizes[s] = spec.parts[2 * s];
        for (int j = 0; j < s; ++j) sizes[s + 1 + j] = spec.parts[s + j];
    }
    return lex_product(build_gn(k), sizes);
}

BkSpec block_swapped(const BkSpec& spec) {
    int s = spec.k / 2;
    BkSpec out = spec;
    for (int i = 0; i < s; ++i) {
        out.parts[i] = spec.parts[s + i];
        out.parts[s + i] = spec.parts[i];
    }
    return out;
}

BkSpec parse_bk(const std::string& text) {
    // B<k>(a,...;b,...) or B<k>(a,...;b,...;c)
    std::size_t open = text.find('(');
    if (text.size() < 4 || text[0] != 'B' || open == std::string::npos ||
        text.back() != ')')
        throw std::invalid_argument("malformed B_k name: " + text);
    BkSpec spec;
    try {
        spec.k = std::stoi(text.substr(1, open - 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed B_k name: " + text);
    }
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::vector<std::vector<int>> blocks(1);
    std::string num;
    auto flush_num = [&] {
        if (num.empty()) throw std::invalid_argument("malformed B_k name: " + text);
        blocks.back().push_back(std::stoi(num));
        num.clear();
    };
    for (char c : inner) {
        if (c == ' ') continue;
        if (c == ',') {
            flush_num();
        } else if (c == ';') {
            flush_num();
            blocks.emplace_back();
        } else if (c >= '0' && c <= '9') {
            num.push_back(c);
        } else {
            throw std::invalid_argument("malformed B_k name: " + text);
        }
    }
    flush_num();

    int s = spec.k / 2;
    bool odd = spec.k % 2 != 0;
    if (blocks.size() != (odd ? 3u : 2u))
        throw std::invalid_argument("wrong block count for k in: " + text);
    if (static_cast<int>(blocks[0].size()) != s ||
        static_cast<int>(blocks[1].size()) != s ||
        (odd && blocks[2].size() != 1))
        throw std::invalid_argument("block lengths inconsistent with k in: " + text);
    for (const auto& b : blocks)
        for (int v : b) spec.parts.push_back(v);
    spec.validate();
    return spec;
}

std::string format_bk(const BkSpec& spec) {
    spec.validate();
    int s = spec.k / 2;
    BkSpec canon = spec;
    if (s > 0) {
        std::vector<int> first(spec.parts.begin(), spec.parts.begin() + s);
        std::vector<int> second(spec.parts.begin() + s, spec.parts.begin() + 2 * s);
        if (first < second) canon = block_swapped(spec);
    }
    std::ostringstream out;
    out << 'B' << canon.k << '(';
    for (int i = 0; i < canon.k; ++i) {
        if (i > 0) out << (i == s || i == 2 * s ? ';' : ',');
        out << canon.parts[i];
    }
    out << ')';
    return out.str();
}

CanonicalDecomposition canonical_graph(const Graph& g) {
    int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<VertexId>> classes;
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({v});
        cls[v] = id;
        for (int u = v + 1; u < n; ++u) {
            if (cls[u] >= 0 || !g.adjacent(v, u)) continue;
            std::uint64_t outside =
                (g.neighbors(v) ^ g.neighbors(u)) &
                ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
            if (outside == 0) {
                classes[id].push_back(u);
                cls[u] = id;
            }
        }
    }
    CanonicalDecomposition out;
    out.classes = classes;
    out.quotient = Graph(static_cast<int>(classes.size()));
    for (const auto& c : classes) out.multiplicities.push_back(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (g.adjacent(classes[i][0], classes[j][0]))
                out.quotient.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace twopos
