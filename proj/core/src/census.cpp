#include "twopos/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "twopos/graph6.hpp"
#include "twopos/spectral.hpp"
#include "twopos/spectrum.hpp"

namespace twopos {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Splits [0, total) into roughly equal chunks and runs fn(begin, end) on
/// each in its own thread.
template <class Fn>
void parallel_ranges(std::uint64_t total, int jobs, Fn fn) {
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    if (jobs == 1 || total < 2) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    int used = static_cast<int>(std::min<std::uint64_t>(jobs, total));
    std::vector<std::thread> threads;
    for (int t = 0; t < used; ++t) {
        std::uint64_t begin = total * t / used;
        std::uint64_t end = total * (t + 1) / used;
        threads.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    }
    for (auto& th : threads) th.join();
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 1; u < n; ++u)
        for (int v = 0; v < u; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(v, u);
    return g;
}

/// All (k, parts) blow-up shapes of a fixed total order, flattened so sweeps
/// can be chunked deterministically.
std::vector<BkSpec> blowup_specs(int n, int k_min, int k_max) {
    std::vector<BkSpec> specs;
    for (int k = k_min; k <= std::min(k_max, n); ++k)
        for (auto& parts : compositions(n, k))
            specs.push_back({k, std::move(parts)});
    return specs;
}

}  // namespace

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Plus: return "PLUS";
        case ClassLabel::DoubleZero: return "DOUBLE_ZERO";
        case ClassLabel::SingleZero: return "SINGLE_ZERO";
        case ClassLabel::Minus: return "MINUS";
    }
    throw std::logic_error("unreachable");
}

ClassLabel classify_inertia(const Inertia& in) {
    if (in.p >= 3) return ClassLabel::Plus;
    if (in.p != 2) throw std::invalid_argument("classification needs p >= 2");
    if (in.eta >= 2) return ClassLabel::DoubleZero;
    return in.eta == 1 ? ClassLabel::SingleZero : ClassLabel::Minus;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> compositions(int n, int k) {
    if (k < 1 || n < k) return {};
    std::vector<std::vector<int>> out;
    out.reserve(binomial(n - 1, k - 1));
    std::vector<int> parts(k);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == k - 1) {
            parts[pos] = remaining;
            out.push_back(parts);
            return;
        }
        for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
            parts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

ClassLabel classify_bk(const BkSpec& spec) {
    if (spec.k < 4 || spec.k > 14)
        throw std::invalid_argument("classification covers 4 <= k <= 14");
    return classify_inertia(inertia(build_bk(spec)));
}

DStarCatalog compute_dstar(int jobs) {
    std::vector<BkSpec> specs;
    for (int n = 4; n <= 14; ++n) {
        auto chunk = blowup_specs(n, 4, 14);
        specs.insert(specs.end(), chunk.begin(), chunk.end());
    }
    std::vector<std::uint8_t> keep(specs.size(), 0);
    parallel_ranges(specs.size(), jobs, [&](int, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i)
            keep[i] = classify_bk(specs[i]) == ClassLabel::DoubleZero;
    });
    std::map<CanonicalForm, DStarEntry> dedup;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!keep[i]) continue;
        Graph g = build_bk(specs[i]);
        Inertia in = inertia(g);
        if (in.eta != 2)
            throw std::logic_error("double-zero blow-up with eta != 2: " +
                                   format_bk(specs[i]));
        std::string name = format_bk(specs[i]);
        auto [it, inserted] =
            dedup.try_emplace(canonical_form(g),
                              DStarEntry{name, specs[i].k, CanonicalForm{}, in});
        if (!inserted) {
            if (it->second.k != specs[i].k)
                throw std::logic_error("isomorphic blow-ups with different k");
            it->second.name = std::min(it->second.name, name);
        }
    }
    DStarCatalog catalog;
    for (int k = 4; k <= 14; ++k) catalog.per_k_counts[k] = 0;
    for (auto& [form, entry] : dedup) {
        entry.form = form;
        catalog.per_k_counts[entry.k] += 1;
        catalog.entries.push_back(entry);
    }
    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const DStarEntry& a, const DStarEntry& b) {
                  return std::tie(a.k, a.name) < std::tie(b.k, b.name);
              });
    return catalog;
}

Report verify_lemma_4_9(int jobs) {
    auto start = Clock::now();
    Report rep;
    rep.check = "lemma-4.9";
    rep.parameters["n"] = "15";
    std::vector<BkSpec> specs = blowup_specs(15, 4, 14);
    std::vector<ClassLabel> labels(specs.size());
    parallel_ranges(specs.size(), jobs, [&](int, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) labels[i] = classify_bk(specs[i]);
    });
    rep.examined = specs.size();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        rep.counters["k=" + std::to_string(specs[i].k) + "/" +
                     to_string(labels[i])] += 1;
        if (labels[i] == ClassLabel::SingleZero ||
            labels[i] == ClassLabel::DoubleZero) {
            rep.violations += 1;
            rep.violation_details.push_back(format_bk(specs[i]));
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_no_double_zero(int n, int jobs) {
    auto start = Clock::now();
    Report rep;
    rep.check = "no-double-zero";
    rep.parameters["n"] = std::to_string(n);
    std::vector<BkSpec> specs = blowup_specs(n, 4, 14);
    std::vector<ClassLabel> labels(specs.size());
    parallel_ranges(specs.size(), jobs, [&](int, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t i = b; i < e; ++i) labels[i] = classify_bk(specs[i]);
    });
    rep.examined = specs.size();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        rep.counters[to_string(labels[i])] += 1;
        if (labels[i] == ClassLabel::DoubleZero) {
            rep.violations += 1;
            rep.violation_details.push_back(format_bk(specs[i]));
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

std::vector<Graph> disconnected_gs(int n, int s) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (s < 0) throw std::invalid_argument("need s >= 0");
    std::map<CanonicalForm, Graph> dedup;
    auto add = [&](const Graph& g) { dedup.try_emplace(canonical_form(g), g); };

    // partitions of m into at least two parts, non-increasing
    auto partitions = [](int m) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int cap) -> void {
            if (remaining == 0) {
                if (cur.size() >= 2) out.push_back(cur);
                return;
            }
            for (int v = std::min(cap, remaining); v >= 1; --v) {
                cur.push_back(v);
                self(self, remaining - v, v);
                cur.pop_back();
            }
        };
        rec(rec, m, m);
        return out;
    };

    // two connected complete multipartite summands, no isolated vertices
    for (int m1 = 2; m1 <= n - 2; ++m1) {
        int m2 = n - m1;
        if (m1 > m2) break;
        for (const auto& parts1 : partitions(m1)) {
            int eta1 = m1 - static_cast<int>(parts1.size());
            if (eta1 > s) continue;
            for (const auto& parts2 : partitions(m2)) {
                int eta2 = m2 - static_cast<int>(parts2.size());
                if (eta1 + eta2 != s) continue;
                add(disjoint_union(complete_multipartite(parts1),
                                   complete_multipartite(parts2)));
            }
        }
    }

    // H + K_1 for every census member H with one fewer zero eigenvalue
    if (s >= 1) {
        if (n - 1 > 8)
            throw std::invalid_argument(
                "isolated-vertex recursion needs n - 1 within oracle range");
        for (const CensusRecord& rec : oracle_census(n - 1)) {
            if (rec.inertia.eta != s - 1) continue;
            add(disjoint_union(from_graph6(rec.graph6), Graph(1)));
        }
    }

    std::vector<Graph> out;
    out.reserve(dedup.size());
    for (auto& [form, g] : dedup) out.push_back(g);
    return out;
}

std::vector<CensusRecord> oracle_census(int n, int jobs) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("oracle census supports 1 <= n <= 8");
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::vector<std::map<CanonicalForm, Inertia>> partial(
        std::max(jobs, 1));
    parallel_ranges(total, jobs, [&](int t, std::uint64_t b, std::uint64_t e) {
        auto& local = partial[t];
        for (std::uint64_t mask = b; mask < e; ++mask) {
            Graph g = graph_from_mask(n, mask);
            Inertia in = inertia(g);
            if (in.p != 2) continue;
            local.try_emplace(canonical_form(g), in);
        }
    });
    std::map<CanonicalForm, Inertia> merged;
    for (auto& m : partial) merged.merge(m);
    std::vector<CensusRecord> out;
    out.reserve(merged.size());
    for (const auto& [form, in] : merged) {
        Graph rep = from_canonical_form(form);
        out.push_back({form, to_graph6(rep), in, n, rep.is_connected()});
    }
    return out;
}

Report verify_smith(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("exhaustive check supports 1 <= n <= 7");
    auto start = Clock::now();
    Report rep;
    rep.check = "smith";
    rep.parameters["n"] = std::to_string(n);
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        rep.examined += 1;
        if (is_one_positive(g) != (inertia(g).p == 1)) {
            rep.violations += 1;
            if (rep.violation_details.size() < 32)
                rep.violation_details.push_back(to_graph6(g));
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

Report verify_eta_max(int n) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("exhaustive check supports 3 <= n <= 7");
    auto start = Clock::now();
    Report rep;
    rep.check = "eta-max";
    rep.parameters["n"] = std::to_string(n);
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        Inertia in = inertia(g);
        if (in.eta != n - 3) continue;
        rep.examined += 1;
        bool ok = false;
        if (in.p == 1 && in.n == 2) {
            auto parts = multipartite_parts(g);
            ok = parts && parts->size() == 3;
        }
        if (!ok) {
            rep.violations += 1;
            if (rep.violation_details.size() < 32)
                rep.violation_details.push_back(to_graph6(g));
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

std::vector<ForbiddenGraph> forbidden_catalog() {
    // Chord extensions of the 6-cycle 0-1-2-3-4-5; the admissible chords are
    // (1,5), (1,4), (1,3), (3,5).
    const std::pair<int, int> chords[4] = {{1, 5}, {1, 4}, {1, 3}, {3, 5}};
    struct Expected {
        const char* name;
        int chord_count;
        double lambda3;
    };
    const Expected expected[9] = {
        {"Gamma1", 1, 0.6180}, {"Gamma2", 1, 0.4142}, {"Gamma3", 2, 0.5293},
        {"Gamma4", 2, 0.1830}, {"Gamma5", 2, 0.6180}, {"Gamma6", 3, 0.1124},
        {"Gamma7", 3, 0.6180}, {"Gamma8", 3, 0.2798}, {"Gamma9", 4, 0.1589},
    };
    std::vector<ForbiddenGraph> out;
    std::set<CanonicalForm> seen;
    for (int subset = 1; subset < 16; ++subset) {
        Graph g = cycle(6);
        int count = 0;
        for (int c = 0; c < 4; ++c)
            if (subset >> c & 1) {
                g.add_edge(chords[c].first, chords[c].second);
                ++count;
            }
        if (!seen.insert(canonical_form(g)).second) continue;
        double l3 = eigenvalues(g).values[2];
        const Expected* match = nullptr;
        for (const Expected& e : expected)
            if (e.chord_count == count && std::abs(e.lambda3 - l3) < 5e-5)
                match = &e;
        if (!match)
            throw std::logic_error("unmatched chord extension " + to_graph6(g));
        out.push_back({match->name, g, l3});
    }
    if (out.size() != 9) throw std::logic_error("expected nine chord classes");
    std::sort(out.begin(), out.end(),
              [](const ForbiddenGraph& a, const ForbiddenGraph& b) {
                  return a.name < b.name;
              });

    auto fixed = [&](const char* name,
                     std::initializer_list<std::pair<int, int>> edges) {
        Graph g(6);
        for (auto [u, v] : edges) g.add_edge(u, v);
        out.push_back({name, g, eigenvalues(g).values[2]});
    };
    fixed("Gamma10", {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {4, 5},
                      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}});
    fixed("Gamma11", {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {2, 4}, {2, 5},
                      {3, 4}, {3, 5}, {1, 4}, {1, 5}, {1, 3}});
    fixed("Gamma12", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3},
                      {4, 5}, {1, 4}, {3, 4}, {3, 5}});
    fixed("Gamma13", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3},
                      {4, 5}, {1, 4}, {3, 4}, {3, 5}, {2, 5}});

    for (const ForbiddenGraph& f : out)
        if (inertia(f.graph).p != 3)
            throw std::logic_error("forbidden graph without three positive "
                                   "eigenvalues: " + f.name);
    return out;
}

std::vector<CanonicalForm> eta_zero_bk_forms(int n) {
    std::set<CanonicalForm> forms;
    for (int s = 3; s <= std::min(12, n); ++s)
        for (const auto& parts : compositions(n, s)) {
            Graph g = build_bk({s, parts});
            Inertia in = inertia(g);
            if (in.p == 2 && in.eta == 0) forms.insert(canonical_form(g));
        }
    return {forms.begin(), forms.end()};
}

bool contains_induced(const Graph& g, const Graph& pattern) {
    int n = g.order(), k = pattern.order();
    if (k > n) return false;
    CanonicalForm target = canonical_form(pattern);
    std::vector<VertexId> pick(k);
    auto rec = [&](auto&& self, int pos, int next) -> bool {
        if (pos == k)
            return canonical_form(induced_subgraph(g, pick)) == target;
        for (int v = next; v <= n - (k - pos); ++v) {
            pick[pos] = v;
            if (self(self, pos + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace twopos
