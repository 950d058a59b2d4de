#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twopos/canonical.hpp"
#include "twopos/families.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"

namespace twopos {

/// Sign class of the third/fourth eigenvalues of a clique blow-up, decided
/// from exact inertia only. Plus: p >= 3; DoubleZero: p = 2 and eta >= 2;
/// SingleZero: p = 2 and eta = 1; Minus: p = 2 and eta = 0.
enum class ClassLabel { Plus, DoubleZero, SingleZero, Minus };

std::string to_string(ClassLabel label);
ClassLabel classify_inertia(const Inertia& in);

struct CensusRecord {
    CanonicalForm form;
    std::string graph6;
    Inertia inertia;
    int order = 0;
    bool connected = false;
};

struct DStarEntry {
    std::string name;  // canonical B_k name
    int k = 0;
    CanonicalForm form;
    Inertia inertia;
};

struct DStarCatalog {
    std::vector<DStarEntry> entries;  // sorted by (k, name)
    std::map<int, int> per_k_counts;
};

struct Report {
    std::string check;
    std::map<std::string, std::string> parameters;
    std::uint64_t examined = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> violation_details;
    std::map<std::string, std::uint64_t> counters;
    double elapsed_seconds = 0.0;
};

/// All ordered k-tuples of positive integers summing to n, lexicographic.
std::vector<std::vector<int>> compositions(int n, int k);
std::uint64_t binomial(int n, int k);

/// Builds B_k(parts) and labels it from exact inertia. Requires 4 <= k <= 14.
ClassLabel classify_bk(const BkSpec& spec);

/// Sweeps every composition with 4 <= k <= 14 and k <= n <= 14, keeps the
/// DoubleZero blow-ups, and deduplicates them up to isomorphism.
DStarCatalog compute_dstar(int jobs = 1);

/// Checks that no 15-vertex blow-up B_k(...) with 4 <= k <= 14 has p = 2 and
/// eta >= 1.
Report verify_lemma_4_9(int jobs = 1);

/// Checks that no blow-up of the given order has p = 2 and eta >= 2.
Report verify_no_double_zero(int n, int jobs = 1);

/// All disconnected graphs with p = 2 and eta = s on n vertices, up to
/// isomorphism: sums of two complete multipartite graphs with the right
/// total nullity, plus H + K_1 for every census H with eta = s - 1 when
/// n - 1 is within oracle range.
std::vector<Graph> disconnected_gs(int n, int s);

/// Exhaustive labeled-graph census: all graphs on n vertices with p = 2,
/// deduplicated by canonical form, ordered by canonical form bytes.
/// Refuses n > 8.
std::vector<CensusRecord> oracle_census(int n, int jobs = 1);

/// Exhaustive check that the one-positive-eigenvalue structural test agrees
/// with exact inertia on every labeled graph of order n (n <= 7).
Report verify_smith(int n);

/// Exhaustive check that every graph of order n (n <= 7) with eta = n - 3
/// has p = 1 and is a complete tripartite graph plus isolated vertices.
Report verify_eta_max(int n);

struct ForbiddenGraph {
    std::string name;
    Graph graph;
    double lambda3 = 0.0;
};

/// The thirteen forbidden 6-vertex subgraphs (all have p = 3): nine chord
/// extensions of C6, matched to their names by third eigenvalue, plus four
/// fixed configurations.
std::vector<ForbiddenGraph> forbidden_catalog();

/// Canonical forms of every blow-up B_s(parts), 3 <= s <= 12, of order n
/// with p = 2 and eta = 0 (the connected graphs with no zero eigenvalue).
std::vector<CanonicalForm> eta_zero_bk_forms(int n);

bool contains_induced(const Graph& g, const Graph& pattern);

}  // namespace twopos
