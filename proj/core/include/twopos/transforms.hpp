#pragma once

#include <set>
#include <string>
#include <vector>

#include "twopos/canonical.hpp"
#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"

namespace twopos {

enum class TransformKind { TypeI, TypeII, TypeIII };

/// A detected congruent-vertex configuration. Deleting `removable` keeps
/// (p, n) and lowers eta by exactly one.
struct TransformFinding {
    TransformKind kind;
    std::vector<VertexId> witness;  // TypeI: {u, v}; TypeII: {u, v, w};
                                    // TypeIII: cycle {u, v, x, y} with
                                    // congruent edge pair (uv, xy)
    VertexId removable;
};

/// Non-adjacent pairs with identical neighborhoods; removable = higher index.
std::vector<TransformFinding> find_type1(const Graph& g);

/// Triples (u; v, w) with v and w non-adjacent, N(v) and N(w) disjoint, and
/// N(u) equal to their union; removable = u.
std::vector<TransformFinding> find_type2(const Graph& g);

/// Induced 4-cycles u-v-x-y whose opposite edges (uv, xy) satisfy
/// N(u)\{y,v} = N(v)\{u,x} and N(x)\{v,y} = N(y)\{x,u}; both opposite edge
/// pairings of each quadrangle are tested; removable = u.
std::vector<TransformFinding> find_type3(const Graph& g);

std::vector<TransformFinding> find_all(const Graph& g);

/// True iff the finding's neighborhood equations hold in g.
bool finding_holds(const Graph& g, const TransformFinding& f);

/// Deletes f.removable. Re-verifies that p and n are preserved and eta drops
/// by exactly one; throws std::logic_error otherwise.
Graph apply(const Graph& g, const TransformFinding& f);

/// "TYPE1 u v", "TYPE2 u|v,w", "TYPE3 u,v,x,y"
std::string format_finding(const TransformFinding& f);

enum class TerminalKind { EtaZero, DStarMember, Stuck };

struct ReductionStep {
    TransformFinding finding;
    std::string graph6_before;
};

struct ReductionChain {
    std::vector<ReductionStep> steps;
    Graph terminal;
    TerminalKind terminal_kind;
};

/// Greedily applies findings (TypeI, then TypeII, then TypeIII; lowest
/// witness first) while eta > 0. Stops when eta reaches zero, when the
/// current graph's canonical form is in `catalog_forms`, or when no finding
/// exists.
ReductionChain reduction_chain(const Graph& g,
                               const std::set<CanonicalForm>& catalog_forms = {});

}  // namespace twopos
