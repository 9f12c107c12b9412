#pragma once

#include <optional>
#include <vector>

#include "strongext/dicut.hpp"
#include "strongext/graph.hpp"

namespace strongext {

struct ExtensionPlan {
  std::vector<Edge> added;  // in the order they were chosen
  StrictDigraph resulting;
};

/// Weakly connected case. Repeats until strong: take S = vertices of the
/// source components and the lexicographically first non-adjacent pair (y, x)
/// with y in S, x outside; add x->y. If C(x) was not reachable from C(y),
/// also add y->z with z the smallest vertex of the first source component
/// that reaches C(x). Adds at most r-1 edges.
///
/// Throws too_small (n < 3), disconnected, or CompleteDicutError.
ExtensionPlan extend_connected(const StrictDigraph& g);

/// Any strongly connectable graph. Disconnected inputs are first linked
/// cyclically from a sink of each weak component to a source of the next,
/// then finished by extend_connected. When every weak component is already
/// strong a single cycle through the components is added instead, giving
/// exactly r edges; every other input needs at most r-1.
ExtensionPlan extend(const StrictDigraph& g);

struct BoundsOptions {
  bool brute_force = true;
};

struct BoundsReport {
  int lower = 0;                      // max(s, t), or 0 when already strong
  std::optional<int> lower_matched;   // s + t - m for X->Y bipartite inputs
  int upper_theorem = 0;              // r, or r - 1
  // Sum of max(t_prev, s_next) around a cyclic order of the weak
  // components; disconnected inputs only.
  std::optional<int> upper_cyclic;
  std::optional<int> upper_cyclic_sorted;  // same sum for the sorted order
  std::vector<int> cyclic_order;           // weak component indices
  bool cyclic_exhaustive = false;          // all cyclic orders were tried
  std::optional<int> upper_prop;           // s + t - c, disconnected only
  std::optional<int> u_minus_c_prime;      // equals upper_prop
  std::optional<int> brute_min;
};

/// Throws too_small or CompleteDicutError.
BoundsReport bounds(const StrictDigraph& g, const BoundsOptions& options = {});

/// Lower bound s + t - m for a graph whose edges all go from `x_side` to
/// `y_side`, where m is a maximum matching of Y into X over pairs that are
/// not edges of g.
int bipartite_matching_lower_bound(const StrictDigraph& g, const std::vector<Vertex>& x_side,
                                   const std::vector<Vertex>& y_side);

inline constexpr int kMaxBruteForcePairs = 24;
inline constexpr int kMaxBruteForceOrder = 10;

struct MinExtension {
  int count = 0;
  ExtensionPlan plan;
};

/// True when brute_force_min_extension would run within its budget.
bool brute_force_admissible(const StrictDigraph& g);

/// Exact minimum by enumeration. Candidate sets are scanned by size and
/// lexicographically within a size; each addable pair {a < b} offers a->b
/// before b->a. Empty when no strong extension exists. Throws
/// budget_exceeded outside the budget.
std::optional<MinExtension> brute_force_min_extension(const StrictDigraph& g);

/// Orients every remaining pair u < v as u->v. Throws not_strong.
StrictDigraph complete_to_tournament(const StrictDigraph& g);

/// Spanning directed cycle of a strong tournament, starting at vertex 0.
std::vector<Vertex> hamiltonian_cycle_strong_tournament(const StrictDigraph& t);

/// Transitive tournament on r vertices minus its spanning path.
StrictDigraph gen_tt_minus_path(int r);

/// K_{p,q} oriented from the p side to the q side, plus one isolated vertex.
StrictDigraph gen_bipartite_plus_isolated(int p, int q);

/// m disjoint directed k-cycles.
StrictDigraph gen_disjoint_cycles(int k, int m);

}  // namespace strongext
