#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strongext/graph.hpp"

namespace strongext {

/// Originating side X of a cut [X, V-X]. Vertices are kept sorted.
struct DicutCertificate {
  std::vector<Vertex> side;

  friend bool operator==(const DicutCertificate&, const DicutCertificate&) = default;
};

/// Largest order accepted by the subset enumerators.
inline constexpr int kSubsetBudgetOrder = 22;

/// True iff every edge X -> V-X is present and none goes back. Throws
/// invalid_certificate for an empty or full side, duplicates, or vertices out
/// of range.
bool verify_complete_dicut(const StrictDigraph& g, const DicutCertificate& cert);

/// Polynomial detector. Vertices that are non-adjacent, or whose blocks are
/// joined by edges in both directions, must share a side; after merging to a
/// fixpoint the blocks form a tournament, and complete dicuts are exactly the
/// unions of an initial run of its strong components. Returns the one whose
/// sorted vertex list is lexicographically smallest.
std::optional<DicutCertificate> find_complete_dicut(const StrictDigraph& g);

/// Reference oracle: scans nonempty proper subsets in lexicographic order of
/// their sorted vertex lists and returns the first complete dicut.
std::optional<DicutCertificate> brute_force_complete_dicut(const StrictDigraph& g);

struct Deficiency {
  std::int64_t missing = 0;
  DicutCertificate witness;
};

/// Minimum number of absent forward edges over all dicuts, with the first
/// minimizing side in lexicographic order. Empty when g has no dicut.
std::optional<Deficiency> dicut_deficiency(const StrictDigraph& g);

}  // namespace strongext
