#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "strongext/graph.hpp"

namespace strongext::detail {

using Mask = std::uint32_t;

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Adjacency bitsets for small graphs (n <= 32).
struct MaskGraph {
  int n = 0;
  std::vector<Mask> out;
  std::vector<Mask> in;

  explicit MaskGraph(const StrictDigraph& g) : n(g.order()), out(n, 0), in(n, 0) {
    for (const Edge& e : g.edges()) add(e.from, e.to);
  }

  void add(int u, int v) {
    out[u] |= Mask{1} << v;
    in[v] |= Mask{1} << u;
  }
  void remove(int u, int v) {
    out[u] &= ~(Mask{1} << v);
    in[v] &= ~(Mask{1} << u);
  }
};

inline Mask closure_from(const std::vector<Mask>& adj, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline bool mask_strong(const MaskGraph& g) {
  if (g.n == 0) return false;
  const Mask all = full_mask(g.n);
  return closure_from(g.out, 0) == all && closure_from(g.in, 0) == all;
}

// Visits nonempty proper subsets of {0..n-1} in lexicographic order of their
// sorted member lists: {0}, {0,1}, {0,1,2}, ..., {0,2}, ... Stops early when
// the visitor returns true.
template <typename Visitor>
void for_each_proper_subset_lex(int n, Visitor&& visit) {
  if (n < 2) return;
  const Mask all = full_mask(n);
  std::vector<int> members{0};
  Mask set = 1;
  while (!members.empty()) {
    if (set != all && visit(set)) return;
    const int last = members.back();
    if (last < n - 1) {
      members.push_back(last + 1);
      set |= Mask{1} << (last + 1);
      continue;
    }
    members.pop_back();
    set &= ~(Mask{1} << last);
    if (members.empty()) break;
    const int prev = members.back();
    set &= ~(Mask{1} << prev);
    members.back() = prev + 1;
    set |= Mask{1} << (prev + 1);
  }
}

inline std::vector<Vertex> mask_members(Mask set) {
  std::vector<Vertex> out;
  for (; set; set &= set - 1) out.push_back(std::countr_zero(set));
  return out;
}

}  // namespace strongext::detail
