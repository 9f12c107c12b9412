#include "strongext/dicut.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mask_graph.hpp"

namespace strongext {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

void check_subset_budget(const StrictDigraph& g) {
  if (g.order() > kSubsetBudgetOrder) {
    throw Error(Errc::budget_exceeded, "subset enumeration limited to n <= " +
                                           std::to_string(kSubsetBudgetOrder) + ", got n = " +
                                           std::to_string(g.order()));
  }
}

}  // namespace

bool verify_complete_dicut(const StrictDigraph& g, const DicutCertificate& cert) {
  const int n = g.order();
  std::vector<char> in_side(n, 0);
  for (Vertex v : cert.side) {
    if (v < 0 || v >= n)
      throw Error(Errc::invalid_certificate, "vertex " + std::to_string(v) + " out of range");
    if (in_side[v])
      throw Error(Errc::invalid_certificate, "vertex " + std::to_string(v) + " listed twice");
    in_side[v] = 1;
  }
  if (cert.side.empty() || static_cast<int>(cert.side.size()) == n)
    throw Error(Errc::invalid_certificate, "side must be a nonempty proper subset");

  for (Vertex x : cert.side) {
    for (Vertex y = 0; y < n; ++y) {
      if (in_side[y]) continue;
      if (!g.has_edge(x, y) || g.has_edge(y, x)) return false;
    }
  }
  return true;
}

std::optional<DicutCertificate> find_complete_dicut(const StrictDigraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;

  // Non-adjacent pairs can never be split.
  DisjointSets blocks(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) blocks.unite(u, v);

  // Blocks joined in both directions can never be split either.
  const std::vector<Edge> edges = g.edges();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<char>> forward(n, std::vector<char>(n, 0));
    for (const Edge& e : edges) {
      const int a = blocks.find(e.from), b = blocks.find(e.to);
      if (a != b) forward[a][b] = 1;
    }
    for (int a = 0; a < n && !changed; ++a)
      for (int b = a + 1; b < n && !changed; ++b)
        if (forward[a][b] && forward[b][a]) changed = blocks.unite(a, b);
  }

  std::vector<int> block_index(n, -1);
  int block_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int root = blocks.find(v);
    if (block_index[root] == -1) block_index[root] = block_count++;
  }
  if (block_count < 2) return std::nullopt;

  // Every pair of distinct blocks is now joined one way only.
  StrictDigraph quotient(block_count);
  for (const Edge& e : edges) {
    const int a = block_index[blocks.find(e.from)], b = block_index[blocks.find(e.to)];
    if (a != b) quotient.add_edge(a, b);
  }
  const Condensation order = strong_components(quotient);
  if (order.r() < 2) return std::nullopt;

  // Candidates are nested prefixes of the linear order of tournament
  // components; pick the lexicographically smallest sorted list.
  std::vector<char> in_prefix(block_count, 0);
  std::optional<DicutCertificate> best;
  for (int prefix = 0; prefix + 1 < order.r(); ++prefix) {
    for (int b : order.components[prefix]) in_prefix[b] = 1;
    DicutCertificate cert;
    for (Vertex v = 0; v < n; ++v)
      if (in_prefix[block_index[blocks.find(v)]]) cert.side.push_back(v);
    if (!best || cert.side < best->side) best = std::move(cert);
  }
  return best;
}

std::optional<DicutCertificate> brute_force_complete_dicut(const StrictDigraph& g) {
  check_subset_budget(g);
  const detail::MaskGraph mg(g);
  const detail::Mask all = detail::full_mask(g.order());
  std::optional<DicutCertificate> found;
  detail::for_each_proper_subset_lex(g.order(), [&](detail::Mask side) {
    const detail::Mask rest = all & ~side;
    for (detail::Mask x = side; x; x &= x - 1) {
      if ((mg.out[std::countr_zero(x)] & rest) != rest) return false;
    }
    found = DicutCertificate{detail::mask_members(side)};
    return true;
  });
  return found;
}

std::optional<Deficiency> dicut_deficiency(const StrictDigraph& g) {
  check_subset_budget(g);
  const detail::MaskGraph mg(g);
  const detail::Mask all = detail::full_mask(g.order());
  std::optional<Deficiency> best;
  detail::for_each_proper_subset_lex(g.order(), [&](detail::Mask side) {
    const detail::Mask rest = all & ~side;
    std::int64_t present = 0;
    for (detail::Mask x = side; x; x &= x - 1) {
      const int v = std::countr_zero(x);
      if (mg.in[v] & rest) return false;  // back edge
      present += std::popcount(mg.out[v] & rest);
    }
    const std::int64_t missing =
        static_cast<std::int64_t>(std::popcount(side)) * std::popcount(rest) - present;
    if (!best || missing < best->missing)
      best = Deficiency{missing, DicutCertificate{detail::mask_members(side)}};
    return missing == 0;
  });
  return best;
}

}  // namespace strongext
