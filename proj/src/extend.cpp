#include "strongext/extend.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mask_graph.hpp"

namespace strongext {

namespace {

void require_extendable(const StrictDigraph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  if (g.order() < 3)
    throw Error(Errc::too_small, "strong extensions need at least 3 vertices, got " +
                                     std::to_string(g.order()));
  if (auto cert = find_complete_dicut(g)) {
    throw CompleteDicutError(cert->side, "graph has a complete dicut and cannot be made strong");
  }
}

void add_planned(StrictDigraph& h, std::vector<Edge>& added, Vertex u, Vertex v) {
  if (!h.add_edge(u, v)) throw std::logic_error("planned edge already present");
  added.push_back({u, v});
}

// Single-component loop. Each round merges at least two strong components
// per added edge, so the graph becomes strong after at most r-1 additions.
void link_until_strong(StrictDigraph& h, std::vector<Edge>& added) {
  const int n = h.order();
  while (true) {
    const Condensation cond = strong_components(h);
    if (cond.r() == 1) return;

    std::vector<char> in_sources(n, 0);
    for (Vertex v = 0; v < n; ++v) in_sources[v] = cond.is_source(cond.component_of[v]);

    Vertex y = -1, x = -1;
    for (Vertex a = 0; a < n && y < 0; ++a) {
      if (!in_sources[a]) continue;
      for (Vertex b = 0; b < n; ++b) {
        if (!in_sources[b] && !h.adjacent(a, b)) {
          y = a;
          x = b;
          break;
        }
      }
    }
    if (y < 0) throw std::logic_error("source side forms a complete dicut");

    const int cy = cond.component_of[y];
    const int cx = cond.component_of[x];
    const bool x_follows_y = cond.reachable_from(cy)[cx];
    add_planned(h, added, x, y);
    if (x_follows_y) continue;

    const std::vector<bool> reaches_x = cond.reaching(cx);
    const auto source = std::find_if(cond.source_components.begin(), cond.source_components.end(),
                                     [&](int id) { return reaches_x[id]; });
    if (source == cond.source_components.end())
      throw std::logic_error("no source component precedes C(x)");
    add_planned(h, added, y, cond.components[*source].front());
  }
}

}  // namespace

ExtensionPlan extend_connected(const StrictDigraph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  if (g.order() < 3)
    throw Error(Errc::too_small, "strong extensions need at least 3 vertices, got " +
                                     std::to_string(g.order()));
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected, "graph is not weakly connected");
  require_extendable(g);

  ExtensionPlan plan{{}, g};
  link_until_strong(plan.resulting, plan.added);
  return plan;
}

ExtensionPlan extend(const StrictDigraph& g) {
  require_extendable(g);
  const Condensation cond = strong_components(g);
  const int k = cond.c();
  if (k == 1) return extend_connected(g);

  ExtensionPlan plan{{}, g};
  bool all_strong = true;
  for (int w = 0; w < k; ++w) all_strong = all_strong && cond.weak_component_is_strong(w);

  if (all_strong) {
    const auto& blocks = cond.weak_components;
    if (k > 2) {
      for (int i = 0; i < k; ++i)
        add_planned(plan.resulting, plan.added, blocks[i].front(), blocks[(i + 1) % k].front());
    } else {
      // Two strong blocks: enter and leave the larger-than-one block at
      // different vertices.
      const bool first_big = blocks[0].size() >= 2;
      const auto& big = first_big ? blocks[0] : blocks[1];
      const auto& other = first_big ? blocks[1] : blocks[0];
      if (first_big) {
        add_planned(plan.resulting, plan.added, big[0], other[0]);
        add_planned(plan.resulting, plan.added, other[0], big[1]);
      } else {
        add_planned(plan.resulting, plan.added, other[0], big[0]);
        add_planned(plan.resulting, plan.added, big[1], other[0]);
      }
    }
    return plan;
  }

  std::vector<Vertex> entry(k), exit(k);
  for (int w = 0; w < k; ++w) {
    const auto source = *std::find_if(
        cond.source_components.begin(), cond.source_components.end(),
        [&](int id) { return cond.weak_component_of[cond.components[id].front()] == w; });
    int sink = source;
    if (!cond.weak_component_is_strong(w)) {
      const std::vector<bool> reach = cond.reachable_from(source);
      sink = *std::find_if(cond.sink_components.begin(), cond.sink_components.end(),
                           [&](int id) { return id != source && reach[id]; });
    }
    entry[w] = cond.components[source].front();
    exit[w] = cond.components[sink].front();
  }
  for (int w = 0; w < k; ++w) add_planned(plan.resulting, plan.added, exit[w], entry[(w + 1) % k]);

  link_until_strong(plan.resulting, plan.added);
  return plan;
}

// --- Bounds ----------------------------------------------------------------

namespace {

int cyclic_sum(const std::vector<int>& sources, const std::vector<int>& sinks,
               const std::vector<int>& order) {
  const std::size_t k = order.size();
  int total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int prev = order[(i + k - 1) % k];
    total += std::max(sinks[prev], sources[order[i]]);
  }
  return total;
}

// Kuhn's augmenting paths; left vertices are matched into right vertices.
int maximum_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<int> match_right(right_count, -1);
  std::vector<char> visited;
  auto augment = [&](auto& self, int left) -> bool {
    for (int right : adj[left]) {
      if (visited[right]) continue;
      visited[right] = 1;
      if (match_right[right] < 0 || self(self, match_right[right])) {
        match_right[right] = left;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int left = 0; left < static_cast<int>(adj.size()); ++left) {
    visited.assign(right_count, 0);
    if (augment(augment, left)) ++size;
  }
  return size;
}

}  // namespace

int bipartite_matching_lower_bound(const StrictDigraph& g, const std::vector<Vertex>& x_side,
                                   const std::vector<Vertex>& y_side) {
  const int n = g.order();
  std::vector<int> side(n, -1);  // 0 = X, 1 = Y
  auto place = [&](const std::vector<Vertex>& vs, int label) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n)
        throw Error(Errc::invalid_input, "vertex " + std::to_string(v) + " out of range");
      if (side[v] != -1)
        throw Error(Errc::invalid_input, "vertex " + std::to_string(v) + " listed twice");
      side[v] = label;
    }
  };
  place(x_side, 0);
  place(y_side, 1);
  if (x_side.empty() || y_side.empty())
    throw Error(Errc::invalid_input, "both sides of the bipartition must be nonempty");
  if (std::count(side.begin(), side.end(), -1) != 0)
    throw Error(Errc::invalid_input, "bipartition must cover every vertex");
  for (const Edge& e : g.edges()) {
    if (side[e.from] != 0 || side[e.to] != 1) {
      throw Error(Errc::invalid_input, "edge " + std::to_string(e.from) + "->" +
                                           std::to_string(e.to) + " does not go from X to Y");
    }
  }
  if (g.size() == x_side.size() * y_side.size()) {
    std::vector<Vertex> sorted = x_side;
    std::sort(sorted.begin(), sorted.end());
    throw CompleteDicutError(sorted, "underlying graph is complete bipartite");
  }

  std::vector<std::vector<int>> adj(y_side.size());
  for (std::size_t i = 0; i < y_side.size(); ++i)
    for (std::size_t j = 0; j < x_side.size(); ++j)
      if (!g.has_edge(x_side[j], y_side[i])) adj[i].push_back(static_cast<int>(j));
  const int m = maximum_matching(adj, static_cast<int>(x_side.size()));
  return static_cast<int>(x_side.size() + y_side.size()) - m;
}

BoundsReport bounds(const StrictDigraph& g, const BoundsOptions& options) {
  require_extendable(g);
  const Condensation cond = strong_components(g);
  BoundsReport report;
  // A strong graph is its own source and sink component and needs nothing.
  report.lower = cond.r() > 1 ? std::max(cond.s(), cond.t()) : 0;

  const int k = cond.c();
  bool all_strong = true;
  for (int w = 0; w < k; ++w) all_strong = all_strong && cond.weak_component_is_strong(w);
  report.upper_theorem = (k > 1 && all_strong) ? cond.r() : cond.r() - 1;

  // Pure X->Y orientation: every vertex is a pure source or a pure sink.
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool has_out = !g.out_neighbors(v).empty();
    const bool has_in = !g.in_neighbors(v).empty();
    if (has_out && !has_in) xs.push_back(v);
    if (has_in && !has_out) ys.push_back(v);
  }
  if (static_cast<int>(xs.size() + ys.size()) == g.order() && !xs.empty())
    report.lower_matched = bipartite_matching_lower_bound(g, xs, ys);

  if (k > 1) {
    std::vector<int> sources(k, 0), sinks(k, 0);
    for (int id : cond.source_components) ++sources[cond.weak_component_of[cond.components[id][0]]];
    for (int id : cond.sink_components) ++sinks[cond.weak_component_of[cond.components[id][0]]];

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    report.upper_cyclic_sorted = cyclic_sum(sources, sinks, order);
    std::vector<int> best_order = order;
    int best = *report.upper_cyclic_sorted;

    if (k <= 8) {
      // Fixing the first entry enumerates every cyclic order.
      while (std::next_permutation(order.begin() + 1, order.end())) {
        const int value = cyclic_sum(sources, sinks, order);
        if (value < best) {
          best = value;
          best_order = order;
        }
      }
      report.cyclic_exhaustive = true;
    } else {
      // Rotations leave a cyclic sum unchanged, so position 0 stays put.
      // Improve by swaps and single-entry moves until neither helps.
      auto try_order = [&](const std::vector<int>& candidate) {
        const int value = cyclic_sum(sources, sinks, candidate);
        if (value >= best) return false;
        best = value;
        best_order = candidate;
        return true;
      };
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 1; i < k && !improved; ++i) {
          for (int j = 1; j < k && !improved; ++j) {
            if (i == j) continue;
            std::vector<int> candidate = best_order;
            if (i < j) std::swap(candidate[i], candidate[j]);
            if (i < j && try_order(candidate)) improved = true;
            if (improved) break;
            candidate = best_order;
            const int moved = candidate[i];
            candidate.erase(candidate.begin() + i);
            candidate.insert(candidate.begin() + j, moved);
            improved = try_order(candidate);
          }
        }
      }
    }
    report.upper_cyclic = best;
    report.cyclic_order = best_order;
    report.upper_prop = cond.s() + cond.t() - cond.c();
    report.u_minus_c_prime = cond.u() - cond.c_prime();
  }

  if (options.brute_force && brute_force_admissible(g)) {
    if (auto exact = brute_force_min_extension(g)) report.brute_min = exact->count;
  }
  return report;
}

// --- Brute force -----------------------------------------------------------

namespace {

std::vector<Edge> addable_pairs(const StrictDigraph& g) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) pairs.push_back({a, b});
  return pairs;
}

struct MinSearch {
  detail::MaskGraph graph;
  const std::vector<Edge>& pairs;
  std::vector<Edge> chosen;

  // Depth-first in lexicographic option order: pair index ascending, a->b
  // before b->a.
  bool place(std::size_t start, int remaining) {
    if (remaining == 0) return detail::mask_strong(graph);
    // Every vertex without an entering (leaving) edge needs one of the
    // remaining additions.
    int no_in = 0, no_out = 0;
    for (int v = 0; v < graph.n; ++v) {
      no_in += graph.in[v] == 0;
      no_out += graph.out[v] == 0;
    }
    if (no_in > remaining || no_out > remaining) return false;

    for (std::size_t i = start; i + remaining <= pairs.size(); ++i) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex u = flip ? pairs[i].to : pairs[i].from;
        const Vertex v = flip ? pairs[i].from : pairs[i].to;
        graph.add(u, v);
        chosen.push_back({u, v});
        if (place(i + 1, remaining - 1)) return true;
        chosen.pop_back();
        graph.remove(u, v);
      }
    }
    return false;
  }
};

}  // namespace

bool brute_force_admissible(const StrictDigraph& g) {
  return g.order() <= kMaxBruteForceOrder &&
         static_cast<int>(addable_pairs(g).size()) <= kMaxBruteForcePairs;
}

std::optional<MinExtension> brute_force_min_extension(const StrictDigraph& g) {
  const std::vector<Edge> pairs = addable_pairs(g);
  if (g.order() > kMaxBruteForceOrder || static_cast<int>(pairs.size()) > kMaxBruteForcePairs) {
    throw Error(Errc::budget_exceeded,
                "minimum-extension search limited to n <= " + std::to_string(kMaxBruteForceOrder) +
                    " and " + std::to_string(kMaxBruteForcePairs) + " addable pairs, got n = " +
                    std::to_string(g.order()) + " with " + std::to_string(pairs.size()) +
                    " pairs");
  }
  if (g.order() == 0 || brute_force_complete_dicut(g)) return std::nullopt;

  MinSearch search{detail::MaskGraph(g), pairs, {}};
  for (int size = 0; size <= static_cast<int>(pairs.size()); ++size) {
    if (!search.place(0, size)) continue;
    MinExtension result;
    result.count = size;
    result.plan.added = search.chosen;
    result.plan.resulting = g;
    for (const Edge& e : search.chosen) result.plan.resulting.add_edge(e.from, e.to);
    return result;
  }
  return std::nullopt;
}

// --- Tournaments -----------------------------------------------------------

StrictDigraph complete_to_tournament(const StrictDigraph& g) {
  if (g.order() < 3)
    throw Error(Errc::too_small, "need at least 3 vertices, got " + std::to_string(g.order()));
  if (!is_strong(g)) throw Error(Errc::not_strong, "graph is not strongly connected");
  StrictDigraph t = g;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!t.adjacent(u, v)) t.add_edge(u, v);
  return t;
}

std::vector<Vertex> hamiltonian_cycle_strong_tournament(const StrictDigraph& t) {
  const int n = t.order();
  if (n < 3) throw Error(Errc::too_small, "need at least 3 vertices, got " + std::to_string(n));
  if (!t.is_tournament()) throw Error(Errc::not_tournament, "graph is not a tournament");
  if (!is_strong(t)) throw Error(Errc::not_strong, "tournament is not strongly connected");

  std::vector<Vertex> cycle;
  for (Vertex u = 0; u < n && cycle.empty(); ++u) {
    for (Vertex v : t.out_neighbors(u)) {
      const auto& next = t.out_neighbors(v);
      const auto w = std::find_if(next.begin(), next.end(), [&](Vertex w) { return t.has_edge(w, u); });
      if (w != next.end()) {
        cycle = {u, v, *w};
        break;
      }
    }
  }
  std::vector<char> on_cycle(n, 0);
  for (Vertex v : cycle) on_cycle[v] = 1;

  while (static_cast<int>(cycle.size()) < n) {
    const std::size_t len = cycle.size();
    bool grown = false;
    // A vertex with both an in- and an out-neighbour on the cycle slots in
    // between some consecutive pair c -> w -> c'.
    for (Vertex w = 0; w < n && !grown; ++w) {
      if (on_cycle[w]) continue;
      for (std::size_t i = 0; i < len; ++i) {
        if (t.has_edge(cycle[i], w) && t.has_edge(w, cycle[(i + 1) % len])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), w);
          on_cycle[w] = 1;
          grown = true;
          break;
        }
      }
    }
    if (grown) continue;

    // Otherwise every outside vertex is dominated by the whole cycle or
    // dominates it, and strong connectivity gives an edge b -> a from the
    // first kind to the second. Detour c0 -> b -> a -> c2, dropping c1.
    Vertex b = -1, a = -1;
    for (Vertex x = 0; x < n && b < 0; ++x) {
      if (on_cycle[x] || !t.has_edge(cycle[0], x)) continue;
      for (Vertex y : t.out_neighbors(x)) {
        if (!on_cycle[y] && t.has_edge(y, cycle[0])) {
          b = x;
          a = y;
          break;
        }
      }
    }
    if (b < 0) throw std::logic_error("no detour found in strong tournament");
    on_cycle[cycle[1]] = 0;
    cycle[1] = b;
    cycle.insert(cycle.begin() + 2, a);
    on_cycle[a] = on_cycle[b] = 1;
  }

  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

// --- Generators ------------------------------------------------------------

StrictDigraph gen_tt_minus_path(int r) {
  if (r < 3) throw Error(Errc::invalid_input, "tt-minus-path needs r >= 3");
  StrictDigraph g(r);
  for (Vertex i = 0; i < r; ++i)
    for (Vertex j = i + 2; j < r; ++j) g.add_edge(i, j);
  return g;
}

StrictDigraph gen_bipartite_plus_isolated(int p, int q) {
  if (p < 1 || q < 1) throw Error(Errc::invalid_input, "bipartite needs p, q >= 1");
  StrictDigraph g(p + q + 1);
  for (Vertex x = 0; x < p; ++x)
    for (Vertex y = p; y < p + q; ++y) g.add_edge(x, y);
  return g;
}

StrictDigraph gen_disjoint_cycles(int k, int m) {
  if (k < 3 || m < 1) throw Error(Errc::invalid_input, "cycles needs k >= 3 and m >= 1");
  StrictDigraph g(k * m);
  for (int block = 0; block < m; ++block)
    for (int i = 0; i < k; ++i) g.add_edge(block * k + i, block * k + (i + 1) % k);
  return g;
}

}  // namespace strongext
