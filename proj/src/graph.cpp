#include "strongext/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace strongext {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::malformed_line: return "malformed line";
    case Errc::loop: return "loop";
    case Errc::antiparallel: return "antiparallel pair";
    case Errc::vertex_out_of_range: return "vertex out of range";
    case Errc::invalid_certificate: return "invalid certificate";
    case Errc::empty_graph: return "empty graph";
    case Errc::too_small: return "too small";
    case Errc::disconnected: return "not weakly connected";
    case Errc::has_complete_dicut: return "has a complete dicut";
    case Errc::not_strong: return "not strongly connected";
    case Errc::not_tournament: return "not a tournament";
    case Errc::budget_exceeded: return "budget exceeded";
    case Errc::invalid_input: return "invalid input";
    case Errc::invalid_dice: return "invalid dice";
  }
  return "unknown error";
}

StrictDigraph::StrictDigraph(int n) {
  if (n < 0) throw Error(Errc::invalid_input, "negative vertex count");
  out_.resize(static_cast<std::size_t>(n));
  in_.resize(static_cast<std::size_t>(n));
}

StrictDigraph StrictDigraph::from_edges(int n, std::span<const Edge> edges) {
  StrictDigraph g(n);
  for (const Edge& e : edges) g.add_edge(e.from, e.to);
  return g;
}

void StrictDigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside [0, " + std::to_string(order()) + ")");
  }
}

bool StrictDigraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nb = out_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool StrictDigraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::loop, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  if (has_edge(v, u)) {
    throw Error(Errc::antiparallel, "edge " + std::to_string(u) + "->" + std::to_string(v) +
                                        " is antiparallel to an existing edge");
  }
  auto& out = out_[u];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  auto& in = in_[v];
  in.insert(std::lower_bound(in.begin(), in.end(), u), u);
  ++edge_count_;
  return true;
}

std::vector<Edge> StrictDigraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) result.push_back({u, v});
  return result;
}

StrictDigraph StrictDigraph::reversed() const {
  StrictDigraph r(order());
  r.out_ = in_;
  r.in_ = out_;
  r.edge_count_ = edge_count_;
  return r;
}

bool StrictDigraph::is_tournament() const {
  const std::size_t n = out_.size();
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// --- Condensation ----------------------------------------------------------

int Condensation::c_prime() const {
  int count = 0;
  for (int w = 0; w < c(); ++w)
    if (!weak_component_is_strong(w)) ++count;
  return count;
}

int Condensation::u() const {
  int count = 0;
  for (int id = 0; id < r(); ++id)
    if (is_source(id) || is_sink(id)) ++count;
  return count;
}

bool Condensation::is_source(int component) const {
  return std::binary_search(source_components.begin(), source_components.end(), component);
}

bool Condensation::is_sink(int component) const {
  return std::binary_search(sink_components.begin(), sink_components.end(), component);
}

std::vector<std::vector<int>> Condensation::successors() const {
  std::vector<std::vector<int>> adj(components.size());
  for (const Edge& e : quotient_edges) adj[e.from].push_back(e.to);
  return adj;
}

std::vector<std::vector<int>> Condensation::predecessors() const {
  std::vector<std::vector<int>> adj(components.size());
  for (const Edge& e : quotient_edges) adj[e.to].push_back(e.from);
  return adj;
}

namespace {

std::vector<bool> bfs(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> queue{start};
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int next : adj[queue[head]]) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

// Iterative Tarjan. Returns a raw component label per vertex.
std::vector<int> tarjan_labels(const StrictDigraph& g, int& count) {
  const int n = g.order();
  std::vector<int> index(n, -1), low(n, 0), label(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int next_index = 0;
  count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& nb = g.out_neighbors(v);
      if (pos < nb.size()) {
        Vertex w = nb[pos++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = count;
        } while (w != done);
        ++count;
      }
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return label;
}

}  // namespace

std::vector<bool> Condensation::reachable_from(int component) const {
  return bfs(successors(), component);
}

std::vector<bool> Condensation::reaching(int component) const {
  return bfs(predecessors(), component);
}

std::vector<int> Condensation::components_in_weak(int weak) const {
  std::vector<int> ids;
  for (int id = 0; id < r(); ++id)
    if (weak_component_of[components[id].front()] == weak) ids.push_back(id);
  return ids;
}

bool Condensation::weak_component_is_strong(int weak) const {
  const Vertex first = weak_components[weak].front();
  return components[component_of[first]].size() == weak_components[weak].size();
}

std::vector<std::vector<Vertex>> weak_components(const StrictDigraph& g) {
  const int n = g.order();
  std::vector<int> block(n, -1);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex start = 0; start < n; ++start) {
    if (block[start] != -1) continue;
    const int id = static_cast<int>(blocks.size());
    std::vector<Vertex> members{start};
    block[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex v = members[head];
      for (const auto* nb : {&g.out_neighbors(v), &g.in_neighbors(v)}) {
        for (Vertex w : *nb) {
          if (block[w] == -1) {
            block[w] = id;
            members.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    blocks.push_back(std::move(members));
  }
  return blocks;
}

bool is_weakly_connected(const StrictDigraph& g) {
  return g.order() > 0 && weak_components(g).size() == 1;
}

Condensation strong_components(const StrictDigraph& g) {
  const int n = g.order();
  int raw_count = 0;
  const std::vector<int> raw = tarjan_labels(g, raw_count);

  std::vector<std::vector<Vertex>> raw_members(raw_count);
  for (Vertex v = 0; v < n; ++v) raw_members[raw[v]].push_back(v);

  std::vector<std::vector<int>> raw_succ(raw_count);
  std::vector<int> indegree(raw_count, 0);
  for (const Edge& e : g.edges()) {
    const int a = raw[e.from], b = raw[e.to];
    if (a != b) raw_succ[a].push_back(b);
  }
  for (auto& succ : raw_succ) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    for (int b : succ) ++indegree[b];
  }

  // Kahn's algorithm keyed by smallest member vertex.
  using Item = std::pair<Vertex, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int id = 0; id < raw_count; ++id)
    if (indegree[id] == 0) ready.push({raw_members[id].front(), id});

  std::vector<int> renumber(raw_count, -1);
  int next_id = 0;
  while (!ready.empty()) {
    const int id = ready.top().second;
    ready.pop();
    renumber[id] = next_id++;
    for (int b : raw_succ[id])
      if (--indegree[b] == 0) ready.push({raw_members[b].front(), b});
  }

  Condensation cond;
  cond.component_of.resize(n);
  cond.components.resize(raw_count);
  for (Vertex v = 0; v < n; ++v) cond.component_of[v] = renumber[raw[v]];
  for (int id = 0; id < raw_count; ++id) cond.components[renumber[id]] = raw_members[id];

  std::vector<bool> has_in(raw_count, false), has_out(raw_count, false);
  for (int a = 0; a < raw_count; ++a) {
    for (int b : raw_succ[a]) {
      cond.quotient_edges.push_back({renumber[a], renumber[b]});
      has_out[renumber[a]] = true;
      has_in[renumber[b]] = true;
    }
  }
  std::sort(cond.quotient_edges.begin(), cond.quotient_edges.end());
  for (int id = 0; id < raw_count; ++id) {
    if (!has_in[id]) cond.source_components.push_back(id);
    if (!has_out[id]) cond.sink_components.push_back(id);
  }

  cond.weak_components = weak_components(g);
  cond.weak_component_of.assign(n, -1);
  for (int w = 0; w < static_cast<int>(cond.weak_components.size()); ++w)
    for (Vertex v : cond.weak_components[w]) cond.weak_component_of[v] = w;
  return cond;
}

bool is_strong(const StrictDigraph& g) {
  if (g.order() == 0) return false;
  return strong_components(g).r() == 1;
}

}  // namespace strongext
