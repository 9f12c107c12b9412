#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "strongext/error.hpp"

namespace strongext {

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An orientation of a simple graph on vertices 0..n-1: no loops and at most
/// one edge per unordered pair. Every mutation re-checks both rules.
class StrictDigraph {
 public:
  StrictDigraph() = default;
  explicit StrictDigraph(int n);

  /// Duplicate edges are collapsed; loops, antiparallel pairs and
  /// out-of-range endpoints throw Error.
  static StrictDigraph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  /// Returns false when the edge is already present.
  bool add_edge(Vertex u, Vertex v);

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;

  StrictDigraph reversed() const;

  /// Every unordered pair joined by exactly one edge.
  bool is_tournament() const;

  friend bool operator==(const StrictDigraph& a, const StrictDigraph& b) {
    return a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

/// Strong components of a digraph together with its acyclic quotient and the
/// weak-component structure.
///
/// Component ids follow a topological order of the quotient: among the
/// components whose predecessors are all placed, the one holding the smallest
/// vertex comes next. Weak components are ordered by smallest member.
struct Condensation {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> components;  // each sorted
  std::vector<Edge> quotient_edges;             // component ids, sorted
  std::vector<int> weak_component_of;
  std::vector<std::vector<Vertex>> weak_components;
  std::vector<int> source_components;  // ascending ids
  std::vector<int> sink_components;

  int r() const { return static_cast<int>(components.size()); }
  int s() const { return static_cast<int>(source_components.size()); }
  int t() const { return static_cast<int>(sink_components.size()); }
  int c() const { return static_cast<int>(weak_components.size()); }
  /// Weak components that are not a single strong component.
  int c_prime() const;
  /// Components that are a source or a sink, each counted once.
  int u() const;

  bool is_source(int component) const;
  bool is_sink(int component) const;

  /// Quotient adjacency lists, both directions.
  std::vector<std::vector<int>> successors() const;
  std::vector<std::vector<int>> predecessors() const;

  /// Components reachable from `component` in the quotient, itself included.
  std::vector<bool> reachable_from(int component) const;
  /// Components that reach `component`, itself included.
  std::vector<bool> reaching(int component) const;

  /// Strong components (ids) contained in weak component `weak`.
  std::vector<int> components_in_weak(int weak) const;
  bool weak_component_is_strong(int weak) const;
};

Condensation strong_components(const StrictDigraph& g);

/// False for the empty graph.
bool is_strong(const StrictDigraph& g);

bool is_weakly_connected(const StrictDigraph& g);

/// Blocks of the underlying undirected graph, ordered by smallest member.
std::vector<std::vector<Vertex>> weak_components(const StrictDigraph& g);

}  // namespace strongext
