#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chib/errors.hpp"
#include "chib/vertex_set.hpp"

namespace chib {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex ids 0..order()-1.
///
/// Adjacency rows are bitsets, so neighborhood intersections cost
/// O(order / 64). Equality compares labeled adjacency only; the name is a
/// display label.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  const VertexSet &neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Every vertex id, as a set sized for this graph.
  VertexSet all() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.rows_ == b.rows_;
  }

private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
  std::string name_;
};

/// Graph induced by a vertex subset, renumbered in ascending host order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &vertices);

enum class BasicKind { path, cycle, complete, empty };

/// P_k, C_k, K_k or the edgeless graph on k vertices. Paths and cycles are
/// numbered along the path; k >= 1 (k >= 3 for cycles).
Graph make_basic(BasicKind kind, int k);

/// Left operand keeps ids 0..|g|-1; the right operand follows.
Graph disjoint_union(const Graph &g, const Graph &h);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph &g, const Graph &h);
Graph complement(const Graph &g);
/// Replaces vertex i of `g` by parts[i]; parts are concatenated in order and
/// two parts are complete to each other iff their base vertices are adjacent.
Graph expansion(const Graph &g, std::span<const Graph> parts);
/// K_k(h): expansion of K_k with k copies of h.
Graph complete_expansion(int k, const Graph &h);
/// Vertices 0..n-1 copy g, n..2n-1 are the shadows, 2n is the apex.
Graph mycielskian(const Graph &g);

std::size_t min_degree(const Graph &g);

enum class NeighborhoodKind {
  at_distance, ///< N^i(X)
  at_least,    ///< N^{>=i}(X)
  closed,      ///< X together with N(X)
  non,         ///< M(X) = V minus (X and N(X))
};

struct NeighborhoodQuery {
  NeighborhoodKind kind = NeighborhoodKind::at_distance;
  int level = 1;
};

/// Distance from `x` for every vertex (0 on x, -1 when unreachable).
std::vector<int> distances_from(const Graph &g, const VertexSet &x);
VertexSet neighborhood(const Graph &g, const VertexSet &x,
                       NeighborhoodQuery query = {});
/// N(X): vertices outside X with a neighbor in X.
VertexSet open_neighborhood(const Graph &g, const VertexSet &x);
/// M(X) = V minus (X and N(X)).
VertexSet non_neighborhood(const Graph &g, const VertexSet &x);

std::vector<VertexSet> connected_components(const Graph &g,
                                            const VertexSet &within);
inline std::vector<VertexSet> connected_components(const Graph &g) {
  return connected_components(g, g.all());
}

bool is_clique(const Graph &g, const VertexSet &s);
bool is_independent(const Graph &g, const VertexSet &s);
/// Every vertex of x is adjacent to every vertex of y (x, y disjoint).
bool is_complete_to(const Graph &g, const VertexSet &x, const VertexSet &y);
bool is_anticomplete_to(const Graph &g, const VertexSet &x, const VertexSet &y);

/// Vertex to color assignment. Colors are non-negative; the palette is the
/// number of distinct colors in use.
struct Coloring {
  std::vector<int> colors;

  std::size_t palette() const;
  /// Renumbers colors to 0..palette()-1 preserving first-occurrence order.
  void compact();
};

/// Induced occurrence of a pattern: map[a] is the host image of pattern
/// vertex a.
struct Embedding {
  std::vector<Vertex> map;
};

/// Injective, in range, and edges and non-edges both preserved.
bool is_induced_embedding(const Graph &pattern, const Graph &host,
                          std::span<const Vertex> map);

} // namespace chib
