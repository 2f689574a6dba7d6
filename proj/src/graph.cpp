#include "chib/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace chib {

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
  const auto n = static_cast<Vertex>(order());
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) +
                           "-" + std::to_string(v));
  if (u == v)
    throw InvalidParameter("self-loop on vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!rows_[u].contains(v)) return;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --edges_;
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  if (has_edge(u, v))
    remove_edge(u, v);
  else
    add_edge(u, v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
    for (Vertex v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &vertices) {
  InducedSubgraph sub{Graph(vertices.size()), vertices.to_vector()};
  const auto &ids = sub.to_host;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.has_edge(ids[i], ids[j]))
        sub.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return sub;
}

Graph make_basic(BasicKind kind, int k) {
  if (k < 1) throw InvalidParameter("graph order must be at least 1");
  Graph g(static_cast<std::size_t>(k));
  switch (kind) {
  case BasicKind::path:
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    g.set_name("P" + std::to_string(k));
    break;
  case BasicKind::cycle:
    if (k < 3) throw InvalidParameter("cycles need at least 3 vertices");
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    g.set_name("C" + std::to_string(k));
    break;
  case BasicKind::complete:
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    g.set_name("K" + std::to_string(k));
    break;
  case BasicKind::empty:
    g.set_name("E" + std::to_string(k));
    break;
  }
  return g;
}

namespace {

Graph side_by_side(const Graph &g, const Graph &h, bool cross) {
  const auto n = static_cast<Vertex>(g.order());
  const auto m = static_cast<Vertex>(h.order());
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(n + u, n + v);
  if (cross)
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < m; ++v) out.add_edge(u, n + v);
  return out;
}

} // namespace

Graph disjoint_union(const Graph &g, const Graph &h) {
  return side_by_side(g, h, false);
}

Graph join(const Graph &g, const Graph &h) { return side_by_side(g, h, true); }

Graph complement(const Graph &g) {
  const auto n = static_cast<Vertex>(g.order());
  Graph out(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph expansion(const Graph &g, std::span<const Graph> parts) {
  if (parts.size() != g.order())
    throw InvalidParameter("expansion needs one part per base vertex (got " +
                           std::to_string(parts.size()) + " for order " +
                           std::to_string(g.order()) + ")");
  std::vector<Vertex> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<Vertex>(parts[i].order());
  Graph out(static_cast<std::size_t>(offset.back()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto [u, v] : parts[i].edges()) out.add_edge(offset[i] + u, offset[i] + v);
  for (auto [a, b] : g.edges())
    for (Vertex u = offset[a]; u < offset[a + 1]; ++u)
      for (Vertex v = offset[b]; v < offset[b + 1]; ++v) out.add_edge(u, v);
  return out;
}

Graph complete_expansion(int k, const Graph &h) {
  if (k < 1) throw InvalidParameter("K_k(H) needs k >= 1");
  std::vector<Graph> parts(static_cast<std::size_t>(k), h);
  return expansion(make_basic(BasicKind::complete, k), parts);
}

Graph mycielskian(const Graph &g) {
  const auto n = static_cast<Vertex>(g.order());
  Graph out(2 * g.order() + 1);
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);
    out.add_edge(n + u, v);
    out.add_edge(u, n + v);
  }
  for (Vertex i = 0; i < n; ++i) out.add_edge(n + i, 2 * n);
  return out;
}

std::size_t min_degree(const Graph &g) {
  if (g.order() == 0) throw InvalidParameter("minimum degree of the empty graph");
  std::size_t best = g.order();
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    best = std::min(best, g.degree(v));
  return best;
}

std::vector<int> distances_from(const Graph &g, const VertexSet &x) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue;
  x.for_each([&](Vertex v) {
    dist[v] = 0;
    queue.push_back(v);
  });
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

VertexSet open_neighborhood(const Graph &g, const VertexSet &x) {
  VertexSet out = g.empty_set();
  x.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out - x;
}

VertexSet non_neighborhood(const Graph &g, const VertexSet &x) {
  return g.all() - x - open_neighborhood(g, x);
}

VertexSet neighborhood(const Graph &g, const VertexSet &x,
                       NeighborhoodQuery query) {
  switch (query.kind) {
  case NeighborhoodKind::closed:
    return x | open_neighborhood(g, x);
  case NeighborhoodKind::non:
    return non_neighborhood(g, x);
  case NeighborhoodKind::at_distance:
  case NeighborhoodKind::at_least:
    break;
  }
  if (query.level < 1) throw InvalidParameter("distance level must be >= 1");
  const auto dist = distances_from(g, x);
  VertexSet out = g.empty_set();
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const bool hit = query.kind == NeighborhoodKind::at_distance
                         ? dist[v] == query.level
                         : dist[v] >= query.level;
    if (hit) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph &g,
                                            const VertexSet &within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  for (Vertex s = left.first(); s >= 0; s = left.first()) {
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.insert(s);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next = g.empty_set();
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next &= within;
      frontier = next - comp;
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const Graph &g, const VertexSet &s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !(s - g.neighbors(v)).is_subset_of(VertexSet(g.order(), {v})))
      ok = false;
  });
  return ok;
}

bool is_independent(const Graph &g, const VertexSet &s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_complete_to(const Graph &g, const VertexSet &x, const VertexSet &y) {
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (ok && !(y - VertexSet(g.order(), {v})).is_subset_of(g.neighbors(v)))
      ok = false;
  });
  return ok;
}

bool is_anticomplete_to(const Graph &g, const VertexSet &x, const VertexSet &y) {
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(y)) ok = false;
  });
  return ok;
}

std::size_t Coloring::palette() const {
  std::vector<int> seen(colors.begin(), colors.end());
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) -
                                  seen.begin());
}

void Coloring::compact() {
  std::vector<int> remap;
  for (int &c : colors) {
    if (c < 0) continue;
    if (static_cast<std::size_t>(c) >= remap.size()) remap.resize(c + 1, -1);
    if (remap[c] < 0)
      remap[c] = static_cast<int>(std::count_if(remap.begin(), remap.end(),
                                                [](int r) { return r >= 0; }));
    c = remap[c];
  }
}

bool is_induced_embedding(const Graph &pattern, const Graph &host,
                          std::span<const Vertex> map) {
  if (map.size() != pattern.order()) return false;
  VertexSet used(host.order());
  for (Vertex h : map) {
    if (h < 0 || static_cast<std::size_t>(h) >= host.order() || used.contains(h))
      return false;
    used.insert(h);
  }
  for (std::size_t a = 0; a < map.size(); ++a)
    for (std::size_t b = a + 1; b < map.size(); ++b)
      if (pattern.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)) !=
          host.has_edge(map[a], map[b]))
        return false;
  return true;
}

} // namespace chib
