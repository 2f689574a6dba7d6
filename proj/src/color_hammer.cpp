#include "colorer_support.hpp"

namespace chib {

namespace {

using namespace detail;

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

Coloring p2k3_frame(const Frame &f, Audit &audit) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  if (n <= 2) return trivial_coloring(g);

  const auto clique = audit.max_clique(g, g.all());
  const std::size_t omega = clique.size();
  const Vertex v1 = clique.front();
  VertexSet rest_of_clique = VertexSet::from_range(n, clique);
  rest_of_clique.erase(v1);

  VertexSet outside = g.all() - g.neighbors(v1);
  outside.erase(v1);
  // cells[i] holds the vertices whose first non-neighbor on the clique is clique[i].
  std::vector<VertexSet> cells(omega, VertexSet(n));
  VertexSet b(n);
  outside.for_each([&](Vertex w) {
    for (std::size_t i = 1; i < omega; ++i)
      if (!g.has_edge(w, clique[i])) {
        cells[i].insert(w);
        return;
      }
    b.insert(w);
  });

  for (std::size_t i = 1; i < omega; ++i)
    audit.check(f, "p2k3.cell-small", Check::small_components,
                {{"A" + std::to_string(i + 1), cells[i]}});
  audit.check(f, "p2k3.rest-complete-clique", Check::complete_to,
              {{"B", b}, {"C", rest_of_clique}});
  VertexSet bv = b;
  bv.insert(v1);
  audit.check(f, "p2k3.rest-independent", Check::independent, {{"Bv1", bv}});
  const VertexSet nv = g.neighbors(v1);
  audit.bounded(f, "p2k3.neighborhood-omega", Check::omega_at_most, {{"N", nv}},
                as_int(audit.omega(g, nv)), std::nullopt, as_int(omega) - 1);

  BlockColoring blocks(n);
  blocks.add_uniform(bv);
  for (std::size_t i = 1; i < omega; ++i) cluster_block(f, blocks, cells[i]);
  color_block(f, audit, blocks, nv, p2k3_frame);
  auto out = std::move(blocks).finish();
  audit.palette(f, "p2k3.palette", out.palette(), omega * omega);
  return out;
}

Coloring hammer_frame(const Frame &f, Audit &audit) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  if (n <= 2) return trivial_coloring(g);
  const auto q = find_induced(g, make_pattern("p2_union_k3"));
  if (!q) return p2k3_frame(f, audit);

  const std::size_t omega = audit.omega(g, g.all());
  const Vertex u1 = q->map[0], u2 = q->map[1];
  const VertexSet u(n, {u1, u2});
  audit.check(f, "hammer.twin-edge", Check::same_neighbors,
              {{"u1", singleton(g, u1)}, {"u2", singleton(g, u2)}, {"Q", image_set(g, *q)}});
  const VertexSet nb = open_neighborhood(g, u);
  const VertexSet m = non_neighborhood(g, u);
  audit.bounded(f, "hammer.neighborhood-omega", Check::omega_at_most, {{"N", nb}},
                as_int(audit.omega(g, nb)), std::nullopt, as_int(omega) - 2);
  audit.check(f, "hammer.outside-cluster", Check::p3_free, {{"MU", m | u}});

  BlockColoring blocks(n);
  color_block(f, audit, blocks, nb, hammer_frame);
  cluster_block(f, blocks, m | u);
  auto out = std::move(blocks).finish();
  audit.palette(f, "hammer.palette", out.palette(), omega * omega);
  return out;
}

} // namespace

namespace detail {

Coloring color_p2k3_frame(const Frame &f, Audit &audit) { return p2k3_frame(f, audit); }

} // namespace detail

ColorerResult color_p2k3_free(const Graph &g, const ColorerOptions &opts) {
  return run_colorer(g, opts, ClassId::p2k3_free, p2k3_frame);
}

ColorerResult color_hammer_free(const Graph &g, const ColorerOptions &opts) {
  return run_colorer(g, opts, ClassId::hammer_free, hammer_frame);
}

} // namespace chib
