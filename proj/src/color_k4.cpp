#include "colorer_support.hpp"

namespace chib {

namespace {

using namespace detail;

// Colors G around the triangle `tri` of an induced 2K3 (two_triangles) or
// P2 u K3: the pair cells each join the triangle vertex they miss, the
// singleton cells share one color and M(C) is a cluster graph.
Coloring triangle_branch(const Frame &f, Audit &audit, const Embedding &q,
                         const Vertex (&tri)[3], bool two_triangles) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  const std::string prefix = two_triangles ? "k4.2k3." : "k4.p2k3.";
  const VertexSet c(n, {tri[0], tri[1], tri[2]});
  const VertexSet qset = image_set(g, q);

  std::vector<VertexSet> cells(8, VertexSet(n));
  open_neighborhood(g, c).for_each([&](Vertex w) {
    unsigned mask = 0;
    for (int i = 0; i < 3; ++i)
      if (g.has_edge(w, tri[i])) mask |= 1U << i;
    cells[mask].insert(w);
  });

  audit.check(f, prefix + "full-cell-empty", Check::empty, {{"N123", cells[7]}});
  const VertexSet singles = cells[1] | cells[2] | cells[4];
  if (two_triangles) {
    for (unsigned mask : {1U, 2U, 4U})
      audit.check(f, prefix + "single-cell-empty", Check::empty,
                  {{"N" + std::to_string(mask == 4 ? 3 : mask), cells[mask]}, {"Q", qset}});
  } else {
    audit.check(f, prefix + "single-cells-independent", Check::independent,
                {{"N1N2N3", singles}, {"Q", qset}});
  }

  // Pair cell missing tri[i], together with tri[i].
  const unsigned pair_of[3] = {0b110, 0b101, 0b011};
  std::vector<VertexSet> classes;
  for (int i = 0; i < 3; ++i) {
    VertexSet cls = cells[pair_of[i]];
    cls.insert(tri[i]);
    audit.check(f, prefix + "pair-class-independent", Check::independent,
                {{"P" + std::to_string(i + 1), cls}});
    classes.push_back(std::move(cls));
  }

  const VertexSet m = non_neighborhood(g, c);
  audit.check(f, prefix + "outside-cluster", Check::p3_free, {{"M", m}});
  audit.bounded(f, prefix + "outside-omega", Check::omega_at_most, {{"M", m}},
                static_cast<std::int64_t>(audit.omega(g, m)), std::nullopt,
                two_triangles ? 3 : 2);

  BlockColoring blocks(n);
  blocks.add_uniform(singles);
  for (const auto &cls : classes) blocks.add_uniform(cls);
  cluster_block(f, blocks, m);
  auto out = std::move(blocks).finish();
  audit.palette(f, prefix + "palette", out.palette(), 6);
  return out;
}

Coloring k4_frame(const Frame &f, Audit &audit) {
  const Graph &g = f.g;
  if (g.order() <= 2) return trivial_coloring(g);
  if (audit.omega(g, g.all()) <= 2)
    return exact_leaf(f, audit, "k4.triangle-free-leaf", 4);
  if (auto q = find_induced(g, make_pattern("2k3"))) {
    const Vertex tri[3] = {q->map[0], q->map[1], q->map[2]};
    return triangle_branch(f, audit, *q, tri, true);
  }
  if (auto q = find_induced(g, make_pattern("p2_union_k3"))) {
    const Vertex tri[3] = {q->map[2], q->map[3], q->map[4]};
    return triangle_branch(f, audit, *q, tri, false);
  }
  return color_p2k3_frame(f, audit);
}

} // namespace

ColorerResult color_k4_free(const Graph &g, const ColorerOptions &opts) {
  return run_colorer(g, opts, ClassId::k4_free, k4_frame);
}

} // namespace chib
