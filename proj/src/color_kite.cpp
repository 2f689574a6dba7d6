#include <deque>

#include "colorer_support.hpp"

namespace chib {

namespace {

using namespace detail;

Coloring color_frame(const Frame &f, Audit &audit);

Coloring p2k3_branch(const Frame &f, Audit &audit, const Embedding &q,
                     std::size_t omega) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  const Vertex u1 = q.map[0], u2 = q.map[1];
  const VertexSet u(n, {u1, u2});
  const VertexSet qset = image_set(g, q);

  VertexSet p1 = g.neighbors(u1) - g.neighbors(u2);
  p1.erase(u2);
  VertexSet p2 = g.neighbors(u2) - g.neighbors(u1);
  p2.erase(u1);
  audit.check(f, "kite.p2k3.private-independent", Check::independent,
              {{"P1", p1}, {"Q", qset}});
  audit.check(f, "kite.p2k3.private-independent", Check::independent,
              {{"P2", p2}, {"Q", qset}});

  const VertexSet m = non_neighborhood(g, u);
  audit.check(f, "kite.p2k3.outside-cluster", Check::p3_free, {{"MU", m | u}});
  const VertexSet c1 = VertexSet::from_range(n, audit.max_clique(g, m));

  const VertexSet common = g.neighbors(u1) & g.neighbors(u2);
  VertexSet d(n);
  common.for_each([&](Vertex v) {
    VertexSet rest = common;
    rest.erase(v);
    if (rest.is_subset_of(g.neighbors(v))) d.insert(v);
  });
  const VertexSet c = common - d;

  audit.check(f, "kite.p2k3.d-clique", Check::clique, {{"D", d}});
  audit.check(f, "kite.p2k3.c-touches-c1", Check::touches, {{"C", c}, {"C1", c1}});
  audit.check(f, "kite.p2k3.c-complete-c1", Check::complete_to, {{"C", c}, {"C1", c1}});
  audit.check(f, "kite.p2k3.d-complete-c", Check::complete_to, {{"D", d}, {"C", c}});
  audit.check(f, "kite.p2k3.partition", Check::partition,
              {{"V", g.all()}, {"U", u}, {"P1", p1}, {"P2", p2}, {"D", d}, {"C", c},
               {"M", m}});
  const auto omega1 = static_cast<std::int64_t>(audit.omega(g, c));
  audit.bounded(f, "kite.p2k3.outside-omega", Check::omega_at_most, {{"M", m}},
                static_cast<std::int64_t>(audit.omega(g, m)), std::nullopt,
                static_cast<std::int64_t>(omega) - omega1);

  BlockColoring blocks(n);
  blocks.add_uniform(p1);
  blocks.add_uniform(p2);
  blocks.add(d.to_vector(), distinct_colors(d.size()));
  color_block(f, audit, blocks, c, color_frame);
  cluster_block(f, blocks, m | u);
  auto out = std::move(blocks).finish();
  audit.palette(f, "kite.p2k3.palette", out.palette(), 2 * omega);
  return out;
}

// Cells N_S of the vertices outside {v1,v2,v4,v5} with a neighbor in it,
// indexed by the adjacency mask over (v1, v2, v4, v5).
constexpr unsigned kPairCells[] = {0b0101, 0b1001, 0b0110, 0b1010};
constexpr unsigned kTripleCells[] = {0b0111, 0b1011, 0b1101, 0b1110};
constexpr unsigned kEmptyCells[] = {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100};

std::string cell_name(unsigned mask) {
  static constexpr char kLabels[] = {'1', '2', '4', '5'};
  std::string name = "N";
  for (int i = 0; i < 4; ++i)
    if (mask >> i & 1U) name += kLabels[i];
  return name;
}

Coloring hammer_branch(const Frame &f, Audit &audit, const Embedding &q,
                       std::size_t omega) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  const Vertex v1 = q.map[0], v2 = q.map[1], v4 = q.map[3], v5 = q.map[4];
  const VertexSet base(n, {v1, v2, v4, v5});
  const VertexSet qset = image_set(g, q);
  const VertexSet nb = open_neighborhood(g, base);

  std::vector<VertexSet> cells(16, VertexSet(n));
  nb.for_each([&](Vertex w) {
    unsigned mask = 0;
    const Vertex anchors[] = {v1, v2, v4, v5};
    for (int i = 0; i < 4; ++i)
      if (g.has_edge(w, anchors[i])) mask |= 1U << i;
    cells[mask].insert(w);
  });

  for (unsigned mask : kEmptyCells)
    audit.check(f, "kite.hammer.cell-empty", Check::empty,
                {{cell_name(mask), cells[mask]}, {"Q", qset}});
  VertexSet j2(n), j3(n);
  for (unsigned mask : kPairCells) {
    audit.check(f, "kite.hammer.cell-independent", Check::independent,
                {{cell_name(mask), cells[mask]}, {"Q", qset}});
    j2 |= cells[mask];
  }
  for (unsigned mask : kTripleCells) {
    audit.check(f, "kite.hammer.cell-independent", Check::independent,
                {{cell_name(mask), cells[mask]}, {"Q", qset}});
    j3 |= cells[mask];
  }
  audit.check(f, "kite.hammer.j2-anticomplete-j3", Check::anticomplete,
              {{"J2", j2}, {"J3", j3}});

  const VertexSet &t = cells[0b1111];
  audit.check(f, "kite.hammer.core-complete-q", Check::complete_to,
              {{"T", t}, {"Q", qset}});
  audit.bounded(f, "kite.hammer.core-omega", Check::omega_at_most, {{"T", t}},
                static_cast<std::int64_t>(audit.omega(g, t)), std::nullopt,
                static_cast<std::int64_t>(omega) - 3);

  const VertexSet r = g.all() - nb;
  audit.check(f, "kite.hammer.outside-small", Check::small_components, {{"R", r}});
  audit.check(f, "kite.hammer.partition", Check::partition,
              {{"V", g.all()}, {"R", r}, {"J2", j2}, {"J3", j3}, {"T", t}});

  BlockColoring blocks(n);
  auto side = [&](const std::string &tag, const std::string &name, const VertexSet &part) {
    auto c = audit.exact_color(g, part);
    audit.bounded(f, tag, Check::chi_at_most,
                  {{name, part}}, static_cast<std::int64_t>(c.palette()), 2,
                  std::nullopt, "two colors per side is asserted without argument");
    blocks.add(part.to_vector(), std::move(c));
  };
  side("kite.hammer.j2-bipartite", "J2", j2);
  side("kite.hammer.j3-bipartite", "J3", j3);
  color_block(f, audit, blocks, t, color_frame);
  cluster_block(f, blocks, r);
  auto out = std::move(blocks).finish();
  audit.palette(f, "kite.hammer.palette", out.palette(), 2 * omega);
  return out;
}

// A join colors as the disjoint union of its sides, so each co-component
// recurses on its own palette.
Coloring join_branch(const Frame &f, Audit &audit, const std::vector<VertexSet> &parts,
                     std::size_t omega) {
  const Graph &g = f.g;
  BlockColoring blocks(g.order());
  for (const auto &part : parts) {
    audit.check(f, "kite.join.complete", Check::complete_to,
                {{"A", part}, {"B", g.all() - part}});
    color_block(f, audit, blocks, part, color_frame);
  }
  auto out = std::move(blocks).finish();
  audit.palette(f, "kite.join.palette", out.palette(), 2 * omega);
  return out;
}

Coloring decompose(const Frame &f, Audit &audit) {
  const Graph &g = f.g;
  const auto omega = audit.omega(g, g.all());
  if (omega <= 2) return exact_leaf(f, audit, "kite.triangle-free-leaf", 4);
  if (auto parts = connected_components(complement(g)); parts.size() > 1)
    return join_branch(f, audit, parts, omega);
  if (auto q = find_induced(g, make_pattern("p2_union_k3")))
    return p2k3_branch(f, audit, *q, omega);
  if (auto q = find_induced(g, make_pattern("hammer")))
    return hammer_branch(f, audit, *q, omega);
  audit.pattern_free(f, "kite.k1k3-free", g.all(), "k1_union_k3");
  return exact_leaf(f, audit, "kite.k1k3-leaf", static_cast<std::int64_t>(2 * omega));
}

Coloring color_frame(const Frame &f, Audit &audit) {
  if (f.g.order() <= 2) return trivial_coloring(f.g);

  std::deque<DominationStep> chain;
  std::vector<Vertex> to_top = f.to_top;
  const Graph *cur = &f.g;
  while (cur->order() > 2) {
    auto step = domination_reduce(*cur);
    if (!step) break;
    Frame here{*cur, to_top, f.depth};
    audit.check(here, "kite.dominated", Check::dominated,
                {{"u", singleton(*cur, step->removed)}, {"v", singleton(*cur, step->dominator)}});
    std::vector<Vertex> next;
    next.reserve(step->kept.size());
    for (Vertex v : step->kept) next.push_back(to_top[v]);
    to_top = std::move(next);
    chain.push_back(std::move(*step));
    cur = &chain.back().reduced;
  }

  Frame reduced{*cur, to_top, f.depth};
  Coloring c = cur->order() <= 2 ? trivial_coloring(*cur) : decompose(reduced, audit);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) c = it->extend(c);
  return c;
}

} // namespace

ColorerResult color_kite_free(const Graph &g, const ColorerOptions &opts) {
  return run_colorer(g, opts, ClassId::kite_free, color_frame);
}

} // namespace chib
