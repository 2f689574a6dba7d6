#include "chib/bounds.hpp"
#include "colorer_support.hpp"

namespace chib {

namespace {

using namespace detail;

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

Coloring c5_frame(const Frame &f, Audit &audit);

// Components share one palette; each is colored on its own frame.
Coloring by_components(const Frame &f, Audit &audit,
                       const std::vector<VertexSet> &components) {
  Coloring out{std::vector<int>(f.g.order(), -1)};
  for (const auto &comp : components) {
    auto sf = descend(f, comp);
    Frame child{sf.sub.graph, sf.to_top, f.depth + 1};
    const auto c = c5_frame(child, audit);
    for (std::size_t i = 0; i < c.colors.size(); ++i)
      out.colors[sf.sub.to_host[i]] = c.colors[i];
  }
  out.compact();
  return out;
}

Coloring c5_frame(const Frame &f, Audit &audit) {
  const Graph &g = f.g;
  const std::size_t n = g.order();
  if (n <= 2) return trivial_coloring(g);
  const std::size_t omega = audit.omega(g, g.all());
  if (omega <= 2) return exact_leaf(f, audit, "c5.triangle-free-leaf", 4);
  if (auto comps = connected_components(g); comps.size() > 1) {
    auto out = by_components(f, audit, comps);
    audit.palette(f, "c5.components.palette", out.palette(),
                  evaluate_bound(ClassId::c5_free, omega));
    return out;
  }

  Vertex v = 0;
  for (Vertex w = 1; w < static_cast<Vertex>(n); ++w)
    if (g.degree(w) > g.degree(v)) v = w;
  const VertexSet pivot = singleton(g, v);
  const VertexSet n1 = g.neighbors(v);
  const VertexSet n2 = neighborhood(g, pivot, {NeighborhoodKind::at_distance, 2});
  const VertexSet n3 = neighborhood(g, pivot, {NeighborhoodKind::at_least, 3});
  const VertexSet far = n2 | n3;

  // cells[i]: neighbors u of v with omega(far minus N(u)) = i.
  std::vector<VertexSet> cells(omega + 1, VertexSet(n));
  n1.for_each([&](Vertex u) { cells[audit.omega(g, far - g.neighbors(u))].insert(u); });
  VertexSet high(n);
  for (std::size_t i = 3; i <= omega; ++i) high |= cells[i];
  const VertexSet low = cells[0] | cells[1] | cells[2];
  audit.check(f, "c5.high-cells-clique", Check::clique, {{"Ap", high}});

  BlockColoring blocks(n);
  if (low.empty()) {
    const Vertex vp = high.first();
    const VertexSet far_non = far - g.neighbors(vp);
    const VertexSet far_adj = far & g.neighbors(vp);
    audit.check(f, "c5.far-non-neighbors-cluster", Check::p3_free, {{"M", far_non}});
    audit.bounded(f, "c5.far-neighbors-omega", Check::omega_at_most, {{"N", far_adj}},
                  as_int(audit.omega(g, far_adj)), std::nullopt, as_int(omega) - 1);
    blocks.add(n1.to_vector(), distinct_colors(n1.size()));
    cluster_block(f, blocks, far_non);
    color_block(f, audit, blocks, far_adj, c5_frame);
  } else {
    const auto clique = audit.max_clique(g, low);
    const std::size_t omega0 = clique.size();
    const VertexSet cset = VertexSet::from_range(n, clique);
    VertexSet d(n);
    n2.for_each([&](Vertex w) {
      if (cset.is_subset_of(g.neighbors(w))) d.insert(w);
    });
    audit.bounded(f, "c5.d-omega", Check::omega_at_most, {{"D", d}},
                  as_int(audit.omega(g, d)), std::nullopt, as_int(omega - omega0));

    color_block(f, audit, blocks, low, c5_frame);
    color_block(f, audit, blocks, d, c5_frame);

    VertexSet remaining = n2 - d;
    const VertexSet whole = remaining;
    Sets parts{{"X", whole}};
    std::size_t b_palette = 0;
    for (std::size_t i = 0; i < omega0; ++i) {
      const Vertex t = clique[i];
      const VertexSet b = remaining - g.neighbors(t);
      remaining -= b;
      const std::string name = "B" + std::to_string(i + 1);
      parts.emplace_back(name, b);
      if (cells[0].contains(t)) {
        audit.check(f, "c5.b-cell-empty", Check::empty, {{name, b}});
      } else if (cells[1].contains(t)) {
        audit.check(f, "c5.b-cell-independent", Check::independent, {{name, b}});
        b_palette += blocks.add_uniform(b);
      } else {
        audit.check(f, "c5.b-cell-cluster", Check::p3_free, {{name, b}});
        const auto used = cluster_block(f, blocks, b);
        audit.bounded(f, "c5.b-cell-chi", Check::chi_at_most, {{name, b}}, as_int(used),
                      1, 2, "index bookkeeping of the cells is inconsistent");
        b_palette += used;
      }
    }
    audit.check(f, "c5.b-cells-partition", Check::partition, parts);
    audit.palette(f, "c5.b-cells-palette", b_palette, 2 * omega0);

    const VertexSet outer = high | n3;
    audit.check(f, "c5.outer-cluster", Check::p3_free, {{"ApN3", outer}});
    const auto used = cluster_block(f, blocks, outer);
    audit.palette(f, "c5.outer-palette", used, omega);
  }
  blocks.set(v, blocks.lowest_free(n1));
  auto out = std::move(blocks).finish();
  audit.palette(f, "c5.palette", out.palette(), evaluate_bound(ClassId::c5_free, omega));
  return out;
}

} // namespace

ColorerResult color_c5_free(const Graph &g, const ColorerOptions &opts) {
  return run_colorer(g, opts, ClassId::c5_free, c5_frame);
}

} // namespace chib
