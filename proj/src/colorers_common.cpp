#include <algorithm>

#include "chib/bounds.hpp"
#include "chib/catalog.hpp"
#include "colorer_support.hpp"

namespace chib {

namespace detail {

TraceStep Audit::make_step(const Frame &f, std::string tag, Check check,
                           const Sets &sets) const {
  TraceStep step;
  step.tag = std::move(tag);
  step.check = check;
  step.depth = f.depth;
  step.sets.push_back({"scope", f.g.all().to_vector()});
  for (const auto &[name, set] : sets) step.sets.push_back({name, set.to_vector()});
  return step;
}

void Audit::record(TraceStep local, const Frame &f) {
  for (auto &set : local.sets) {
    for (auto &v : set.members) v = f.to_top.at(v);
    std::sort(set.members.begin(), set.members.end());
  }
  const bool violated = local.verdict == Verdict::violated;
  std::string what = "audit step '" + local.tag + "' violated";
  trace_.steps.push_back(std::move(local));
  if (violated) throw AuditViolation(what, trace_);
}

void Audit::check(const Frame &f, std::string tag, Check check, const Sets &sets,
                  std::string note) {
  auto step = make_step(f, std::move(tag), check, sets);
  step.note = std::move(note);
  step.verdict = evaluate_step(f.g, step, budget_);
  record(std::move(step), f);
}

void Audit::pattern_free(const Frame &f, std::string tag, const VertexSet &x,
                         const std::string &pattern) {
  auto step = make_step(f, std::move(tag), Check::pattern_free, {{"X", x}});
  step.pattern = pattern;
  step.verdict = evaluate_step(f.g, step, budget_);
  record(std::move(step), f);
}

Verdict Audit::bounded(const Frame &f, std::string tag, Check check, const Sets &sets,
                       std::int64_t value, std::optional<std::int64_t> claimed,
                       std::optional<std::int64_t> bound, std::string note) {
  auto step = make_step(f, std::move(tag), check, sets);
  step.value = value;
  step.claimed = claimed;
  step.bound = bound;
  step.note = std::move(note);
  step.verdict = judge(value, step);
  const Verdict v = step.verdict;
  record(std::move(step), f);
  return v;
}

void Audit::palette(const Frame &f, std::string tag, std::size_t value,
                    std::uint64_t bound, std::string note) {
  bounded(f, std::move(tag), Check::palette_at_most, {}, static_cast<std::int64_t>(value),
          std::nullopt, static_cast<std::int64_t>(bound), std::move(note));
}

std::vector<Vertex> Audit::max_clique(const Graph &g, const VertexSet &x) const {
  auto r = max_clique_in(g, x, budget_);
  if (!r.exact())
    throw BudgetExhausted("clique search exhausted its budget (best " +
                          std::to_string(r.lower) + ", bound " +
                          std::to_string(r.upper) + ")");
  return r.members;
}

std::size_t Audit::omega(const Graph &g, const VertexSet &x) const {
  return max_clique(g, x).size();
}

Coloring Audit::exact_color(const Graph &g, const VertexSet &x) const {
  if (x.empty()) return {};
  auto sub = induced_subgraph(g, x);
  auto r = chromatic_number(sub.graph, budget_);
  r.value();
  return r.coloring;
}

std::size_t BlockColoring::add(const std::vector<Vertex> &vertices, Coloring block) {
  if (vertices.empty()) return 0;
  block.compact();
  const auto used = block.palette();
  for (std::size_t i = 0; i < vertices.size(); ++i)
    colors_.at(vertices[i]) = next_ + block.colors.at(i);
  next_ += static_cast<int>(used);
  return used;
}

std::size_t BlockColoring::add_uniform(const VertexSet &x) {
  if (x.empty()) return 0;
  x.for_each([&](Vertex v) { colors_.at(v) = next_; });
  ++next_;
  return 1;
}

int BlockColoring::lowest_free(const VertexSet &x) const {
  std::vector<char> taken(static_cast<std::size_t>(next_) + 1, 0);
  x.for_each([&](Vertex v) {
    if (colors_[v] >= 0) taken[colors_[v]] = 1;
  });
  int c = 0;
  while (taken[c]) ++c;
  return c;
}

Coloring BlockColoring::finish() && {
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] < 0)
      throw std::logic_error("decomposition left vertex " + std::to_string(v) +
                             " uncolored");
  Coloring c{std::move(colors_)};
  c.compact();
  return c;
}

SubFrame descend(const Frame &f, const VertexSet &x) {
  SubFrame sf{induced_subgraph(f.g, x), {}};
  sf.to_top.reserve(sf.sub.to_host.size());
  for (Vertex v : sf.sub.to_host) sf.to_top.push_back(f.to_top.at(v));
  return sf;
}

Coloring trivial_coloring(const Graph &g) {
  Coloring c{std::vector<int>(g.order(), 0)};
  if (g.order() == 2 && g.has_edge(0, 1)) c.colors[1] = 1;
  return c;
}

VertexSet image_set(const Graph &g, const Embedding &e) {
  return VertexSet::from_range(g.order(), e.map);
}

Coloring distinct_colors(std::size_t count) {
  Coloring c;
  for (std::size_t i = 0; i < count; ++i) c.colors.push_back(static_cast<int>(i));
  return c;
}

VertexSet singleton(const Graph &g, Vertex v) { return VertexSet(g.order(), {v}); }

std::size_t cluster_block(const Frame &f, BlockColoring &blocks, const VertexSet &x) {
  if (x.empty()) return 0;
  auto sf = descend(f, x);
  return blocks.add(sf.sub.to_host, cluster_color(sf.sub.graph));
}

Coloring exact_leaf(const Frame &f, Audit &audit, const std::string &tag,
                    std::int64_t bound, std::string note) {
  Coloring c = audit.exact_color(f.g, f.g.all());
  audit.bounded(f, tag, Check::chi_at_most, {{"X", f.g.all()}},
                static_cast<std::int64_t>(c.palette()), std::nullopt, bound,
                std::move(note));
  return c;
}

std::size_t color_block(const Frame &f, Audit &audit, BlockColoring &blocks,
                        const VertexSet &x, FrameColorer colorer) {
  if (x.empty()) return 0;
  auto sf = descend(f, x);
  Frame child{sf.sub.graph, sf.to_top, f.depth + 1};
  return blocks.add(sf.sub.to_host, colorer(child, audit));
}

ColorerResult run_colorer(const Graph &g, const ColorerOptions &opts, ClassId cls,
                          FrameColorer colorer) {
  if (opts.check_membership) require_member(g, cls);
  ColorerResult result;
  if (g.order() == 0) return result;
  Audit audit(opts.budget);
  std::vector<Vertex> ids(g.order());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
  Frame top{g, ids, 0};
  result.coloring = colorer(top, audit);
  result.omega = audit.omega(g, g.all());
  result.bound = evaluate_bound(cls, result.omega);
  audit.palette(top, "final.palette", result.coloring.palette(), result.bound);
  if (auto v = verify_coloring(g, result.coloring); !v.proper)
    throw std::logic_error("colorer produced an improper coloring");
  result.trace = audit.take();
  return result;
}

} // namespace detail

Coloring cluster_color(const Graph &g) {
  Coloring c{std::vector<int>(g.order(), 0)};
  for (const auto &comp : connected_components(g)) {
    if (!is_clique(g, comp)) {
      auto sub = induced_subgraph(g, comp);
      auto e = find_induced(sub.graph, make_pattern("p3"));
      for (auto &v : e->map) v = sub.to_host[v];
      throw ClassMembershipError("cluster coloring needs a P3-free graph", "p3", *e);
    }
    int next = 0;
    comp.for_each([&](Vertex v) { c.colors[v] = next++; });
  }
  return c;
}

Coloring DominationStep::extend(const Coloring &reduced_coloring) const {
  if (reduced_coloring.colors.size() != kept.size())
    throw InvalidParameter("coloring does not match the reduced graph");
  Coloring c{std::vector<int>(kept.size() + 1, -1)};
  for (std::size_t i = 0; i < kept.size(); ++i)
    c.colors[kept[i]] = reduced_coloring.colors[i];
  c.colors[removed] = c.colors[dominator];
  return c;
}

std::optional<DominationStep> domination_reduce(const Graph &g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || g.has_edge(u, v)) continue;
      if (!g.neighbors(u).is_subset_of(g.neighbors(v))) continue;
      VertexSet rest = g.all();
      rest.erase(u);
      auto sub = induced_subgraph(g, rest);
      return DominationStep{std::move(sub.graph), std::move(sub.to_host), u, v};
    }
  }
  return std::nullopt;
}

bool soft_gap_allowed(std::string_view tag) {
  return tag == "kite.hammer.j2-bipartite" || tag == "kite.hammer.j3-bipartite" ||
         tag == "c5.b-cell-chi";
}

bool has_colorer(ClassId cls) { return cls != ClassId::p3p2; }

ColorerResult color_in_class(ClassId cls, const Graph &g, const ColorerOptions &opts) {
  switch (cls) {
  case ClassId::kite_free:
    return color_kite_free(g, opts);
  case ClassId::hammer_free:
    return color_hammer_free(g, opts);
  case ClassId::c5_free:
    return color_c5_free(g, opts);
  case ClassId::k4_free:
    return color_k4_free(g, opts);
  case ClassId::p2k3_free:
    return color_p2k3_free(g, opts);
  case ClassId::k1k3_free:
  case ClassId::triangle_free: {
    if (opts.check_membership) require_member(g, cls);
    auto r = color_kite_free(g, opts);
    if (g.order() > 0) r.bound = evaluate_bound(cls, r.omega);
    return r;
  }
  case ClassId::p3p2:
    break;
  }
  throw InvalidParameter("no constructive colorer for class " +
                         std::string(class_name(cls)));
}

} // namespace chib
