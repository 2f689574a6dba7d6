#include "chib/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "chib/catalog.hpp"

namespace chib {

Pattern make_pattern(Graph graph, std::string name) {
  if (graph.order() > kMaxPatternOrder)
    throw InvalidParameter("pattern '" + name + "' has " +
                           std::to_string(graph.order()) + " vertices; limit is " +
                           std::to_string(kMaxPatternOrder));
  graph.set_name(name);
  return Pattern{std::move(graph), std::move(name)};
}

Pattern make_pattern(std::string_view catalog_name) {
  return make_pattern(named_graph(catalog_name), std::string(catalog_name));
}

namespace {

ClassSpec build_spec(ClassId id, std::string name,
                     std::initializer_list<const char *> patterns) {
  ClassSpec spec{id, std::move(name), {}};
  for (const char *p : patterns) spec.forbidden.push_back(make_pattern(p));
  std::stable_sort(spec.forbidden.begin(), spec.forbidden.end(),
                   [](const Pattern &a, const Pattern &b) {
                     return std::pair(a.graph.order(), a.graph.edge_count()) <
                            std::pair(b.graph.order(), b.graph.edge_count());
                   });
  return spec;
}

const std::vector<ClassSpec> &registry() {
  static const std::vector<ClassSpec> specs = {
      build_spec(ClassId::p3p2, "P3P2", {"p3_union_p2"}),
      build_spec(ClassId::kite_free, "KiteFree", {"p3_union_p2", "kite"}),
      build_spec(ClassId::hammer_free, "HammerFree", {"p3_union_p2", "hammer"}),
      build_spec(ClassId::c5_free, "C5Free", {"p3_union_p2", "c5"}),
      build_spec(ClassId::k4_free, "K4Free", {"p3_union_p2", "k4"}),
      build_spec(ClassId::p2k3_free, "P2K3Free", {"p3_union_p2", "p2_union_k3"}),
      build_spec(ClassId::k1k3_free, "K1K3Free", {"p3_union_p2", "k1_union_k3"}),
      build_spec(ClassId::triangle_free, "TriangleFree", {"p3_union_p2", "k3"}),
  };
  return specs;
}

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// Backtracking over pattern vertices in a fixed order: descending pattern
// degree, ties by lowest id. Candidates for the next pattern vertex are the
// host vertices of sufficient degree that agree on adjacency with every
// already-mapped vertex.
class InducedSearch {
public:
  InducedSearch(const Graph &host, const Graph &pattern)
      : host_(host), pattern_(pattern), order_(pattern.order()),
        map_(pattern.order(), -1) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    const std::size_t max_deg = pattern.order() ? pattern.degree(order_.front()) : 0;
    by_degree_.assign(max_deg + 1, host.empty_set());
    for (std::size_t d = 0; d <= max_deg; ++d)
      for (Vertex v = 0; v < static_cast<Vertex>(host.order()); ++v)
        if (host.degree(v) >= d) by_degree_[d].insert(v);
  }

  void run(const std::function<bool(const Embedding &)> &visit) {
    if (pattern_.order() > host_.order()) return;
    VertexSet used = host_.empty_set();
    extend(0, used, visit);
  }

private:
  bool extend(std::size_t depth, VertexSet &used,
              const std::function<bool(const Embedding &)> &visit) {
    if (depth == order_.size()) return visit(Embedding{map_});
    const Vertex a = order_[depth];
    VertexSet cand = by_degree_[pattern_.degree(a)] - used;
    for (std::size_t k = 0; k < depth && !cand.empty(); ++k) {
      const Vertex b = order_[k];
      if (pattern_.has_edge(a, b))
        cand &= host_.neighbors(map_[b]);
      else
        cand -= host_.neighbors(map_[b]);
    }
    for (Vertex h = cand.first(); h >= 0; h = cand.next(h + 1)) {
      map_[a] = h;
      used.insert(h);
      const bool go_on = extend(depth + 1, used, visit);
      used.erase(h);
      map_[a] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const Graph &host_;
  const Graph &pattern_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<VertexSet> by_degree_;
};

} // namespace

const ClassSpec &class_spec(ClassId id) {
  for (const auto &spec : registry())
    if (spec.id == id) return spec;
  throw InvalidParameter("unknown class id");
}

const std::vector<ClassId> &all_classes() {
  static const std::vector<ClassId> ids = [] {
    std::vector<ClassId> out;
    for (const auto &spec : registry()) out.push_back(spec.id);
    return out;
  }();
  return ids;
}

ClassId parse_class(std::string_view name) {
  const auto key = normalize(name);
  for (const auto &spec : registry())
    if (normalize(spec.name) == key) return spec.id;
  throw InvalidParameter("unknown class: " + std::string(name));
}

std::string_view class_name(ClassId id) { return class_spec(id).name; }

void for_each_induced(const Graph &host, const Pattern &pattern,
                      const std::function<bool(const Embedding &)> &visit) {
  if (pattern.graph.order() > kMaxPatternOrder)
    throw InvalidParameter("pattern too large for the detector");
  InducedSearch(host, pattern.graph).run(visit);
}

std::optional<Embedding> find_induced(const Graph &host, const Pattern &pattern) {
  std::optional<Embedding> found;
  for_each_induced(host, pattern, [&](const Embedding &e) {
    found = e;
    return false;
  });
  return found;
}

std::size_t count_induced(const Graph &host, const Pattern &pattern,
                          std::size_t cap) {
  if (cap < 1) throw InvalidParameter("count cap must be at least 1");
  std::set<std::vector<Vertex>> images;
  for_each_induced(host, pattern, [&](const Embedding &e) {
    auto image = e.map;
    std::sort(image.begin(), image.end());
    images.insert(std::move(image));
    return images.size() < cap;
  });
  return images.size();
}

MembershipVerdict is_member(const Graph &g, const ClassSpec &cls) {
  for (const auto &p : cls.forbidden) {
    if (auto e = find_induced(g, p)) return MembershipVerdict{false, p.name, e};
  }
  return {};
}

void require_member(const Graph &g, ClassId id) {
  auto verdict = is_member(g, id);
  if (verdict.member) return;
  std::string what = "graph is not " + std::string(class_name(id)) +
                     ": induced " + verdict.pattern + " at {";
  for (std::size_t i = 0; i < verdict.witness->map.size(); ++i)
    what += (i ? "," : "") + std::to_string(verdict.witness->map[i]);
  throw ClassMembershipError(what + "}", verdict.pattern, *verdict.witness);
}

} // namespace chib
