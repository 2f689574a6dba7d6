#include "chib/catalog.hpp"

#include <functional>
#include <map>

namespace chib {

namespace {

Graph grotzsch() { return mycielskian(make_basic(BasicKind::cycle, 5)); }

// Intersection graph of the 27 lines on a cubic surface.
Graph schlafli_complement() {
  auto a = [](int i) { return i; };
  auto b = [](int i) { return 6 + i; };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  auto c = [](int k) { return 12 + k; };

  Graph g(27);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) g.add_edge(a(i), b(j));
  for (int k = 0; k < 15; ++k) {
    auto [p, q] = pairs[k];
    for (int i : {p, q}) {
      g.add_edge(a(i), c(k));
      g.add_edge(b(i), c(k));
    }
    for (int l = k + 1; l < 15; ++l) {
      auto [r, s] = pairs[l];
      if (r != p && r != q && s != p && s != q) g.add_edge(c(k), c(l));
    }
  }
  return g;
}

using Builder = std::function<Graph()>;

const std::vector<std::pair<std::string, Builder>> &builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"grotzsch", grotzsch},
      {"schlafli_complement", schlafli_complement},
      {"p3_union_p2", [] { return Graph(5, {{0, 1}, {1, 2}, {3, 4}}); }},
      {"kite",
       [] { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }},
      {"hammer", [] { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }},
      {"diamond", [] { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }},
      {"2k3",
       [] { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}); }},
      {"p2_union_k3", [] { return Graph(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}}); }},
      {"k1_union_k3", [] { return Graph(4, {{1, 2}, {1, 3}, {2, 3}}); }},
      // P4 plus a dominating vertex.
      {"gem",
       [] {
         return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
       }},
      // C4 with a triangle roof on edge 0-1.
      {"house",
       [] { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}); }},
      {"w4",
       [] {
         return Graph(5,
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
       }},
      // Complement of P3 u P2: C4 plus a vertex adjacent to three of its vertices.
      {"paraglider",
       [] {
         return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
       }},
      // K4 plus a vertex adjacent to exactly two of its vertices.
      {"hvn",
       [] {
         return Graph(5,
                      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
       }},
      // K1 + K_{1,3}.
      {"crown",
       [] {
         return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
       }},
      {"p3", [] { return make_basic(BasicKind::path, 3); }},
      {"k3", [] { return make_basic(BasicKind::complete, 3); }},
      {"c5", [] { return make_basic(BasicKind::cycle, 5); }},
      {"k4", [] { return make_basic(BasicKind::complete, 4); }},
  };
  return table;
}

} // namespace

Graph named_graph(std::string_view name) {
  for (const auto &[key, build] : builders()) {
    if (key == name) {
      Graph g = build();
      g.set_name(key);
      return g;
    }
  }
  throw InvalidParameter("unknown catalog graph: " + std::string(name));
}

const std::vector<std::string> &catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &entry : builders()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

} // namespace chib
