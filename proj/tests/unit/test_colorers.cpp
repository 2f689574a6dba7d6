#include <doctest.h>

#include <functional>

#include "chib/bounds.hpp"
#include "chib/catalog.hpp"
#include "chib/colorers.hpp"
#include "chib/generators.hpp"
#include "oracles.hpp"

using namespace chib;

namespace {

Graph complete(int k) { return make_basic(BasicKind::complete, k); }

using ColorerFn = std::function<ColorerResult(const Graph &)>;

struct Subject {
  ClassId cls;
  ColorerFn run;
};

const std::vector<Subject> &subjects() {
  static const std::vector<Subject> s = {
      {ClassId::kite_free, [](const Graph &g) { return color_kite_free(g); }},
      {ClassId::hammer_free, [](const Graph &g) { return color_hammer_free(g); }},
      {ClassId::c5_free, [](const Graph &g) { return color_c5_free(g); }},
      {ClassId::k4_free, [](const Graph &g) { return color_k4_free(g); }},
      {ClassId::p2k3_free, [](const Graph &g) { return color_p2k3_free(g); }},
  };
  return s;
}

bool has_tag_prefix(const ProofTrace &t, std::string_view prefix) {
  for (const auto &s : t.steps)
    if (s.tag.rfind(prefix, 0) == 0) return true;
  return false;
}

void check_result(const Graph &g, ClassId cls, const ColorerResult &r) {
  CHECK(verify_coloring(g, r.coloring).proper);
  CHECK(r.omega == clique_number(g).size());
  CHECK(r.bound == evaluate_bound(cls, r.omega));
  CHECK(r.coloring.palette() <= r.bound);
  CHECK(r.trace.count(Verdict::violated) == 0);
  for (const auto &s : r.trace.steps)
    if (s.verdict == Verdict::soft_gap) CHECK(soft_gap_allowed(s.tag));
  const auto chi = chromatic_number(g);
  CHECK(r.omega <= chi.value());
  CHECK(chi.value() <= r.coloring.palette());
}

} // namespace

TEST_CASE("binding functions") {
  CHECK(evaluate_bound(ClassId::kite_free, 2) == 4);
  CHECK(evaluate_bound(ClassId::c5_free, 3) == 15);
  CHECK(evaluate_bound(ClassId::k4_free, 3) == 9);
  CHECK(evaluate_bound(ClassId::hammer_free, 3) == 9);
  CHECK(evaluate_bound(ClassId::p3p2, 3) == 10);
  CHECK(evaluate_bound(ClassId::p2k3_free, 4) == 16);
  CHECK(evaluate_bound(ClassId::k1k3_free, 5) == 10);
  CHECK(evaluate_bound(ClassId::triangle_free, 2) == 4);
  CHECK_THROWS_AS(evaluate_bound(ClassId::kite_free, 0), InvalidParameter);

  for (const auto &f : binding_registry()) {
    CHECK_FALSE(f.formula.empty());
    for (std::uint64_t w = 1; w < 40; ++w) CHECK(f.evaluate(w) <= f.evaluate(w + 1));
  }
  for (std::uint64_t w = 1; w < 40; ++w)
    CHECK(2 * evaluate_bound(ClassId::c5_free, w) == 3 * w * w + w);
}

TEST_CASE("cluster coloring") {
  CHECK(cluster_color(named_graph("2k3")).palette() == 3);
  CHECK(cluster_color(make_basic(BasicKind::empty, 4)).palette() == 1);
  const Graph k2k4 = disjoint_union(complete(2), complete(4));
  const auto c = cluster_color(k2k4);
  CHECK(c.palette() == 4);
  CHECK(verify_coloring(k2k4, c).proper);
  try {
    cluster_color(make_basic(BasicKind::path, 3));
    FAIL("expected a membership error");
  } catch (const ClassMembershipError &e) {
    CHECK(e.pattern() == "p3");
    CHECK(is_induced_embedding(make_basic(BasicKind::path, 3), make_basic(BasicKind::path, 3),
                               e.witness().map));
  }
}

TEST_CASE("domination reduction") {
  const auto e2 = domination_reduce(make_basic(BasicKind::empty, 2));
  REQUIRE(e2);
  CHECK(e2->reduced.order() == 1);
  CHECK(domination_reduce(make_basic(BasicKind::cycle, 5)) == std::nullopt);

  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = domination_reduce(star);
  REQUIRE(s);
  CHECK(s->removed == 1);
  CHECK(s->dominator == 2);
  CHECK(s->kept == std::vector<Vertex>{0, 2, 3});
  const auto lifted = s->extend(Coloring{{0, 1, 1}});
  CHECK(lifted.colors == std::vector<int>{0, 1, 1, 1});
  CHECK(verify_coloring(star, lifted).proper);
}

TEST_CASE("domination steps are sound on random graphs") {
  SplitMix64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(2 + rng.below(8), rng.uniform(), rng);
    const auto step = domination_reduce(g);
    if (!step) continue;
    CHECK_FALSE(g.has_edge(step->removed, step->dominator));
    VertexSet nv = g.neighbors(step->dominator);
    CHECK(g.neighbors(step->removed).is_subset_of(nv));
    const auto c = chromatic_number(step->reduced);
    CHECK(verify_coloring(g, step->extend(c.coloring)).proper);
    CHECK(c.value() == chromatic_number(g).value());
  }
}

TEST_CASE("kite colorer") {
  const Graph gr = named_graph("grotzsch");
  const auto r = color_kite_free(gr);
  CHECK(r.coloring.palette() == 4);
  CHECK(r.bound == 4);
  check_result(gr, ClassId::kite_free, r);

  for (int n = 1; n <= 7; ++n) {
    const auto k = color_kite_free(complete(n));
    CHECK(k.coloring.palette() == static_cast<std::size_t>(n));
  }
  for (int k = 1; k <= 3; ++k) {
    const Graph even = extremal_family(Family::kite_even, k);
    CHECK(color_kite_free(even).coloring.palette() == static_cast<std::size_t>(4 * k));
  }
  const Graph odd = extremal_family(Family::kite_odd, 2);
  const auto ro = color_kite_free(odd);
  CHECK(ro.omega == 5);
  CHECK(ro.coloring.palette() == 10);
}

TEST_CASE("P2 u K3 free colorer") {
  CHECK(color_p2k3_free(make_basic(BasicKind::empty, 5)).coloring.palette() == 1);
  const Graph c5 = make_basic(BasicKind::cycle, 5);
  const auto r = color_p2k3_free(c5);
  CHECK(r.coloring.palette() <= 4);
  check_result(c5, ClassId::p2k3_free, r);
  const auto gr = color_p2k3_free(named_graph("grotzsch"));
  CHECK(gr.coloring.palette() == 4);
}

TEST_CASE("hammer colorer") {
  const Graph bare = named_graph("p2_union_k3");
  const auto r = color_hammer_free(bare);
  CHECK(r.coloring.palette() == 3);
  CHECK(has_tag_prefix(r.trace, "hammer.twin-edge"));
  check_result(bare, ClassId::hammer_free, r);

  const auto gr = color_hammer_free(named_graph("grotzsch"));
  CHECK(gr.coloring.palette() == 4);
}

TEST_CASE("C5 colorer") {
  for (int n = 1; n <= 7; ++n) {
    const auto r = color_c5_free(complete(n));
    CHECK(r.coloring.palette() == static_cast<std::size_t>(n));
  }
  try {
    color_c5_free(named_graph("grotzsch"));
    FAIL("expected a membership error");
  } catch (const ClassMembershipError &e) {
    CHECK(e.pattern() == "c5");
    CHECK(is_induced_embedding(make_basic(BasicKind::cycle, 5), named_graph("grotzsch"),
                               e.witness().map));
  }
}

TEST_CASE("K4 colorer") {
  const Graph s = named_graph("schlafli_complement");
  const auto r = color_k4_free(s);
  CHECK(r.coloring.palette() <= 9);
  CHECK(verify_coloring(s, r.coloring).proper);
  CHECK(r.trace.count(Verdict::violated) == 0);

  // Disjoint palettes per cell: three for the triangle's classes, three for
  // the cluster outside it.
  const auto two = color_k4_free(named_graph("2k3"));
  CHECK(two.coloring.palette() == 6);
  CHECK(has_tag_prefix(two.trace, "k4.2k3."));

  const auto p2k3 = color_k4_free(named_graph("p2_union_k3"));
  CHECK(p2k3.coloring.palette() <= 6);
  CHECK(has_tag_prefix(p2k3.trace, "k4.p2k3."));
}

TEST_CASE("colorers refuse non-members") {
  CHECK_THROWS_AS(color_kite_free(named_graph("kite")), ClassMembershipError);
  CHECK_THROWS_AS(color_hammer_free(named_graph("hammer")), ClassMembershipError);
  CHECK_THROWS_AS(color_k4_free(complete(4)), ClassMembershipError);
  CHECK_THROWS_AS(color_p2k3_free(named_graph("p2_union_k3")), ClassMembershipError);
  CHECK_THROWS_AS(color_kite_free(named_graph("p3_union_p2")), ClassMembershipError);
  CHECK_THROWS_AS(color_in_class(ClassId::p3p2, complete(3)), InvalidParameter);
}

TEST_CASE("empty and tiny inputs") {
  for (const auto &s : subjects()) {
    const auto r0 = s.run(Graph(0));
    CHECK(r0.coloring.colors.empty());
    CHECK(s.run(Graph(1)).coloring.palette() == 1);
    CHECK(s.run(complete(2)).coloring.palette() == 2);
  }
}

TEST_CASE("colorers on sampled members") {
  std::uint64_t seed = 100;
  for (const auto &s : subjects()) {
    for (std::size_t n : {4, 7, 9, 11}) {
      for (int i = 0; i < 12; ++i) {
        const Graph g = sample_class({n, std::nullopt, ++seed, s.cls}).graph;
        const auto r = s.run(g);
        check_result(g, s.cls, r);

        const auto replayed = replay(g, r.trace);
        CHECK(replayed.checked == r.trace.steps.size());
        CHECK(replayed.mismatches.empty());

        const auto parsed = ProofTrace::parse(r.trace.serialize());
        CHECK(parsed.serialize() == r.trace.serialize());
      }
    }
  }
}

TEST_CASE("colorers are deterministic") {
  for (const auto &s : subjects()) {
    const Graph g = sample_class({10, std::nullopt, 77, s.cls}).graph;
    const auto a = s.run(g);
    const auto b = s.run(g);
    CHECK(a.coloring.colors == b.coloring.colors);
    CHECK(a.trace.serialize() == b.trace.serialize());
  }
}

TEST_CASE("subclass dispatch") {
  const Graph gr = named_graph("grotzsch");
  const auto tf = color_in_class(ClassId::triangle_free, gr);
  CHECK(tf.bound == 4);
  CHECK(tf.coloring.palette() == 4);
  const Graph s = named_graph("schlafli_complement");
  const auto k1k3 = color_in_class(ClassId::k1k3_free, s);
  CHECK(k1k3.bound == 6);
  CHECK(k1k3.coloring.palette() == 6);
  CHECK_THROWS_AS(color_in_class(ClassId::triangle_free, complete(3)), ClassMembershipError);
}
