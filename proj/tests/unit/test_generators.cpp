#include <doctest.h>

#include "chib/catalog.hpp"
#include "chib/generators.hpp"
#include "chib/rng.hpp"
#include "oracles.hpp"

using namespace chib;

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);

  SplitMix64 u(99);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(u.below(7) < 7);
  }
  CHECK(SplitMix64::derive(5, 0) == SplitMix64(5).next());
  CHECK(SplitMix64::derive(5, 1) != SplitMix64::derive(5, 2));
}

TEST_CASE("gnp") {
  CHECK(gnp(4, 0.0, 1) == make_basic(BasicKind::empty, 4));
  CHECK(gnp(4, 1.0, 1) == make_basic(BasicKind::complete, 4));
  CHECK(gnp(10, 0.3, 42) == gnp(10, 0.3, 42));
  CHECK(gnp(10, 0.3, 42) != gnp(10, 0.3, 43));
  CHECK_THROWS_AS(gnp(4, 1.5, 1), InvalidParameter);
  CHECK_THROWS_AS(gnp(4, -0.1, 1), InvalidParameter);

  // Pairs in lexicographic order, one uniform draw each.
  SplitMix64 rng(42);
  Graph expect(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (rng.uniform() < 0.3) expect.add_edge(i, j);
  CHECK(gnp(10, 0.3, 42) == expect);
}

TEST_CASE("class sampling") {
  const auto k5 = sample_class({5, 1.0, 3, ClassId::c5_free});
  CHECK(k5.graph == make_basic(BasicKind::complete, 5));
  CHECK(k5.tries == 1);
  CHECK_FALSE(is_member(make_basic(BasicKind::cycle, 5), ClassId::c5_free).member);

  const auto kite = sample_class({12, 0.25, 2024, ClassId::kite_free});
  CHECK(is_member(kite.graph, ClassId::kite_free).member);
  CHECK_FALSE(oracle::has_induced(kite.graph, named_graph("kite")));
  CHECK_FALSE(oracle::has_induced(kite.graph, named_graph("p3_union_p2")));

  for (ClassId id : all_classes()) {
    const auto one = sample_class({1, std::nullopt, 9, id});
    CHECK(one.graph.order() == 1);
    CHECK(one.tries == 1);
  }

  CHECK(sample_class({9, std::nullopt, 8, ClassId::hammer_free}).graph ==
        sample_class({9, std::nullopt, 8, ClassId::hammer_free}).graph);
}

TEST_CASE("sampler exhaustion reports an acceptance estimate") {
  try {
    sample_class({8, 1.0, 1, ClassId::k4_free, 50});
    FAIL("expected exhaustion");
  } catch (const SamplingError &e) {
    CHECK(e.tries() == 50);
    CHECK(e.acceptance_upper() == doctest::Approx(0.06));
  }
  CHECK_THROWS_AS(sample_class({8, 0.5, 1, ClassId::k4_free, 0}), InvalidParameter);
  CHECK_THROWS_AS(sample_class({8, 2.0, 1, ClassId::k4_free}), InvalidParameter);
}

TEST_CASE("default densities are probabilities") {
  for (ClassId id : all_classes())
    for (std::size_t n = 1; n <= 20; ++n) {
      const double p = default_edge_probability(id, n);
      CHECK(p > 0.0);
      CHECK(p < 1.0);
    }
}

TEST_CASE("mutation stays inside the class") {
  const Graph s = named_graph("schlafli_complement");
  CHECK(mutate_within_class(s, ClassId::k4_free, 0, 1) == s);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph m = mutate_within_class(s, ClassId::k4_free, 30, seed);
    CHECK(is_member(m, ClassId::k4_free).member);
  }
  for (ClassId id : all_classes()) {
    const Graph g = sample_class({9, std::nullopt, 4, id}).graph;
    const Graph m = mutate_within_class(g, id, 40, 5);
    CHECK(is_member(m, id).member);
    CHECK(m == mutate_within_class(g, id, 40, 5));
  }
}

TEST_CASE("extremal families") {
  const Graph even1 = extremal_family(Family::kite_even, 1);
  CHECK(even1 == named_graph("grotzsch"));
  CHECK(chromatic_number(even1).value() == 4);

  const Graph even2 = extremal_family(Family::kite_even, 2);
  CHECK(clique_number(even2).size() == 4);
  CHECK(chromatic_number(even2).value() == 8);
  CHECK(is_member(even2, ClassId::kite_free).member);

  const Graph odd1 = extremal_family(Family::kite_odd, 1);
  CHECK(clique_number(odd1).size() == 3);
  CHECK(chromatic_number(odd1).value() == 6);

  const Graph odd2 = extremal_family(Family::kite_odd, 2);
  CHECK(odd2 == join(named_graph("grotzsch"), named_graph("schlafli_complement")));
  CHECK(clique_number(odd2).size() == 5);
  CHECK(chromatic_number(odd2).value() == 10);
  CHECK(is_member(odd2, ClassId::kite_free).member);

  CHECK(extremal_family(Family::hammer) == named_graph("grotzsch"));
  CHECK(is_member(extremal_family(Family::hammer), ClassId::hammer_free).member);
  CHECK(extremal_family(Family::k4) == named_graph("schlafli_complement"));
  CHECK(chromatic_number(extremal_family(Family::k4)).value() == 6);

  CHECK_THROWS_AS(extremal_family(Family::kite_even, 0), InvalidParameter);
  CHECK_THROWS_AS(extremal_family(Family::k4, 2), InvalidParameter);
  CHECK(parse_family("kite_odd") == Family::kite_odd);
  CHECK(family_name(Family::kite_even) == "kite-even");
  CHECK(family_class(Family::hammer) == ClassId::hammer_free);
  CHECK_THROWS_AS(parse_family("petersen"), InvalidParameter);
}

TEST_CASE("hunt from the K4-free witness") {
  HuntConfig cfg;
  cfg.evaluations = 25;
  cfg.seed = 7;
  const auto r = hunt(cfg);
  CHECK(r.best.order() == 27);
  CHECK(r.chi >= 6);
  CHECK(r.chi <= 9);
  CHECK(r.omega == clique_number(r.best).size());
  CHECK(r.chi == chromatic_number(r.best).value());
  CHECK(is_member(r.best, ClassId::k4_free).member);
  CHECK(r.evaluations == 25);
  CHECK(r.noteworthy == (r.chi > 6));
}

TEST_CASE("hunt on small orders") {
  HuntConfig cfg;
  cfg.order = 10;
  cfg.evaluations = 60;
  cfg.seed = 3;
  const auto r = hunt(cfg);
  CHECK(r.chi >= 1);
  CHECK(r.chi <= 6);
  CHECK(r.chi == chromatic_number(r.best).value());
  CHECK(r.omega == clique_number(r.best).size());
  CHECK(is_member(r.best, ClassId::k4_free).member);

  const auto again = hunt(cfg);
  CHECK(again.best == r.best);

  HuntConfig tf;
  tf.cls = ClassId::triangle_free;
  tf.order = 9;
  tf.evaluations = 80;
  const auto t = hunt(tf);
  CHECK(t.chi <= 4);
  CHECK(t.omega <= 2);
}
