#include <doctest.h>

#include "chib/catalog.hpp"
#include "chib/colorers.hpp"
#include "chib/proof_trace.hpp"

using namespace chib;

namespace {

TraceStep step(std::string tag, Check check, std::vector<NamedSet> sets) {
  TraceStep s;
  s.tag = std::move(tag);
  s.check = check;
  s.sets = std::move(sets);
  return s;
}

NamedSet scope_of(const Graph &g) { return {"scope", g.all().to_vector()}; }

} // namespace

TEST_CASE("judging measured values") {
  TraceStep s;
  s.tag = "t";
  s.claimed = 2;
  CHECK(judge(2, s) == Verdict::holds);
  CHECK(judge(3, s) == Verdict::soft_gap);
  s.bound = 3;
  CHECK(judge(3, s) == Verdict::soft_gap);
  CHECK(judge(4, s) == Verdict::violated);
  s.claimed.reset();
  CHECK(judge(3, s) == Verdict::holds);
  CHECK(judge(4, s) == Verdict::violated);
  s.bound.reset();
  CHECK_THROWS_AS(judge(1, s), InvalidParameter);
}

TEST_CASE("set checks re-evaluate against the graph") {
  const Graph c5 = make_basic(BasicKind::cycle, 5);
  const NamedSet scope = scope_of(c5);
  CHECK(evaluate_step(c5, step("a", Check::independent, {scope, {"X", {0, 2}}})) == Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::independent, {scope, {"X", {0, 1}}})) == Verdict::violated);
  CHECK(evaluate_step(c5, step("a", Check::clique, {scope, {"X", {0, 1}}})) == Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::complete_to, {scope, {"X", {0}}, {"Y", {1, 4}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::anticomplete, {scope, {"X", {0}}, {"Y", {2, 3}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::empty, {scope, {"X", {}}})) == Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::touches, {scope, {"X", {0, 2}}, {"Y", {1}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::p3_free, {scope, {"X", {0, 1, 2}}})) ==
        Verdict::violated);
  CHECK(evaluate_step(c5, step("a", Check::small_components, {scope, {"X", {0, 1, 3}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::partition,
                               {scope, {"V", {0, 1, 2, 3, 4}}, {"A", {0, 1}}, {"B", {2, 3, 4}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(c5, step("a", Check::partition,
                               {scope, {"V", {0, 1, 2, 3, 4}}, {"A", {0, 1}}, {"B", {1, 2, 3, 4}}})) ==
        Verdict::violated);

  auto pf = step("a", Check::pattern_free, {scope, {"X", {0, 1, 2, 3, 4}}});
  pf.pattern = "c5";
  CHECK(evaluate_step(c5, pf) == Verdict::violated);
  pf.pattern = "k3";
  CHECK(evaluate_step(c5, pf) == Verdict::holds);

  auto om = step("a", Check::omega_at_most, {scope, {"X", {0, 1, 2, 3, 4}}});
  om.value = 2;
  om.bound = 2;
  CHECK(evaluate_step(c5, om) == Verdict::holds);
  om.value = 1;
  om.bound = 1;
  CHECK(evaluate_step(c5, om) == Verdict::violated);

  auto chi = step("a", Check::chi_at_most, {scope, {"X", {0, 1, 2, 3, 4}}});
  chi.value = 3;
  chi.claimed = 2;
  CHECK(evaluate_step(c5, chi) == Verdict::soft_gap);
}

TEST_CASE("twin and domination checks") {
  const Graph g = named_graph("p2_union_k3");
  const NamedSet scope = scope_of(g);
  CHECK(evaluate_step(g, step("a", Check::same_neighbors, {scope, {"u1", {0}}, {"u2", {1}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(g, step("a", Check::same_neighbors, {scope, {"u1", {0}}, {"u2", {2}}})) ==
        Verdict::violated);
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(evaluate_step(star, step("a", Check::dominated, {scope_of(star), {"u", {1}}, {"v", {2}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(star, step("a", Check::dominated, {scope_of(star), {"u", {0}}, {"v", {1}}})) ==
        Verdict::violated);
}

TEST_CASE("checks are evaluated inside the step scope") {
  // Vertex 0 sees 2 only outside the scope {0, 1}.
  const Graph g(3, {{0, 2}});
  CHECK(evaluate_step(g, step("a", Check::dominated, {{"scope", {0, 1}}, {"u", {0}}, {"v", {1}}})) ==
        Verdict::holds);
  CHECK(evaluate_step(g, step("a", Check::dominated, {{"scope", {0, 1, 2}}, {"u", {0}}, {"v", {1}}})) ==
        Verdict::violated);
}

TEST_CASE("trace text round trip") {
  const auto r = color_kite_free(named_graph("grotzsch"));
  const std::string text = r.trace.serialize();
  CHECK(text.find("tag=") == 0);
  const auto parsed = ProofTrace::parse(text);
  REQUIRE(parsed.steps.size() == r.trace.steps.size());
  for (std::size_t i = 0; i < parsed.steps.size(); ++i) {
    CHECK(parsed.steps[i].tag == r.trace.steps[i].tag);
    CHECK(parsed.steps[i].verdict == r.trace.steps[i].verdict);
    CHECK(parsed.steps[i].sets.size() == r.trace.steps[i].sets.size());
  }
  CHECK(parsed.serialize() == text);
  CHECK_THROWS_AS(ProofTrace::parse("tag=x check=nonsense verdict=holds\n"), ParseError);
  CHECK_THROWS_AS(ProofTrace::parse("tag=x check=clique scope={1,2\n"), ParseError);
}

TEST_CASE("replay flags tampered traces") {
  const Graph gr = named_graph("grotzsch");
  auto r = color_hammer_free(gr);
  CHECK(replay(gr, r.trace).mismatches.empty());
  for (auto &s : r.trace.steps)
    if (s.check == Check::independent || s.check == Check::small_components) {
      s.sets[1].members = gr.all().to_vector();
      break;
    }
  CHECK(replay(gr, r.trace).mismatches.size() == 1);
}
