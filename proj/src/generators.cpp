#include "chib/generators.hpp"

#include <algorithm>
#include <cctype>

#include "chib/catalog.hpp"
#include "chib/rng.hpp"

namespace chib {

namespace {

Graph draw_gnp(std::size_t n, double p, SplitMix64 &rng) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

std::pair<Vertex, Vertex> random_pair(std::size_t n, SplitMix64 &rng) {
  const auto u = static_cast<Vertex>(rng.below(n));
  auto v = static_cast<Vertex>(rng.below(n - 1));
  if (v >= u) ++v;
  return {std::min(u, v), std::max(u, v)};
}

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::kite_even, "kite-even"},
    {Family::kite_odd, "kite-odd"},
    {Family::hammer, "hammer"},
    {Family::k4, "k4"},
};

} // namespace

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  return draw_gnp(n, p, rng);
}

double default_edge_probability(ClassId cls, std::size_t n) {
  // Columns: n <= 6, n <= 8, n <= 10, larger.
  struct Row {
    ClassId cls;
    double p[4];
  };
  static constexpr Row kTable[] = {
      {ClassId::p3p2, {0.6, 0.7, 0.75, 0.8}},
      {ClassId::kite_free, {0.5, 0.3, 0.7, 0.8}},
      {ClassId::hammer_free, {0.5, 0.4, 0.7, 0.75}},
      {ClassId::c5_free, {0.5, 0.5, 0.7, 0.75}},
      {ClassId::k4_free, {0.4, 0.3, 0.25, 0.2}},
      {ClassId::p2k3_free, {0.5, 0.4, 0.6, 0.7}},
      {ClassId::k1k3_free, {0.5, 0.3, 0.7, 0.8}},
      {ClassId::triangle_free, {0.3, 0.25, 0.2, 0.15}},
  };
  const std::size_t col = n <= 6 ? 0 : n <= 8 ? 1 : n <= 10 ? 2 : 3;
  for (const auto &row : kTable)
    if (row.cls == cls) return row.p[col];
  return 0.5;
}

Sample sample_class(const SampleConfig &cfg) {
  if (cfg.max_tries < 1) throw InvalidParameter("max_tries must be at least 1");
  const double p = cfg.p.value_or(default_edge_probability(cfg.cls, cfg.order));
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  const auto &spec = class_spec(cfg.cls);
  SplitMix64 rng(cfg.seed);
  for (std::uint64_t t = 1; t <= cfg.max_tries; ++t) {
    Graph g = draw_gnp(cfg.order, p, rng);
    if (is_member(g, spec).member) return {std::move(g), t};
  }
  throw SamplingError("no " + spec.name + " member of order " +
                          std::to_string(cfg.order) + " after " +
                          std::to_string(cfg.max_tries) + " draws (acceptance rate below " +
                          std::to_string(3.0 / static_cast<double>(cfg.max_tries)) + ")",
                      cfg.max_tries);
}

Graph mutate_within_class(const Graph &g, ClassId cls, std::size_t steps,
                          std::uint64_t seed) {
  Graph out = g;
  if (g.order() < 2) return out;
  const auto &spec = class_spec(cls);
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < steps; ++s) {
    auto [u, v] = random_pair(g.order(), rng);
    out.toggle_edge(u, v);
    if (!is_member(out, spec).member) out.toggle_edge(u, v);
  }
  return out;
}

Family parse_family(std::string_view name) {
  std::string key;
  for (char ch : name)
    key += ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (auto [f, n] : kFamilies)
    if (n == key) return f;
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  for (auto [k, n] : kFamilies)
    if (k == f) return n;
  return "?";
}

ClassId family_class(Family f) {
  switch (f) {
  case Family::kite_even:
  case Family::kite_odd:
    return ClassId::kite_free;
  case Family::hammer:
    return ClassId::hammer_free;
  case Family::k4:
    return ClassId::k4_free;
  }
  return ClassId::p3p2;
}

Graph extremal_family(Family family, int k) {
  if (k < 1) throw InvalidParameter("family index k must be at least 1");
  const Graph grotzsch = named_graph("grotzsch");
  Graph out;
  switch (family) {
  case Family::kite_even:
    out = complete_expansion(k, grotzsch);
    break;
  case Family::kite_odd:
    out = k == 1 ? named_graph("schlafli_complement")
                 : join(complete_expansion(k - 1, grotzsch),
                        named_graph("schlafli_complement"));
    break;
  case Family::hammer:
  case Family::k4:
    if (k != 1)
      throw InvalidParameter(std::string(family_name(family)) +
                             " witness is a single graph; k must be 1");
    out = family == Family::hammer ? grotzsch : named_graph("schlafli_complement");
    break;
  }
  out.set_name(std::string(family_name(family)) + "-" + std::to_string(k));
  return out;
}

namespace {

struct Score {
  std::size_t chi = 0;
  std::size_t edges = 0;
  bool better_than(const Score &o) const {
    return chi != o.chi ? chi > o.chi : edges < o.edges;
  }
};

} // namespace

HuntResult hunt(const HuntConfig &cfg) {
  const auto &spec = class_spec(cfg.cls);
  SplitMix64 rng(cfg.seed);
  HuntResult result;
  result.seed = cfg.seed;

  Graph current;
  if (cfg.start) {
    current = *cfg.start;
  } else if (cfg.cls == ClassId::k4_free && cfg.order == 27) {
    current = named_graph("schlafli_complement");
  } else {
    try {
      current = sample_class({cfg.order, std::nullopt, rng.next(), cfg.cls, 10'000}).graph;
    } catch (const SamplingError &) {
      current = Graph(cfg.order);
    }
  }
  require_member(current, cfg.cls);

  auto exact_chi = [&](const Graph &g) -> std::optional<std::size_t> {
    if (g.order() == 0) return 0;
    ++result.exact_solves;
    auto r = chromatic_number(g, cfg.solve);
    if (!r.exact()) return std::nullopt;
    return r.value();
  };

  const auto start_chi = exact_chi(current);
  if (!start_chi) throw BudgetExhausted("hunt start graph exceeds the solve budget");
  Score cur{*start_chi, current.edge_count()};
  Score best_score = cur;
  Graph best = current;

  for (std::uint64_t e = 0; e < cfg.evaluations && current.order() >= 2; ++e) {
    ++result.evaluations;
    auto [u, v] = random_pair(current.order(), rng);
    Graph cand = current;
    cand.toggle_edge(u, v);
    if (!is_member(cand, spec).member) continue;
    // DSATUR gives an upper bound; a candidate that cannot reach the current
    // chi is rejected without an exact solve.
    if (dsatur_coloring(cand).palette() < cur.chi) continue;
    const auto chi = exact_chi(cand);
    if (!chi || *chi < cur.chi) continue;
    current = std::move(cand);
    cur = {*chi, current.edge_count()};
    if (cur.better_than(best_score)) {
      best_score = cur;
      best = current;
    }
  }

  require_member(best, cfg.cls);
  if (best.order() > 0) {
    const auto chi = chromatic_number(best, cfg.solve);
    const auto omega = clique_number(best, cfg.solve);
    if (!chi.exact() || !omega.exact())
      throw BudgetExhausted("hunt result could not be re-verified within the solve budget");
    result.chi = chi.value();
    result.omega = omega.size();
  }
  result.best = std::move(best);
  result.noteworthy = cfg.cls == ClassId::k4_free && result.chi > 6;
  return result;
}

} // namespace chib
