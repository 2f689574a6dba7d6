#include "chib/suite.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "chib/bounds.hpp"
#include "chib/colorers.hpp"
#include "chib/generators.hpp"
#include "chib/rng.hpp"

namespace chib {

namespace {

void tally_trace(SuiteRecord &r, const ProofTrace &trace) {
  r.holds = trace.count(Verdict::holds);
  r.soft_gaps = trace.count(Verdict::soft_gap);
  r.violated = trace.count(Verdict::violated);
}

std::string sanitize(std::string s) {
  for (auto &ch : s)
    if (ch == ' ' || ch == '=' || ch == '\t' || ch == '\n') ch = '_';
  return s;
}

SuiteRecord run_instance(const SuiteConfig &cfg, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRecord r;
  r.index = index;
  r.seed = SplitMix64::derive(cfg.seed, index);
  r.n = cfg.orders[index % cfg.orders.size()];

  auto finish = [&]() {
    r.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  };

  Graph g;
  try {
    g = sample_class({r.n, cfg.p, r.seed, cfg.cls, cfg.max_tries}).graph;
  } catch (const SamplingError &) {
    r.detail = "sampler-exhausted";
    return finish();
  }
  r.m = g.edge_count();
  if (g.order() == 0) {
    r.proper = true;
    r.chi_exact = true;
    r.verdict = RecordVerdict::pass;
    return finish();
  }

  ColorerOptions opts;
  opts.budget = cfg.budget;
  opts.check_membership = false;
  try {
    auto result = color_in_class(cfg.cls, g, opts);
    tally_trace(r, result.trace);
    r.omega = result.omega;
    r.bound = result.bound;
    r.palette = result.coloring.palette();
    r.proper = verify_coloring(g, result.coloring).proper;
    for (const auto &step : result.trace.steps)
      if (step.verdict == Verdict::soft_gap && !soft_gap_allowed(step.tag))
        r.detail = "unexpected-soft-gap:" + sanitize(step.tag);
  } catch (const AuditViolation &e) {
    tally_trace(r, e.trace());
    r.detail = "violated:" + sanitize(e.trace().steps.back().tag);
  } catch (const BudgetExhausted &) {
    r.detail = "colorer-budget";
  }

  const auto clique = clique_number(g, cfg.budget);
  const auto chi = chromatic_number(g, cfg.budget);
  if (r.omega == 0) {
    r.omega = clique.size();
    r.bound = evaluate_bound(cfg.cls, r.omega);
  }
  r.chi_lower = chi.lower;
  r.chi_upper = chi.upper;
  r.chi_exact = chi.exact();

  if (r.detail.rfind("violated", 0) == 0 || r.detail.rfind("unexpected", 0) == 0) {
    r.verdict = RecordVerdict::fail;
  } else if (!r.detail.empty() || !clique.exact()) {
    r.verdict = RecordVerdict::unknown;
    if (r.detail.empty()) r.detail = "clique-budget";
  } else if (!r.proper || r.palette > r.bound || r.chi_lower > r.bound) {
    r.verdict = RecordVerdict::fail;
    r.detail = !r.proper ? "improper" : r.palette > r.bound ? "palette-over-bound"
                                                            : "chi-over-bound";
  } else if (!r.chi_exact) {
    r.verdict = RecordVerdict::unknown;
    r.detail = "chi-budget";
  } else {
    r.verdict = RecordVerdict::pass;
  }
  return finish();
}

} // namespace

std::string_view to_string(RecordVerdict v) {
  switch (v) {
  case RecordVerdict::pass:
    return "pass";
  case RecordVerdict::fail:
    return "fail";
  case RecordVerdict::unknown:
    return "unknown";
  }
  return "?";
}

SuiteReport run_suite(const SuiteConfig &cfg) {
  if (cfg.count < 1) throw InvalidParameter("suite count must be at least 1");
  if (cfg.orders.empty()) throw InvalidParameter("suite needs at least one order");
  if (!has_colorer(cfg.cls))
    throw InvalidParameter("class " + std::string(class_name(cfg.cls)) +
                           " has no constructive colorer");

  SuiteReport report;
  report.cls = cfg.cls;
  report.config = cfg;
  report.records.resize(cfg.count);

  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, cfg.count));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.count;)
      report.records[i] = run_instance(cfg, i);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  for (const auto &r : report.records) {
    switch (r.verdict) {
    case RecordVerdict::pass:
      ++report.pass;
      break;
    case RecordVerdict::fail:
      ++report.fail;
      break;
    case RecordVerdict::unknown:
      ++report.unknown;
      break;
    }
    if (r.soft_gaps > 0) ++report.soft_gap;
  }
  return report;
}

std::string SuiteReport::serialize(bool timing) const {
  std::ostringstream out;
  out << "# suite class=" << class_name(cls) << " orders=";
  for (std::size_t i = 0; i < config.orders.size(); ++i)
    out << (i ? "," : "") << config.orders[i];
  out << " count=" << config.count << " seed=" << config.seed
      << " node_limit=" << config.budget.node_limit
      << " time_limit_ms=" << config.budget.time_limit.count() << '\n';
  for (const auto &r : records) {
    out << "index=" << r.index << " seed=" << r.seed << " n=" << r.n << " m=" << r.m
        << " omega=" << r.omega << " chi=";
    if (r.chi_exact)
      out << r.chi_lower;
    else
      out << r.chi_lower << ".." << r.chi_upper;
    out << " palette=" << r.palette << " bound=" << r.bound << " proper=" << r.proper
        << " holds=" << r.holds << " soft_gaps=" << r.soft_gaps
        << " violated=" << r.violated << " verdict=" << to_string(r.verdict);
    if (!r.detail.empty()) out << " detail=" << r.detail;
    if (timing) out << " runtime_ms=" << std::fixed << std::setprecision(3) << r.runtime_ms;
    out << '\n';
  }
  out << "summary class=" << class_name(cls) << " count=" << records.size()
      << " pass=" << pass << " fail=" << fail << " unknown=" << unknown
      << " soft_gap=" << soft_gap << '\n';
  return out.str();
}

std::string SuiteReport::table() const {
  std::ostringstream out;
  out << "class " << class_name(cls) << ", bound f(omega) = "
      << binding_function(cls).formula << "\n\n";
  out << std::setw(5) << "idx" << std::setw(5) << "n" << std::setw(6) << "m"
      << std::setw(7) << "omega" << std::setw(8) << "chi" << std::setw(9) << "palette"
      << std::setw(7) << "f(w)" << std::setw(7) << "gaps" << "  verdict\n";
  for (const auto &r : records) {
    std::string chi = r.chi_exact ? std::to_string(r.chi_lower)
                                  : std::to_string(r.chi_lower) + ".." +
                                        std::to_string(r.chi_upper);
    out << std::setw(5) << r.index << std::setw(5) << r.n << std::setw(6) << r.m
        << std::setw(7) << r.omega << std::setw(8) << chi << std::setw(9) << r.palette
        << std::setw(7) << r.bound << std::setw(7) << r.soft_gaps << "  "
        << to_string(r.verdict);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
  out << "\npass " << pass << ", fail " << fail << ", unknown " << unknown
      << ", with soft gaps " << soft_gap << '\n';
  return out.str();
}

} // namespace chib
