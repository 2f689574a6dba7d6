#include "chib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "chib/bounds.hpp"
#include "chib/catalog.hpp"
#include "chib/colorers.hpp"
#include "chib/exact.hpp"
#include "chib/generators.hpp"
#include "chib/graph_io.hpp"
#include "chib/patterns.hpp"
#include "chib/rng.hpp"
#include "chib/suite.hpp"

namespace chib {

namespace {

struct InputOptions {
  std::string path;
  std::string format;
};

struct BudgetOptions {
  std::uint64_t nodes = SolveBudget{}.node_limit;
  std::int64_t time_ms = SolveBudget{}.time_limit.count();

  SolveBudget budget() const {
    if (nodes == 0 || time_ms <= 0) throw InvalidParameter("budgets must be positive");
    return {nodes, std::chrono::milliseconds(time_ms)};
  }
};

void add_input(CLI::App *sub, InputOptions &in) {
  sub->add_option("graph", in.path, "graph file (.col/.dimacs or .g6/.graph6)")->required();
  sub->add_option("--format", in.format, "override the format: dimacs or graph6");
}

void add_budget(CLI::App *sub, BudgetOptions &b) {
  sub->add_option("--nodes", b.nodes, "search-node limit per exact solve")
      ->capture_default_str();
  sub->add_option("--time-ms", b.time_ms, "wall-time limit per exact solve (ms)")
      ->capture_default_str();
}

Graph load(const InputOptions &in) {
  return in.format.empty() ? read_graph(in.path) : read_graph(in.path, parse_format(in.format));
}

std::string join_ids(const std::vector<Vertex> &ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << text;
}

Graph resolve_named(const std::string &name, int k) {
  try {
    return extremal_family(parse_family(name), k);
  } catch (const InvalidParameter &) {
    if (k != 1) throw;
  }
  Graph g = named_graph(name);
  g.set_name(name);
  return g;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Coloring toolkit for (P3 u P2, X)-free graph classes", "chib"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  auto *gen = app.add_subcommand("gen", "write a named, extremal, random or sampled graph");
  std::string gen_family, gen_class, gen_output, gen_format;
  int gen_k = 1;
  std::size_t gen_random = 0, gen_n = 0, gen_count = 1, gen_mutate = 0;
  double gen_p = -1;
  std::uint64_t gen_seed = 0;
  auto *opt_family = gen->add_option("--family", gen_family,
                                     "catalog name or family (kite-even, kite-odd, hammer, k4)");
  gen->add_option("--k", gen_k, "family index")->capture_default_str();
  auto *opt_random = gen->add_option("--random", gen_random, "G(n, p) with this order");
  auto *opt_class = gen->add_option("--class", gen_class, "rejection-sample a class member");
  gen->add_option("--n", gen_n, "order for --class");
  gen->add_option("--count", gen_count, "number of samples (graph6 corpus when > 1)")
      ->capture_default_str();
  gen->add_option("--mutate", gen_mutate, "membership-preserving toggles per sample");
  gen->add_option("--p", gen_p, "edge probability (class default for --class)");
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "output file; graph6 on stdout when absent");
  gen->add_option("--format", gen_format, "override the output format");
  opt_family->excludes(opt_random)->excludes(opt_class);
  opt_random->excludes(opt_class);
  gen->callback([&] {
    action = [&]() -> int {
      std::vector<Graph> graphs;
      std::vector<std::string> header;
      if (!gen_family.empty()) {
        graphs.push_back(resolve_named(gen_family, gen_k));
      } else if (*opt_random) {
        graphs.push_back(gnp(gen_random, gen_p < 0 ? 0.5 : gen_p, gen_seed));
      } else if (!gen_class.empty()) {
        const ClassId cls = parse_class(gen_class);
        SampleConfig cfg{gen_n, std::nullopt, 0, cls};
        if (gen_p >= 0) cfg.p = gen_p;
        const double p = cfg.p.value_or(default_edge_probability(cls, gen_n));
        header.push_back("class=" + std::string(class_name(cls)) + " n=" +
                         std::to_string(gen_n) + " p=" + std::to_string(p) +
                         " seed=" + std::to_string(gen_seed) + " count=" +
                         std::to_string(gen_count) + " mutate=" + std::to_string(gen_mutate));
        for (std::size_t i = 0; i < gen_count; ++i) {
          cfg.seed = SplitMix64::derive(gen_seed, i);
          Graph g = sample_class(cfg).graph;
          if (gen_mutate) g = mutate_within_class(g, cls, gen_mutate, cfg.seed);
          graphs.push_back(std::move(g));
        }
      } else {
        throw CLI::ValidationError("gen", "one of --family, --random or --class is required");
      }

      if (graphs.size() > 1) {
        if (gen_output.empty()) {
          for (const auto &h : header) out << "# " << h << '\n';
          for (const auto &g : graphs) out << to_graph6(g) << '\n';
        } else {
          write_graph6_corpus(gen_output, header, graphs);
        }
      } else if (gen_output.empty()) {
        out << to_graph6(graphs.front()) << '\n';
      } else {
        const auto fmt =
            gen_format.empty() ? format_from_path(gen_output) : parse_format(gen_format);
        write_graph(graphs.front(), gen_output, fmt);
      }
      err << "wrote " << graphs.size() << " graph(s), order " << graphs.front().order()
          << ", edges " << graphs.front().edge_count() << '\n';
      return kExitOk;
    };
  });

  // detect
  auto *detect = app.add_subcommand("detect", "find an induced copy of a catalog pattern");
  InputOptions detect_in;
  std::string detect_pattern;
  detect->add_option("--pattern", detect_pattern, "catalog pattern name")->required();
  add_input(detect, detect_in);
  detect->callback([&] {
    action = [&]() -> int {
      const Graph g = load(detect_in);
      if (auto e = find_induced(g, make_pattern(detect_pattern))) {
        out << "found map=" << join_ids(e->map) << '\n';
        return kExitOk;
      }
      out << "absent\n";
      return kExitVerdict;
    };
  });

  // member
  auto *member = app.add_subcommand("member", "test membership in a graph class");
  InputOptions member_in;
  std::string member_class;
  member->add_option("--class", member_class, "class name, e.g. k4free")->required();
  add_input(member, member_in);
  member->callback([&] {
    action = [&]() -> int {
      const Graph g = load(member_in);
      const auto verdict = is_member(g, parse_class(member_class));
      if (verdict.member) {
        out << "member\n";
        return kExitOk;
      }
      out << "non-member pattern=" << verdict.pattern
          << " witness=" << join_ids(verdict.witness->map) << '\n';
      return kExitVerdict;
    };
  });

  // omega
  auto *omega = app.add_subcommand("omega", "exact clique number");
  InputOptions omega_in;
  BudgetOptions omega_budget;
  bool omega_witness = false;
  add_input(omega, omega_in);
  add_budget(omega, omega_budget);
  omega->add_flag("--witness", omega_witness, "also print a maximum clique");
  omega->callback([&] {
    action = [&]() -> int {
      const Graph g = load(omega_in);
      const auto r = clique_number(g, omega_budget.budget());
      if (!r.exact()) {
        out << "unknown lower=" << r.lower << " upper=" << r.upper << '\n';
        err << "clique search exhausted its budget after " << r.nodes << " nodes\n";
        return kExitBudget;
      }
      out << r.size() << '\n';
      if (omega_witness) out << "clique=" << join_ids(r.members) << '\n';
      return kExitOk;
    };
  });

  // chi
  auto *chi = app.add_subcommand("chi", "exact chromatic number");
  InputOptions chi_in;
  BudgetOptions chi_budget;
  bool chi_witness = false;
  add_input(chi, chi_in);
  add_budget(chi, chi_budget);
  chi->add_flag("--witness", chi_witness, "also print an optimal coloring");
  chi->callback([&] {
    action = [&]() -> int {
      const Graph g = load(chi_in);
      const auto r = chromatic_number(g, chi_budget.budget());
      if (!r.exact()) {
        out << "unknown lower=" << r.lower << " upper=" << r.upper << '\n';
        err << "coloring search exhausted its budget after " << r.nodes << " nodes\n";
        return kExitBudget;
      }
      out << r.value() << '\n';
      if (chi_witness) out << to_coloring_text(r.coloring);
      return kExitOk;
    };
  });

  // color
  auto *color = app.add_subcommand("color", "color with the class decomposition and audit it");
  InputOptions color_in;
  BudgetOptions color_budget;
  std::string color_class, color_audit, color_output;
  color->add_option("--class", color_class, "class name")->required();
  color->add_option("--audit-out", color_audit, "write the audit trace here");
  color->add_option("-o,--output", color_output, "write the coloring here instead of stdout");
  add_input(color, color_in);
  add_budget(color, color_budget);
  color->callback([&] {
    action = [&]() -> int {
      const Graph g = load(color_in);
      const ClassId cls = parse_class(color_class);
      ColorerOptions opts;
      opts.budget = color_budget.budget();
      try {
        const auto r = color_in_class(cls, g, opts);
        if (!color_audit.empty()) write_text(color_audit, r.trace.serialize());
        std::ostringstream text;
        text << "# palette=" << r.coloring.palette() << " omega=" << r.omega
             << " bound=" << r.bound << " steps=" << r.trace.steps.size()
             << " soft_gaps=" << r.trace.count(Verdict::soft_gap) << '\n'
             << to_coloring_text(r.coloring);
        if (color_output.empty())
          out << text.str();
        else
          write_text(color_output, text.str());
        return kExitOk;
      } catch (const ClassMembershipError &e) {
        err << "not in class " << class_name(cls) << ": induced " << e.pattern()
            << " at " << join_ids(e.witness().map) << '\n';
        out << "non-member pattern=" << e.pattern() << " witness=" << join_ids(e.witness().map)
            << '\n';
        return kExitVerdict;
      } catch (const AuditViolation &e) {
        if (!color_audit.empty()) write_text(color_audit, e.trace().serialize());
        err << e.what() << '\n';
        return kExitVerdict;
      }
    };
  });

  // verify
  auto *verify = app.add_subcommand("verify", "check that a coloring file is proper");
  InputOptions verify_in;
  std::string verify_coloring_path;
  verify->add_option("--coloring", verify_coloring_path, "coloring file")->required();
  add_input(verify, verify_in);
  verify->callback([&] {
    action = [&]() -> int {
      const Graph g = load(verify_in);
      const Coloring c = parse_coloring(slurp(verify_coloring_path), g.order());
      const auto missing = std::find(c.colors.begin(), c.colors.end(), -1);
      if (missing != c.colors.end())
        throw InvalidParameter("coloring omits vertex " +
                               std::to_string(missing - c.colors.begin()));
      const auto verdict = verify_coloring(g, c);
      if (verdict.proper) {
        out << "proper palette=" << c.palette() << '\n';
        return kExitOk;
      }
      out << "improper edge=" << verdict.violation->first << ","
          << verdict.violation->second << '\n';
      return kExitVerdict;
    };
  });

  // suite
  auto *suite = app.add_subcommand("suite", "sample class members and audit the colorer");
  SuiteConfig suite_cfg;
  std::string suite_class;
  BudgetOptions suite_budget;
  double suite_p = -1;
  bool suite_table = false, suite_timing = false;
  suite->add_option("--class", suite_class, "class name")->required();
  suite->add_option("--n", suite_cfg.orders, "graph orders, cycled over instances")
      ->delimiter(',')
      ->capture_default_str();
  suite->add_option("--count", suite_cfg.count, "number of instances")->capture_default_str();
  suite->add_option("--seed", suite_cfg.seed, "suite seed")->capture_default_str();
  suite->add_option("--p", suite_p, "sampler edge probability (class default otherwise)");
  suite->add_option("--jobs", suite_cfg.jobs, "worker threads")->capture_default_str();
  suite->add_flag("--table", suite_table, "human-readable table instead of records");
  suite->add_flag("--timing", suite_timing, "include runtime_ms in records");
  add_budget(suite, suite_budget);
  suite->callback([&] {
    action = [&]() -> int {
      suite_cfg.cls = parse_class(suite_class);
      suite_cfg.budget = suite_budget.budget();
      if (suite_p >= 0) suite_cfg.p = suite_p;
      const auto report = run_suite(suite_cfg);
      out << (suite_table ? report.table() : report.serialize(suite_timing));
      if (report.fail) return kExitVerdict;
      return report.unknown ? kExitBudget : kExitOk;
    };
  });

  // hunt
  auto *hunt_cmd = app.add_subcommand("hunt", "hill-climb for high chromatic number in a class");
  HuntConfig hunt_cfg;
  std::string hunt_class = "k4free", hunt_output, hunt_start;
  BudgetOptions hunt_budget;
  hunt_cmd->add_option("--class", hunt_class, "class name")->capture_default_str();
  hunt_cmd->add_option("--n", hunt_cfg.order, "graph order")->capture_default_str();
  hunt_cmd->add_option("--budget", hunt_cfg.evaluations, "proposed moves")
      ->capture_default_str();
  hunt_cmd->add_option("--seed", hunt_cfg.seed, "RNG seed")->capture_default_str();
  hunt_cmd->add_option("--start", hunt_start, "starting graph file");
  hunt_cmd->add_option("-o,--output", hunt_output, "write the best graph here");
  add_budget(hunt_cmd, hunt_budget);
  hunt_cmd->callback([&] {
    action = [&]() -> int {
      hunt_cfg.cls = parse_class(hunt_class);
      hunt_cfg.solve = hunt_budget.budget();
      if (!hunt_start.empty()) {
        hunt_cfg.start = read_graph(hunt_start);
        hunt_cfg.order = hunt_cfg.start->order();
      }
      const auto r = hunt(hunt_cfg);
      out << "class=" << class_name(hunt_cfg.cls) << " n=" << r.best.order()
          << " m=" << r.best.edge_count() << " omega=" << r.omega << " chi=" << r.chi
          << " evaluations=" << r.evaluations << " exact_solves=" << r.exact_solves
          << " seed=" << r.seed << " graph6=" << to_graph6(r.best) << '\n';
      if (r.noteworthy)
        out << "noteworthy: K4Free graph with chi=" << r.chi << " exceeds 6\n";
      if (!hunt_output.empty()) write_graph(r.best, hunt_output);
      return kExitOk;
    };
  });

  // bench
  auto *bench = app.add_subcommand("bench", "time the exact solvers and colorers on witnesses");
  BudgetOptions bench_budget;
  add_budget(bench, bench_budget);
  bench->callback([&] {
    action = [&]() -> int {
      const SolveBudget budget = bench_budget.budget();
      const Graph grotzsch = named_graph("grotzsch");
      const Graph schlafli = named_graph("schlafli_complement");
      struct Case {
        std::string name;
        std::function<std::string()> run;
      };
      auto chi_of = [&](const Graph &g) {
        return [&g, budget]() {
          const auto r = chromatic_number(g, budget);
          return r.exact() ? std::to_string(r.value())
                           : std::to_string(r.lower) + ".." + std::to_string(r.upper);
        };
      };
      const Graph gg = join(grotzsch, grotzsch);
      const Graph gs = join(grotzsch, schlafli);
      ColorerOptions opts;
      opts.budget = budget;
      const std::vector<Case> cases = {
          {"chi.grotzsch", chi_of(grotzsch)},
          {"chi.schlafli_complement", chi_of(schlafli)},
          {"chi.grotzsch+grotzsch", chi_of(gg)},
          {"chi.grotzsch+schlafli_complement", chi_of(gs)},
          {"color.kite.grotzsch+schlafli_complement",
           [&]() { return std::to_string(color_kite_free(gs, opts).coloring.palette()); }},
          {"color.k4.schlafli_complement",
           [&]() { return std::to_string(color_k4_free(schlafli, opts).coloring.palette()); }},
          {"color.hammer.grotzsch",
           [&]() { return std::to_string(color_hammer_free(grotzsch, opts).coloring.palette()); }},
      };
      for (const auto &c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string result = c.run();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out << "case=" << c.name << " result=" << result << " ms=" << ms << '\n';
      }
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "chib: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::Error &e) {
    err << "chib: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "chib: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter &e) {
    err << "chib: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SamplingError &e) {
    err << "chib: " << e.what() << '\n';
    return kExitBudget;
  } catch (const BudgetExhausted &e) {
    err << "chib: budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ClassMembershipError &e) {
    err << "chib: " << e.what() << ": induced " << e.pattern() << " at "
        << join_ids(e.witness().map) << '\n';
    return kExitVerdict;
  } catch (const std::exception &e) {
    err << "chib: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace chib
