#include "chib/proof_trace.hpp"

#include <charconv>
#include <sstream>

#include "chib/errors.hpp"
#include "chib/patterns.hpp"

namespace chib {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::independent, "independent"},
    {Check::clique, "clique"},
    {Check::complete_to, "complete-to"},
    {Check::anticomplete, "anticomplete"},
    {Check::empty, "empty"},
    {Check::touches, "touches"},
    {Check::same_neighbors, "same-neighbors"},
    {Check::dominated, "dominated"},
    {Check::p3_free, "p3-free"},
    {Check::small_components, "small-components"},
    {Check::pattern_free, "pattern-free"},
    {Check::partition, "partition"},
    {Check::omega_at_most, "omega-at-most"},
    {Check::chi_at_most, "chi-at-most"},
    {Check::palette_at_most, "palette-at-most"},
};

constexpr std::pair<Verdict, std::string_view> kVerdictNames[] = {
    {Verdict::holds, "holds"},
    {Verdict::soft_gap, "soft-gap"},
    {Verdict::violated, "violated"},
};

} // namespace

Verdict judge(std::int64_t value, const TraceStep &s) {
  if (s.claimed) {
    if (value <= *s.claimed) return Verdict::holds;
    return (!s.bound || value <= *s.bound) ? Verdict::soft_gap : Verdict::violated;
  }
  if (!s.bound) throw InvalidParameter("bounded check without a bound: " + s.tag);
  return value <= *s.bound ? Verdict::holds : Verdict::violated;
}

namespace {

VertexSet operand(const Graph &g, const TraceStep &s, std::size_t i) {
  if (i >= s.sets.size())
    throw InvalidParameter("trace step '" + s.tag + "' is missing operand " +
                           std::to_string(i));
  return VertexSet::from_range(g.order(), s.sets[i].members);
}

Vertex single(const Graph &g, const TraceStep &s, std::size_t i) {
  const auto set = operand(g, s, i);
  if (set.size() != 1)
    throw InvalidParameter("trace step '" + s.tag + "' expects a single vertex");
  return set.first();
}

bool components_at_most(const Graph &g, const VertexSet &x, std::size_t limit) {
  for (const auto &comp : connected_components(g, x))
    if (comp.size() > limit) return false;
  return true;
}

bool holds(const Graph &g, const TraceStep &s) {
  const auto scope = operand(g, s, 0);
  switch (s.check) {
  case Check::independent:
    return is_independent(g, operand(g, s, 1));
  case Check::clique:
    return is_clique(g, operand(g, s, 1));
  case Check::complete_to:
    return is_complete_to(g, operand(g, s, 1), operand(g, s, 2));
  case Check::anticomplete:
    return is_anticomplete_to(g, operand(g, s, 1), operand(g, s, 2));
  case Check::empty:
    return operand(g, s, 1).empty();
  case Check::touches: {
    const auto target = operand(g, s, 2);
    bool ok = true;
    operand(g, s, 1).for_each([&](Vertex v) {
      if (!g.neighbors(v).intersects(target)) ok = false;
    });
    return ok;
  }
  case Check::same_neighbors: {
    const Vertex a = single(g, s, 1), b = single(g, s, 2);
    VertexSet both(g.order(), {a, b});
    return ((g.neighbors(a) & scope) - both) == ((g.neighbors(b) & scope) - both);
  }
  case Check::dominated: {
    const Vertex u = single(g, s, 1), v = single(g, s, 2);
    return !g.has_edge(u, v) &&
           (g.neighbors(u) & scope).is_subset_of(g.neighbors(v) & scope);
  }
  case Check::p3_free: {
    for (const auto &comp : connected_components(g, operand(g, s, 1)))
      if (!is_clique(g, comp)) return false;
    return true;
  }
  case Check::small_components:
    return components_at_most(g, operand(g, s, 1), 2);
  case Check::pattern_free: {
    auto sub = induced_subgraph(g, operand(g, s, 1));
    return !find_induced(sub.graph, make_pattern(s.pattern)).has_value();
  }
  case Check::partition: {
    const auto whole = operand(g, s, 1);
    VertexSet seen(g.order());
    for (std::size_t i = 2; i < s.sets.size(); ++i) {
      const auto part = operand(g, s, i);
      if (part.intersects(seen)) return false;
      seen |= part;
    }
    return seen == whole;
  }
  case Check::omega_at_most:
  case Check::chi_at_most:
  case Check::palette_at_most:
    break;
  }
  throw InvalidParameter("not a boolean check: " + std::string(to_string(s.check)));
}

std::int64_t measure(const Graph &g, const TraceStep &s, SolveBudget budget) {
  const auto x = operand(g, s, 1);
  if (x.empty()) return 0;
  if (s.check == Check::omega_at_most) {
    auto r = max_clique_in(g, x, budget);
    if (!r.exact()) throw BudgetExhausted("replay clique solve exhausted");
    return static_cast<std::int64_t>(r.size());
  }
  return static_cast<std::int64_t>(
      chromatic_number(induced_subgraph(g, x).graph, budget).value());
}

std::string join_ids(const std::vector<Vertex> &ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i)
    out += (i ? "," : "") + std::to_string(ids[i]);
  return out + "}";
}

std::int64_t parse_int(std::string_view s, std::size_t line_no) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "' in trace", line_no, 0);
  return v;
}

} // namespace

std::string_view to_string(Check c) {
  for (auto [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::string_view to_string(Verdict v) {
  for (auto [k, name] : kVerdictNames)
    if (k == v) return name;
  return "?";
}

std::size_t ProofTrace::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto &s : steps) n += s.verdict == v;
  return n;
}

std::string ProofTrace::serialize() const {
  std::ostringstream out;
  for (const auto &s : steps) {
    out << "tag=" << s.tag << " depth=" << s.depth << " check=" << to_string(s.check);
    for (const auto &set : s.sets) out << ' ' << set.name << '=' << join_ids(set.members);
    if (!s.pattern.empty()) out << " pattern=" << s.pattern;
    if (s.value) out << " value=" << *s.value;
    if (s.claimed) out << " claimed=" << *s.claimed;
    if (s.bound) out << " bound=" << *s.bound;
    out << " verdict=" << to_string(s.verdict);
    if (!s.note.empty()) out << " # " << s.note;
    out << '\n';
  }
  return out.str();
}

ProofTrace ProofTrace::parse(std::string_view text) {
  ProofTrace trace;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    std::string_view line = raw;
    TraceStep step;
    if (auto hash = line.find(" # "); hash != std::string_view::npos) {
      step.note = std::string(line.substr(hash + 3));
      line = line.substr(0, hash);
    }
    std::istringstream toks{std::string(line)};
    std::string tok;
    while (toks >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("malformed trace token '" + tok + "'", line_no, 0);
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (!val.empty() && val.front() == '{') {
        if (val.back() != '}') throw ParseError("unterminated set in trace", line_no, 0);
        NamedSet set{key, {}};
        std::string_view body = std::string_view(val).substr(1, val.size() - 2);
        while (!body.empty()) {
          const auto comma = body.find(',');
          set.members.push_back(
              static_cast<Vertex>(parse_int(body.substr(0, comma), line_no)));
          body.remove_prefix(comma == std::string_view::npos ? body.size() : comma + 1);
        }
        step.sets.push_back(std::move(set));
      } else if (key == "tag") {
        step.tag = val;
      } else if (key == "depth") {
        step.depth = static_cast<int>(parse_int(val, line_no));
      } else if (key == "check") {
        bool found = false;
        for (auto [k, name] : kCheckNames)
          if (name == val) step.check = k, found = true;
        if (!found) throw ParseError("unknown check '" + val + "'", line_no, 0);
      } else if (key == "verdict") {
        bool found = false;
        for (auto [k, name] : kVerdictNames)
          if (name == val) step.verdict = k, found = true;
        if (!found) throw ParseError("unknown verdict '" + val + "'", line_no, 0);
      } else if (key == "pattern") {
        step.pattern = val;
      } else if (key == "value") {
        step.value = parse_int(val, line_no);
      } else if (key == "claimed") {
        step.claimed = parse_int(val, line_no);
      } else if (key == "bound") {
        step.bound = parse_int(val, line_no);
      } else {
        throw ParseError("unknown trace key '" + key + "'", line_no, 0);
      }
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

Verdict evaluate_step(const Graph &top, const TraceStep &step, SolveBudget budget) {
  switch (step.check) {
  case Check::palette_at_most:
    if (!step.value) throw InvalidParameter("palette step without value: " + step.tag);
    return judge(*step.value, step);
  case Check::omega_at_most:
  case Check::chi_at_most:
    return judge(measure(top, step, budget), step);
  default:
    return holds(top, step) ? Verdict::holds : Verdict::violated;
  }
}

ReplayReport replay(const Graph &top, const ProofTrace &trace, SolveBudget budget) {
  ReplayReport report;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    ++report.checked;
    if (evaluate_step(top, trace.steps[i], budget) != trace.steps[i].verdict)
      report.mismatches.push_back(i);
  }
  return report;
}

} // namespace chib
