#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chib/exact.hpp"
#include "chib/graph.hpp"

namespace chib {

enum class Verdict { holds, soft_gap, violated };

/// Set-level property a trace step asserts. Operands are the step's sets
/// after `scope` (sets[0], the vertex set of the graph being decomposed):
///
///   independent, clique       sets[1]
///   complete_to, anticomplete sets[1] vs sets[2]
///   empty                     sets[1] is empty
///   touches                   every vertex of sets[1] has a neighbor in sets[2]
///   same_neighbors            sets[1]={a}, sets[2]={b}: N(a)-b == N(b)-a in scope
///   dominated                 sets[1]={u}, sets[2]={v}: u !~ v, N(u) in N(v) in scope
///   p3_free                   G[sets[1]] is a disjoint union of cliques
///   small_components          components of G[sets[1]] have <= 2 vertices
///   pattern_free              G[sets[1]] has no induced `pattern`
///   partition                 sets[2..] partition sets[1]
///   omega_at_most             omega(G[sets[1]]) <= bound
///   chi_at_most               chi(G[sets[1]]) <= bound (claimed: terse bound)
///   palette_at_most           recorded value <= bound
enum class Check {
  independent,
  clique,
  complete_to,
  anticomplete,
  empty,
  touches,
  same_neighbors,
  dominated,
  p3_free,
  small_components,
  pattern_free,
  partition,
  omega_at_most,
  chi_at_most,
  palette_at_most,
};

std::string_view to_string(Check c);
std::string_view to_string(Verdict v);

struct NamedSet {
  std::string name;
  std::vector<Vertex> members; ///< ascending ids of the top-level graph
};

struct TraceStep {
  std::string tag;
  Check check = Check::empty;
  int depth = 0;
  std::vector<NamedSet> sets;
  std::string pattern;                 ///< pattern_free only
  std::optional<std::int64_t> value;   ///< measured quantity, when numeric
  std::optional<std::int64_t> claimed; ///< terse bound stated by the argument
  std::optional<std::int64_t> bound;   ///< hard bound; exceeding it is a violation
  Verdict verdict = Verdict::holds;
  std::string note;
};

struct ProofTrace {
  std::vector<TraceStep> steps;

  std::size_t count(Verdict v) const;
  /// One step per line: tag, key=value fields, sets as {sorted ids}, verdict.
  std::string serialize() const;
  static ProofTrace parse(std::string_view text);
};

/// Verdict of a measured quantity against the step's claimed/hard bounds:
/// holds within `claimed` (or `bound` when nothing is claimed), soft-gap
/// between the two, violated beyond `bound`.
Verdict judge(std::int64_t value, const TraceStep &step);

/// Re-evaluates a step against the top-level graph. Returns the verdict the
/// recorded sets and values imply.
Verdict evaluate_step(const Graph &top, const TraceStep &step,
                      SolveBudget budget = {});

struct ReplayReport {
  std::size_t checked = 0;
  std::vector<std::size_t> mismatches; ///< indices whose verdict differs
};

ReplayReport replay(const Graph &top, const ProofTrace &trace,
                    SolveBudget budget = {});

/// A decomposition assertion failed on a concrete instance.
class AuditViolation : public std::runtime_error {
public:
  AuditViolation(const std::string &what, ProofTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const ProofTrace &trace() const { return trace_; }

private:
  ProofTrace trace_;
};

} // namespace chib
