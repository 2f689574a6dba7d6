#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

/// Search limits for one exact solve. Both limits must be positive.
struct SolveBudget {
  std::uint64_t node_limit = 10'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

enum class SolveStatus { exact, incomplete };

struct CliqueResult {
  SolveStatus status = SolveStatus::exact;
  std::vector<Vertex> members; ///< best clique found, ascending
  std::size_t lower = 0;       ///< == members.size()
  std::size_t upper = 0;       ///< == lower when exact
  std::uint64_t nodes = 0;

  bool exact() const { return status == SolveStatus::exact; }
  std::size_t size() const { return members.size(); }
};

/// Maximum clique by branch and bound with greedy-coloring bounds.
/// Requires order >= 1.
CliqueResult clique_number(const Graph &g, SolveBudget budget = {});
/// Maximum clique of g[within]; an empty `within` yields size 0.
CliqueResult max_clique_in(const Graph &g, const VertexSet &within,
                           SolveBudget budget = {});

enum class Colorability { colorable, not_colorable, unknown };

struct KColorResult {
  Colorability status = Colorability::unknown;
  std::optional<Coloring> coloring; ///< present iff colorable
  std::uint64_t nodes = 0;
};

/// Proper k-coloring by DSATUR backtracking with a maximum clique
/// precolored. `unknown` means the budget ran out.
KColorResult k_colorable(const Graph &g, std::size_t k, SolveBudget budget = {});

struct ChromaticResult {
  SolveStatus status = SolveStatus::exact;
  std::size_t lower = 0;
  std::size_t upper = 0;
  Coloring coloring; ///< witness using `upper` colors
  std::uint64_t nodes = 0;

  bool exact() const { return status == SolveStatus::exact; }
  /// The chromatic number; throws BudgetExhausted if the solve was incomplete.
  std::size_t value() const;
};

/// Exact chi ascending from the clique number. Requires order >= 1.
ChromaticResult chromatic_number(const Graph &g, SolveBudget budget = {});

struct ColoringVerdict {
  bool proper = true;
  std::optional<Edge> violation; ///< lexicographically first bad edge
};

/// Throws InvalidParameter when the assignment is partial (wrong length or a
/// negative color).
ColoringVerdict verify_coloring(const Graph &g, const Coloring &c);

/// First-fit along `order`, which must be a permutation of the vertices.
Coloring greedy_coloring(const Graph &g, std::span<const Vertex> order);
/// DSATUR heuristic; an upper bound only.
Coloring dsatur_coloring(const Graph &g);

} // namespace chib
