#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chib/exact.hpp"
#include "chib/graph.hpp"
#include "chib/patterns.hpp"
#include "chib/proof_trace.hpp"

namespace chib {

struct ColorerOptions {
  /// Applied to every exact solve the colorer performs.
  SolveBudget budget;
  /// Verify class membership of the input before decomposing.
  bool check_membership = true;
};

struct ColorerResult {
  Coloring coloring; ///< proper, colors compacted to 0..palette-1
  ProofTrace trace;
  std::size_t omega = 0;
  std::uint64_t bound = 0; ///< binding function at omega
};

/// Colors each component of a P3-free graph (a clique) with 0..|comp|-1.
/// Throws ClassMembershipError carrying an induced P3 otherwise.
Coloring cluster_color(const Graph &g);

/// One domination step: `removed` has no edge to `dominator` and
/// N(removed) is contained in N(dominator).
struct DominationStep {
  Graph reduced;
  std::vector<Vertex> kept; ///< reduced id -> original id
  Vertex removed = -1;
  Vertex dominator = -1;

  /// Lifts a coloring of `reduced` to the original graph by giving
  /// `removed` the color of `dominator`.
  Coloring extend(const Coloring &reduced_coloring) const;
};

/// Lowest dominated vertex (ties: lowest dominator), if any.
std::optional<DominationStep> domination_reduce(const Graph &g);

/// palette <= 2 omega on (P3 u P2, kite)-free graphs.
ColorerResult color_kite_free(const Graph &g, const ColorerOptions &opts = {});
/// palette <= omega^2 on (P3 u P2, P2 u K3)-free graphs.
ColorerResult color_p2k3_free(const Graph &g, const ColorerOptions &opts = {});
/// palette <= omega^2 on (P3 u P2, hammer)-free graphs.
ColorerResult color_hammer_free(const Graph &g, const ColorerOptions &opts = {});
/// palette <= (3 omega^2 + omega) / 2 on (P3 u P2, C5)-free graphs.
ColorerResult color_c5_free(const Graph &g, const ColorerOptions &opts = {});
/// palette <= 9 on (P3 u P2, K4)-free graphs.
ColorerResult color_k4_free(const Graph &g, const ColorerOptions &opts = {});

/// Trace tags whose steps may end in a soft gap: the two-colors-per-side
/// step of the hammer decomposition and the B-cell bookkeeping of the C5
/// decomposition. A soft gap anywhere else is a defect.
bool soft_gap_allowed(std::string_view tag);

bool has_colorer(ClassId cls);
/// Dispatches to the colorer for `cls`. K1K3Free and TriangleFree are
/// subclasses of KiteFree and use that colorer; P3P2 has none.
ColorerResult color_in_class(ClassId cls, const Graph &g,
                             const ColorerOptions &opts = {});

} // namespace chib
