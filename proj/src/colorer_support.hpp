#pragma once

// Shared machinery for the decomposition colorers: recursion frames that
// remember how local ids map to the caller's top-level graph, the audit
// recorder, and disjoint-palette block composition.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chib/colorers.hpp"
#include "chib/exact.hpp"
#include "chib/proof_trace.hpp"

namespace chib::detail {

struct Frame {
  const Graph &g;
  std::vector<Vertex> to_top;
  int depth = 0;
};

using Sets = std::vector<std::pair<std::string, VertexSet>>;

class Audit {
public:
  explicit Audit(SolveBudget budget) : budget_(budget) {}

  /// Evaluates a set-level check on the frame and records it. A violated
  /// verdict throws AuditViolation.
  void check(const Frame &f, std::string tag, Check check, const Sets &sets,
             std::string note = {});
  void pattern_free(const Frame &f, std::string tag, const VertexSet &x,
                    const std::string &pattern);
  /// Records a measured quantity against its claimed and hard bounds.
  Verdict bounded(const Frame &f, std::string tag, Check check, const Sets &sets,
                  std::int64_t value, std::optional<std::int64_t> claimed,
                  std::optional<std::int64_t> bound, std::string note = {});
  void palette(const Frame &f, std::string tag, std::size_t value,
               std::uint64_t bound, std::string note = {});

  /// Exact clique number of g[x].
  std::size_t omega(const Graph &g, const VertexSet &x) const;
  std::vector<Vertex> max_clique(const Graph &g, const VertexSet &x) const;
  /// Optimal coloring of g[x], indexed like induced_subgraph(g, x).
  Coloring exact_color(const Graph &g, const VertexSet &x) const;

  SolveBudget budget() const { return budget_; }
  ProofTrace take() { return std::move(trace_); }

private:
  TraceStep make_step(const Frame &f, std::string tag, Check check,
                      const Sets &sets) const;
  void record(TraceStep local, const Frame &f);

  SolveBudget budget_;
  ProofTrace trace_;
};

/// Builds a coloring from blocks that each receive fresh colors.
class BlockColoring {
public:
  explicit BlockColoring(std::size_t n) : colors_(n, -1) {}

  /// Colors `vertices[i]` with next_color() + block.colors[i]; returns the
  /// block's palette.
  std::size_t add(const std::vector<Vertex> &vertices, Coloring block);
  /// One fresh color for every vertex of `x`; returns 0 or 1.
  std::size_t add_uniform(const VertexSet &x);
  void set(Vertex v, int color) { colors_.at(v) = color; }
  int color(Vertex v) const { return colors_.at(v); }
  int next_color() const { return next_; }
  /// Lowest color not used on any vertex of `x`.
  int lowest_free(const VertexSet &x) const;
  /// All vertices colored; compacts the palette.
  Coloring finish() &&;

private:
  std::vector<int> colors_;
  int next_ = 0;
};

/// Child frame over g[x] together with the induced subgraph it owns.
struct SubFrame {
  InducedSubgraph sub;
  std::vector<Vertex> to_top;
};

SubFrame descend(const Frame &f, const VertexSet &x);

/// Colors graphs with at most two vertices directly.
Coloring trivial_coloring(const Graph &g);

/// Colors 0..count-1, one per vertex; for cliques.
Coloring distinct_colors(std::size_t count);

VertexSet singleton(const Graph &g, Vertex v);

/// Cluster-colors g[x] as a block. Returns the block palette.
std::size_t cluster_block(const Frame &f, BlockColoring &blocks, const VertexSet &x);

/// Vertices of the pattern embedding as a set.
VertexSet image_set(const Graph &g, const Embedding &e);

/// Colors the whole frame optimally and records chi against `bound`.
Coloring exact_leaf(const Frame &f, Audit &audit, const std::string &tag,
                    std::int64_t bound, std::string note = {});

/// Colors g[x] with `colorer` on a child frame and adds it as a block.
/// Returns the block palette.
using FrameColorer = Coloring (*)(const Frame &, Audit &);
std::size_t color_block(const Frame &f, Audit &audit, BlockColoring &blocks,
                        const VertexSet &x, FrameColorer colorer);

/// The (P3 u P2, P2 u K3)-free decomposition, shared by colorers that
/// delegate to it once their own branches are exhausted.
Coloring color_p2k3_frame(const Frame &f, Audit &audit);

/// Membership check, top frame, final palette audit and properness check.
ColorerResult run_colorer(const Graph &g, const ColorerOptions &opts, ClassId cls,
                          FrameColorer colorer);

} // namespace chib::detail
