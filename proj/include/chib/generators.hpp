#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chib/exact.hpp"
#include "chib/graph.hpp"
#include "chib/patterns.hpp"

namespace chib {

/// G(n, p): pairs (i, j), i < j, in lexicographic order; the pair is an edge
/// iff the next uniform() draw is below p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

struct SampleConfig {
  std::size_t order = 0;
  /// Edge probability; the class default when absent.
  std::optional<double> p;
  std::uint64_t seed = 0;
  ClassId cls = ClassId::p3p2;
  std::uint64_t max_tries = 200'000;
};

/// Recommended G(n, p) density for rejection sampling from `cls`.
double default_edge_probability(ClassId cls, std::size_t n);

class SamplingError : public std::runtime_error {
public:
  SamplingError(const std::string &what, std::uint64_t tries)
      : std::runtime_error(what), tries_(tries) {}
  std::uint64_t tries() const { return tries_; }
  /// Rule-of-three upper estimate of the acceptance rate (95%).
  double acceptance_upper() const { return 3.0 / static_cast<double>(tries_); }

private:
  std::uint64_t tries_;
};

struct Sample {
  Graph graph;
  std::uint64_t tries = 0; ///< G(n, p) draws used, including the accepted one
};

/// Rejection sampling over G(n, p) until a member of cfg.cls appears.
Sample sample_class(const SampleConfig &cfg);

/// `steps` random single-pair toggles, each reverted when it leaves `cls`.
Graph mutate_within_class(const Graph &g, ClassId cls, std::size_t steps,
                          std::uint64_t seed);

enum class Family {
  kite_even, ///< K_k(Grötzsch): omega 2k, chi 4k
  kite_odd,  ///< K_{k-1}(Grötzsch) + Schläfli complement: omega 2k+1, chi 4k+2
  hammer,    ///< Grötzsch: omega 2, chi 4
  k4,        ///< Schläfli complement: omega 3, chi 6
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
ClassId family_class(Family f);

/// Throws InvalidParameter for k < 1, or k != 1 for the fixed witnesses.
Graph extremal_family(Family family, int k = 1);

struct HuntConfig {
  ClassId cls = ClassId::k4_free;
  std::size_t order = 27;
  std::uint64_t evaluations = 200; ///< proposed moves
  std::uint64_t seed = 0;
  SolveBudget solve;
  /// Starting graph; otherwise the Schläfli complement for K4Free at order
  /// 27, else a class sample (the empty graph if sampling fails).
  std::optional<Graph> start;
};

struct HuntResult {
  Graph best;
  std::size_t chi = 0;
  std::size_t omega = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t exact_solves = 0;
  std::uint64_t seed = 0;
  /// K4Free graph with chi > 6 found.
  bool noteworthy = false;
};

/// Hill climbing over in-class graphs maximizing (chi, -edges). Moves are
/// membership-preserving pair toggles; sideways moves are accepted. The
/// result's chi and omega are exact and its membership re-verified.
HuntResult hunt(const HuntConfig &cfg);

} // namespace chib
