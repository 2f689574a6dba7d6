#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chib/exact.hpp"
#include "chib/patterns.hpp"

namespace chib {

struct SuiteConfig {
  ClassId cls = ClassId::kite_free;
  /// Instance i has order orders[i % orders.size()].
  std::vector<std::size_t> orders{10};
  std::size_t count = 1;
  std::uint64_t seed = 0;
  SolveBudget budget;
  /// Sampler density; the class default when absent.
  std::optional<double> p;
  std::uint64_t max_tries = 200'000;
  /// Worker threads. Records are ordered by index regardless.
  unsigned jobs = 1;
};

enum class RecordVerdict { pass, fail, unknown };

struct SuiteRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0; ///< sampler seed of this instance
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t omega = 0;
  std::size_t chi_lower = 0;
  std::size_t chi_upper = 0;
  bool chi_exact = false;
  std::size_t palette = 0;
  std::uint64_t bound = 0;
  bool proper = false;
  std::size_t holds = 0;
  std::size_t soft_gaps = 0;
  std::size_t violated = 0;
  RecordVerdict verdict = RecordVerdict::unknown;
  double runtime_ms = 0;
  std::string detail; ///< failure or skip reason, single token
};

struct SuiteReport {
  ClassId cls = ClassId::kite_free;
  SuiteConfig config;
  std::vector<SuiteRecord> records;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
  std::size_t soft_gap = 0; ///< records with at least one soft-gap step

  /// Header comment, one key=value line per record, summary line.
  /// runtime_ms appears only when `timing` is set.
  std::string serialize(bool timing = false) const;
  std::string table() const;
};

std::string_view to_string(RecordVerdict v);

/// Samples `count` class members, colors each with the class colorer under
/// audit, and checks the palette and exact chi against the binding function.
SuiteReport run_suite(const SuiteConfig &cfg);

} // namespace chib
