#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chib/graph.hpp"
#include "chib/rng.hpp"

namespace oracle {

using chib::Graph;
using chib::Vertex;

inline bool induced_match(const Graph &pattern, const Graph &host, const std::vector<Vertex> &map) {
  const int k = static_cast<int>(pattern.order());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (pattern.has_edge(a, b) != host.has_edge(map[a], map[b])) return false;
  return true;
}

/// Every k-subset of the host, then every bijection onto it.
inline bool has_induced(const Graph &host, const Graph &pattern) {
  const int n = static_cast<int>(host.order());
  const int k = static_cast<int>(pattern.order());
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> subset;
    for (int i = 0; i < n; ++i)
      if (pick[i]) subset.push_back(i);
    std::vector<Vertex> map = subset;
    do {
      if (induced_match(pattern, host, map)) return true;
    } while (std::next_permutation(map.begin(), map.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Number of k-subsets that induce a copy of the pattern.
inline std::size_t count_induced_sets(const Graph &host, const Graph &pattern) {
  const int n = static_cast<int>(host.order());
  const int k = static_cast<int>(pattern.order());
  if (k > n) return 0;
  std::size_t count = 0;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> map;
    for (int i = 0; i < n; ++i)
      if (pick[i]) map.push_back(i);
    bool hit = false;
    do {
      hit = induced_match(pattern, host, map);
    } while (!hit && std::next_permutation(map.begin(), map.end()));
    count += hit;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

inline std::size_t clique_number(const Graph &g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !g.has_edge(i, j)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline bool proper(const Graph &g, const std::vector<int> &colors) {
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

/// Smallest k admitting a proper assignment, over all k^n assignments.
inline std::size_t chromatic_number(const Graph &g) {
  const std::size_t n = g.order();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<int> colors(n, 0);
    while (true) {
      if (proper(g, colors)) return k;
      std::size_t i = 0;
      while (i < n && ++colors[i] == static_cast<int>(k)) colors[i++] = 0;
      if (i == n) break;
    }
  }
  return 0;
}

inline bool isomorphic(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (induced_match(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// graph6 for order <= 62, read bit by bit from the column-wise upper triangle.
inline Graph decode_graph6(const std::string &s) {
  const int n = s.at(0) - 63;
  Graph g(static_cast<std::size_t>(n));
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s.at(1 + bit / 6) - 63;
      if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
    }
  return g;
}

/// Independent G(n, p) draw for tests that only need variety.
inline Graph random_graph(std::size_t n, double p, chib::SplitMix64 &rng) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

} // namespace oracle
