#include "chib/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chib/errors.hpp"

namespace chib {

namespace {

class Budget {
public:
  explicit Budget(SolveBudget b)
      : limit_(b.node_limit), deadline_(std::chrono::steady_clock::now() + b.time_limit) {
    if (b.node_limit == 0 || b.time_limit.count() <= 0)
      throw InvalidParameter("solve budget limits must be positive");
  }

  /// Counts one search node; false once a limit is hit.
  bool charge() {
    if (exhausted_) return false;
    ++nodes_;
    if (nodes_ > limit_ ||
        ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_))
      exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  std::uint64_t limit_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class CliqueSearch {
public:
  CliqueSearch(const Graph &g, Budget &budget) : g_(g), budget_(budget) {}

  /// Returns false if the budget ran out.
  bool run(const VertexSet &within) {
    expand(within);
    return !budget_.exhausted();
  }

  /// Greedy coloring bound of the whole candidate set.
  std::size_t color_bound(const VertexSet &p) const {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(p, order, bound);
    return bound.empty() ? 0 : bound.back();
  }

  std::vector<Vertex> best;

private:
  // Sequential greedy coloring of p: vertices listed by ascending color
  // class, bound[i] = number of classes used up to order[i].
  void color_sort(const VertexSet &p, std::vector<Vertex> &order,
                  std::vector<std::size_t> &bound) const {
    VertexSet left = p;
    std::size_t k = 0;
    while (!left.empty()) {
      ++k;
      VertexSet q = left;
      for (Vertex v = q.first(); v >= 0; v = q.next(v + 1)) {
        q -= g_.neighbors(v);
        left.erase(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(VertexSet p) {
    if (!budget_.charge()) return;
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (current_.size() > best.size()) best = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (budget_.exhausted()) return;
      p.erase(v);
    }
  }

  const Graph &g_;
  Budget &budget_;
  std::vector<Vertex> current_;
};

CliqueResult clique_with(const Graph &g, const VertexSet &within, Budget &budget) {
  CliqueResult r;
  CliqueSearch search(g, budget);
  const std::uint64_t before = budget.nodes();
  const bool done = search.run(within);
  std::sort(search.best.begin(), search.best.end());
  r.members = search.best;
  r.lower = r.members.size();
  r.status = done ? SolveStatus::exact : SolveStatus::incomplete;
  r.upper = done ? r.lower : std::max(r.lower, search.color_bound(within));
  r.nodes = budget.nodes() - before;
  return r;
}

// DSATUR backtracking for a fixed palette size.
class ColorSearch {
public:
  ColorSearch(const Graph &g, std::size_t k, Budget &budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget), color_(n_, -1),
        forbidden_(n_ * k, 0), sat_(n_, 0) {}

  Colorability run(const std::vector<Vertex> &clique) {
    if (clique.size() > k_) return Colorability::not_colorable;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (!assign(clique[i], static_cast<int>(i))) return Colorability::not_colorable;
    }
    used_ = clique.size();
    colored_ = clique.size();
    if (search()) return Colorability::colorable;
    return budget_.exhausted() ? Colorability::unknown : Colorability::not_colorable;
  }

  Coloring coloring() const { return Coloring{color_}; }

private:
  int &forbid(Vertex v, std::size_t c) { return forbidden_[v * k_ + c]; }

  // Colors v with c and updates neighbor saturation; false on a wipe-out.
  bool assign(Vertex v, int c) {
    color_[v] = c;
    bool ok = true;
    g_.neighbors(v).for_each([&](Vertex w) {
      if (forbid(w, c)++ == 0) {
        ++sat_[w];
        if (color_[w] < 0 && sat_[w] == k_) ok = false;
      }
    });
    return ok;
  }
  void unassign(Vertex v) {
    const int c = color_[v];
    g_.neighbors(v).for_each([&](Vertex w) {
      if (--forbid(w, c) == 0) --sat_[w];
    });
    color_[v] = -1;
  }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  bool search() {
    if (colored_ == n_) return true;
    if (!budget_.charge()) return false;
    const Vertex v = pick();
    const std::size_t limit = std::min(used_ + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbid(v, c)) continue;
      const std::size_t saved_used = used_;
      if (c == used_) ++used_;
      ++colored_;
      const bool ok = assign(v, static_cast<int>(c));
      if (ok && search()) return true;
      unassign(v);
      --colored_;
      used_ = saved_used;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph &g_;
  std::size_t n_;
  std::size_t k_;
  Budget &budget_;
  std::vector<int> color_;
  std::vector<int> forbidden_;
  std::vector<std::size_t> sat_;
  std::size_t used_ = 0;
  std::size_t colored_ = 0;
};

KColorResult k_colorable_with(const Graph &g, std::size_t k,
                              const std::vector<Vertex> &clique, Budget &budget) {
  KColorResult r;
  const std::uint64_t before = budget.nodes();
  if (g.order() == 0) {
    r.status = Colorability::colorable;
    r.coloring = Coloring{};
  } else if (k == 0) {
    r.status = Colorability::not_colorable;
  } else {
    ColorSearch search(g, k, budget);
    r.status = search.run(clique);
    if (r.status == Colorability::colorable) r.coloring = search.coloring();
  }
  r.nodes = budget.nodes() - before;
  return r;
}

} // namespace

CliqueResult clique_number(const Graph &g, SolveBudget budget) {
  if (g.order() == 0) throw InvalidParameter("clique number of the empty graph");
  Budget b(budget);
  return clique_with(g, g.all(), b);
}

CliqueResult max_clique_in(const Graph &g, const VertexSet &within,
                           SolveBudget budget) {
  Budget b(budget);
  return clique_with(g, within, b);
}

KColorResult k_colorable(const Graph &g, std::size_t k, SolveBudget budget) {
  Budget b(budget);
  std::vector<Vertex> clique;
  if (g.order() > 0 && k > 0) {
    auto cr = clique_with(g, g.all(), b);
    if (!cr.exact()) return KColorResult{Colorability::unknown, std::nullopt, b.nodes()};
    clique = cr.members;
  }
  return k_colorable_with(g, k, clique, b);
}

std::size_t ChromaticResult::value() const {
  if (!exact())
    throw BudgetExhausted("chromatic number unresolved: between " +
                          std::to_string(lower) + " and " + std::to_string(upper));
  return upper;
}

ChromaticResult chromatic_number(const Graph &g, SolveBudget budget) {
  if (g.order() == 0) throw InvalidParameter("chromatic number of the empty graph");
  Budget b(budget);
  ChromaticResult r;
  r.coloring = dsatur_coloring(g);
  r.upper = r.coloring.palette();
  auto cr = clique_with(g, g.all(), b);
  r.lower = cr.lower;
  if (!cr.exact()) {
    r.status = SolveStatus::incomplete;
    r.nodes = b.nodes();
    return r;
  }
  for (std::size_t k = r.lower; k < r.upper; ++k) {
    auto kr = k_colorable_with(g, k, cr.members, b);
    if (kr.status == Colorability::unknown) {
      r.status = SolveStatus::incomplete;
      r.lower = k;
      r.nodes = b.nodes();
      return r;
    }
    if (kr.status == Colorability::colorable) {
      r.coloring = *kr.coloring;
      r.upper = k;
      break;
    }
    r.lower = k + 1;
  }
  r.lower = r.upper;
  r.nodes = b.nodes();
  return r;
}

ColoringVerdict verify_coloring(const Graph &g, const Coloring &c) {
  if (c.colors.size() != g.order())
    throw InvalidParameter("partial assignment: " + std::to_string(c.colors.size()) +
                           " colors for " + std::to_string(g.order()) + " vertices");
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    if (c.colors[v] < 0)
      throw InvalidParameter("partial assignment: vertex " + std::to_string(v) +
                             " is uncolored");
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return ColoringVerdict{false, Edge{u, v}};
  return {};
}

Coloring greedy_coloring(const Graph &g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw InvalidParameter("order is not a permutation");
  Coloring c{std::vector<int>(n, -1)};
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      throw InvalidParameter("order is not a permutation");
    seen[v] = 1;
  }
  std::vector<char> taken;
  for (Vertex v : order) {
    taken.assign(n + 1, 0);
    g.neighbors(v).for_each([&](Vertex w) {
      if (c.colors[w] >= 0) taken[c.colors[w]] = 1;
    });
    int col = 0;
    while (taken[col]) ++col;
    c.colors[v] = col;
  }
  return c;
}

Coloring dsatur_coloring(const Graph &g) {
  const std::size_t n = g.order();
  Coloring c{std::vector<int>(n, -1)};
  std::vector<VertexSet> neighbor_colors(n, VertexSet(n + 1));
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (c.colors[v] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const auto sv = neighbor_colors[v].size();
      const auto sb = neighbor_colors[best].size();
      if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
    }
    int col = 0;
    while (neighbor_colors[best].contains(col)) ++col;
    c.colors[best] = col;
    g.neighbors(best).for_each([&](Vertex w) { neighbor_colors[w].insert(col); });
  }
  return c;
}

} // namespace chib
