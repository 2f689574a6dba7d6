#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

constexpr std::size_t kMaxPatternOrder = 8;

struct Pattern {
  Graph graph;
  std::string name;
};

/// Catalog pattern by name; throws InvalidParameter if the graph is larger
/// than kMaxPatternOrder.
Pattern make_pattern(std::string_view catalog_name);
Pattern make_pattern(Graph graph, std::string name);

/// Each X-free class forbids P3 u P2 together with X; TriangleFree forbids
/// P3 u P2 and C3.
enum class ClassId {
  p3p2,
  kite_free,
  hammer_free,
  c5_free,
  k4_free,
  p2k3_free,
  k1k3_free,
  triangle_free,
};

struct ClassSpec {
  ClassId id;
  std::string name;
  /// Ascending by (order, edge count) so cheap rejections come first.
  std::vector<Pattern> forbidden;
};

const ClassSpec &class_spec(ClassId id);
const std::vector<ClassId> &all_classes();
/// Accepts the canonical names ("KiteFree") and loose spellings such as
/// "kite-free" or "kitefree".
ClassId parse_class(std::string_view name);
std::string_view class_name(ClassId id);

/// Lexicographically least embedding in search order, if any.
std::optional<Embedding> find_induced(const Graph &host, const Pattern &pattern);

/// Calls `visit` for every induced embedding in search order until it
/// returns false.
void for_each_induced(const Graph &host, const Pattern &pattern,
                      const std::function<bool(const Embedding &)> &visit);

/// Number of distinct image vertex sets, stopping at `cap`.
std::size_t count_induced(const Graph &host, const Pattern &pattern,
                          std::size_t cap);

struct MembershipVerdict {
  bool member = true;
  std::string pattern; ///< violated pattern name when !member
  std::optional<Embedding> witness;
};

MembershipVerdict is_member(const Graph &g, const ClassSpec &cls);
inline MembershipVerdict is_member(const Graph &g, ClassId id) {
  return is_member(g, class_spec(id));
}

/// Raised when an operation's class precondition fails.
class ClassMembershipError : public std::runtime_error {
public:
  ClassMembershipError(const std::string &what, std::string pattern,
                       Embedding witness)
      : std::runtime_error(what), pattern_(std::move(pattern)),
        witness_(std::move(witness)) {}
  const std::string &pattern() const { return pattern_; }
  const Embedding &witness() const { return witness_; }

private:
  std::string pattern_;
  Embedding witness_;
};

/// Throws ClassMembershipError when g is outside the class.
void require_member(const Graph &g, ClassId id);

} // namespace chib
