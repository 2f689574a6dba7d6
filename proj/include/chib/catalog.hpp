#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

/// Fixed small graphs referenced by the forbidden-pattern classes plus the
/// two extremal witnesses. Unknown names throw InvalidParameter.
///
///   kite      0-1 0-2 1-2 1-3 2-3 3-4   (diamond 0123, pendant 4 on 3)
///   hammer    0-1 0-2 1-2 2-3 3-4       (triangle 012, path 2-3-4)
///   p2_union_k3   edge 0-1, triangle 234
///   2k3           triangles 012 and 345
///   k1_union_k3   isolated 0, triangle 123
///   schlafli_complement  a_i = i-1, b_i = 5+i, c_ij = 12.. in (i<j) order
Graph named_graph(std::string_view name);

/// Every name accepted by named_graph, in catalog order.
const std::vector<std::string> &catalog_names();

} // namespace chib
