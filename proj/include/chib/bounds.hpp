#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chib/patterns.hpp"

namespace chib {

/// chi-binding function of a class: chi(G) <= f(omega(G)) for members.
struct BindingFunction {
  ClassId cls;
  std::string formula;
  std::uint64_t (*evaluate)(std::uint64_t omega);
};

const std::vector<BindingFunction> &binding_registry();
const BindingFunction &binding_function(ClassId cls);

/// f(omega) in exact integer arithmetic; omega must be >= 1.
std::uint64_t evaluate_bound(ClassId cls, std::uint64_t omega);

} // namespace chib
