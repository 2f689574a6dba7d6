#include "chib/bounds.hpp"

namespace chib {

const std::vector<BindingFunction> &binding_registry() {
  static const std::vector<BindingFunction> table = {
      {ClassId::p3p2, "w(w+1)(w+2)/6",
       [](std::uint64_t w) { return w * (w + 1) * (w + 2) / 6; }},
      {ClassId::kite_free, "2w", [](std::uint64_t w) { return 2 * w; }},
      {ClassId::hammer_free, "w^2", [](std::uint64_t w) { return w * w; }},
      // 3w^2 + w = w(3w + 1) is always even.
      {ClassId::c5_free, "(3w^2+w)/2",
       [](std::uint64_t w) { return (3 * w * w + w) / 2; }},
      {ClassId::k4_free, "9", [](std::uint64_t) -> std::uint64_t { return 9; }},
      {ClassId::p2k3_free, "w^2", [](std::uint64_t w) { return w * w; }},
      {ClassId::k1k3_free, "2w", [](std::uint64_t w) { return 2 * w; }},
      {ClassId::triangle_free, "4", [](std::uint64_t) -> std::uint64_t { return 4; }},
  };
  return table;
}

const BindingFunction &binding_function(ClassId cls) {
  for (const auto &f : binding_registry())
    if (f.cls == cls) return f;
  throw InvalidParameter("no binding function for class " +
                         std::string(class_name(cls)));
}

std::uint64_t evaluate_bound(ClassId cls, std::uint64_t omega) {
  if (omega < 1) throw InvalidParameter("binding functions need omega >= 1");
  return binding_function(cls).evaluate(omega);
}

} // namespace chib
