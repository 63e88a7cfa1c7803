#include "tlim/catalog.hpp"

namespace tlim::catalog {

SymbolSpec constant_one() { return SymbolSpec::laurent(0, {Complex{1.0}}); }

SymbolSpec linear_factors() {
  return SymbolSpec::linear_factors({Complex{0.5}}, {Complex{1.0 / 3.0}});
}

SymbolSpec exp_cosine() {
  return SymbolSpec::exp_laurent(-1, {Complex{0.4}, Complex{0.0}, Complex{0.4}});
}

std::vector<Entry> entries() {
  return {{"one", constant_one()},
          {"linear_factors", linear_factors()},
          {"exp_cosine", exp_cosine()}};
}

std::optional<SymbolSpec> find(std::string_view name) {
  for (auto& e : entries())
    if (e.name == name) return e.spec;
  return std::nullopt;
}

}  // namespace tlim::catalog
