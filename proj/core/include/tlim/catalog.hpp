#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tlim/symbol.hpp"

namespace tlim::catalog {

// phi = 1.
SymbolSpec constant_one();
// phi = (1 - a z)(1 - b / z), a = 1/2, b = 1/3.
SymbolSpec linear_factors();
// phi = exp(t (z + 1/z)), t = 0.4.
SymbolSpec exp_cosine();

struct Entry {
  std::string_view name;
  SymbolSpec spec;
};

std::vector<Entry> entries();
std::optional<SymbolSpec> find(std::string_view name);

}  // namespace tlim::catalog
