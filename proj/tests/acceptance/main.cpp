#include <iostream>

#include "criteria.hpp"

int main() {
  const auto results = tlim::acceptance::run_all();
  return tlim::acceptance::print(std::cout, results) == 0 ? 0 : 1;
}
