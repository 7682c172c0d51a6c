#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "idemcodes/group.hpp"

namespace idemcodes {

inline Group load_fixture_group(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  if (!in.good()) throw std::runtime_error("missing fixture " + name);
  std::vector<int> vals;
  int v;
  while (in >> v) vals.push_back(v);
  size_t n = 1;
  while (n * n < vals.size()) ++n;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) table[i][j] = vals[i * n + j];
  return group_from_cayley(table, "cayley(" + name + ")");
}

inline Group load_q8() { return load_fixture_group("q8.tab"); }

}  // namespace idemcodes
