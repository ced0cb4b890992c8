#pragma once

// Named diagrams shared by the unit tests and the acceptance run.

#include <string>
#include <utility>
#include <vector>

#include "khoxotic/families.hpp"
#include "khoxotic/homology.hpp"
#include "khoxotic/jones.hpp"

namespace corpus {

using Named = std::vector<std::pair<std::string, khoxotic::Diagram>>;

inline khoxotic::Laurent euler(const khoxotic::KhHomology& kh) {
  khoxotic::Laurent out;
  for (const auto& [key, h] : kh.groups()) {
    if (h.free_rank == 0) continue;
    out[key.second] += (key.first % 2 == 0 ? 1 : -1) * h.free_rank;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Named small_links() {
  using khoxotic::braid_closure;
  return {
      {"unknot", khoxotic::parse_pd("O[1]")},
      {"kinked unknot", braid_closure(2, {1})},
      {"hopf+", braid_closure(2, {1, 1})},
      {"hopf-", braid_closure(2, {-1, -1})},
      {"right trefoil", braid_closure(2, {1, 1, 1})},
      {"left trefoil", braid_closure(2, {-1, -1, -1})},
      {"figure eight", braid_closure(3, {1, -2, 1, -2})},
  };
}

inline Named euler_corpus() {
  using khoxotic::braid_closure;
  using khoxotic::pretzel;
  using khoxotic::torus_link;
  using khoxotic::mirror;
  Named out = {
      {"T(2,5)", braid_closure(2, {1, 1, 1, 1, 1})},
      {"T(2,7)", braid_closure(2, std::vector<int>(7, 1))},
      {"T(2,9)", braid_closure(2, std::vector<int>(9, 1))},
      {"T(2,11)", braid_closure(2, std::vector<int>(11, -1))},
      {"T(2,6) link", braid_closure(2, std::vector<int>(6, 1))},
      {"T(3,4)", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})},
      {"T(3,5)", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2})},
      {"5_2", braid_closure(3, {1, 1, 1, 2, -1, 2})},
      {"6_2", braid_closure(3, {1, 1, 1, -2, 1, -2})},
      {"6_3", braid_closure(3, {1, 1, -2, 1, -2, -2})},
      {"borromean", braid_closure(3, {1, -2, 1, -2, 1, -2})},
      {"4-braid", braid_closure(4, {1, 2, 3, -1, 2, -3, 1, 2})},
      {"P(-2,3,7)", pretzel({-2, 3, 7})},
      {"P(3,-3,3)", pretzel({3, -3, 3})},
      {"P(-3,3,-3)", pretzel({-3, 3, -3})},
      {"P(1,-1,1,-1,1)", pretzel({1, -1, 1, -1, 1})},
      {"P(3,-3,3,-3)", pretzel({3, -3, 3, -3})},
      {"P(2,-3,5)", pretzel({2, -3, 5})},
      {"T(2,2)_{1,1}", torus_link(1, 1)},
      {"T(3,3)_{2,1}", torus_link(2, 1)},
      {"T(3,3)_{3,0}", torus_link(3, 0)},
      {"T(4,4)_{2,2}", torus_link(2, 2)},
      {"T(4,4)_{3,1}", torus_link(3, 1)},
      {"reversed T(2,4)", braid_closure(2, {1, 1, 1, 1}, {1})},
  };
  out.push_back({"m(5_2)", mirror(out[7].second)});
  out.push_back({"m(P(-2,3,7))", mirror(out[12].second)});
  return out;
}

}  // namespace corpus
