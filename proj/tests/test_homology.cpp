#include "doctest.h"

#include <random>

#include "khoxotic/families.hpp"
#include "khoxotic/homology.hpp"
#include "khoxotic/jones.hpp"

using namespace khoxotic;

namespace {

Laurent euler(const KhHomology& kh) {
  Laurent out;
  for (const auto& [key, h] : kh.groups()) {
    if (h.free_rank == 0) continue;
    out[key.second] += (key.first % 2 == 0 ? 1 : -1) * h.free_rank;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<int> random_word(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace

TEST_CASE("unknot and empty") {
  KhHomology u(parse_pd("O[1]"), Window::all());
  CHECK(u.table() == "0 -1 1\n0 1 1\n");
  KhHomology e(Diagram{}, Window::all());
  CHECK(e.table() == "0 0 1\n");
}

TEST_CASE("right trefoil over Z") {
  KhHomology kh(braid_closure(2, {1, 1, 1}), Window::all());
  CHECK(kh.table() == "0 1 1\n0 3 1\n2 5 1\n3 7 0 2\n3 9 1\n");
}

TEST_CASE("figure eight over Z") {
  KhHomology kh(braid_closure(3, {1, -2, 1, -2}), Window::all());
  CHECK(kh.table() == "-2 -5 1\n-1 -3 0 2\n-1 -1 1\n0 -1 1\n0 1 1\n1 1 1\n2 3 0 2\n2 5 1\n");
}

TEST_CASE("hopf link") {
  KhHomology kh(braid_closure(2, {1, 1}), Window::all());
  CHECK(kh.table() == "0 0 1\n0 2 1\n2 4 1\n2 6 1\n");
}

TEST_CASE("euler characteristic is the jones polynomial") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int strands = 2 + trial % 3;
    Diagram d = braid_closure(strands, random_word(rng, strands, 3 + trial % 5));
    KhHomology kh(d, Window::all());
    CHECK(euler(kh) == jones_unnormalized(d));
  }
}

TEST_CASE("elimination agrees with the unreduced complex") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int strands = 2 + trial % 3;
    Diagram d = braid_closure(strands, random_word(rng, strands, 4 + trial % 4));
    CHECK(KhHomology(d, Window::all(), true).table() == KhHomology(d, Window::all(), false).table());
  }
}

TEST_CASE("windows give the same groups") {
  Diagram d = braid_closure(3, {1, 1, -2, 1, -2, -2});
  KhHomology full(d, Window::all());
  for (const auto& [key, h] : full.groups()) {
    KhHomology one(d, Window::at(key.first, key.second));
    const auto& g = one.group(key.first, key.second);
    CHECK(g.free_rank == h.free_rank);
    CHECK(g.torsion == h.torsion);
  }
  KhHomology w(d, Window{std::pair{0, 0}, std::nullopt});
  CHECK_THROWS(w.group(1, 1));
}

TEST_CASE("generators round trip through class coordinates") {
  Diagram d = braid_closure(3, {1, 1, 1, 2, -1, 2});
  KhHomology kh(d, Window::all());
  CircleCache cache(kh.complex().cube);
  for (const auto& [key, h] : kh.groups()) {
    for (int k = 0; k < h.free_rank; ++k) {
      SparseVec z = kh.lift_free(key.first, key.second, k);
      CHECK(apply_differential(kh.complex().cube, cache, z).empty());
      auto w = kh.free_coords(key.first, key.second, z);
      for (int t = 0; t < h.free_rank; ++t) CHECK(w[t] == (t == k ? 1 : 0));
      // adding a boundary does not change the class
      if (key.first - 1 >= kh.complex().gen_lo) {
        const Block& b = kh.complex().blocks.at(key.second);
        if (b.size(key.first - 1) > 0) {
          SparseVec e{{b.gens[key.first - 1 - b.i_lo][0], 1}};
          SparseVec z2 = z;
          for (const auto& [g, c] : apply_differential(kh.complex().cube, cache, e)) {
            z2[g] += 3 * c;
            if (z2[g] == 0) z2.erase(g);
          }
          CHECK(kh.free_coords(key.first, key.second, z2) == w);
        }
      }
    }
  }
}
