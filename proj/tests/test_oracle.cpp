#include "doctest.h"

#include <random>

#include "khoxotic/families.hpp"
#include "khoxotic/homology.hpp"
#include "khoxotic/jones.hpp"
#include "oracle.hpp"
#include "corpus.hpp"

using namespace khoxotic;

TEST_CASE("oracle reproduces the frozen tables") {
  // the oracle is checked against hand-known values before it is trusted
  CHECK(oracle::khovanov_table(parse_pd("O[1]")) == "0 -1 1\n0 1 1\n");
  CHECK(oracle::khovanov_table(braid_closure(2, {1, 1, 1})) == "0 1 1\n0 3 1\n2 5 1\n3 7 0 2\n3 9 1\n");
  CHECK(oracle::khovanov_table(braid_closure(2, {1, 1})) == "0 0 1\n0 2 1\n2 4 1\n2 6 1\n");
}

TEST_CASE("engine matches the brute-force oracle on small links") {
  for (const auto& [name, d] : corpus::small_links()) {
    CAPTURE(name);
    CHECK(KhHomology(d, Window::all()).table() == oracle::khovanov_table(d));
  }
}

TEST_CASE("engine matches the oracle on random braids") {
  std::mt19937 rng(23);
  for (int t = 0; t < 15; ++t) {
    const int strands = 2 + t % 3;
    std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
    std::vector<int> w;
    for (int k = 0; k < 3 + t % 5; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    const Diagram d = braid_closure(strands, w);
    CAPTURE(serialize_pd(d));
    CHECK(KhHomology(d, Window::all()).table() == oracle::khovanov_table(d));
  }
}

TEST_CASE("euler characteristic of the corpus is the jones polynomial") {
  const auto list = corpus::euler_corpus();
  CHECK(list.size() >= 20);
  for (const auto& [name, d] : list) {
    CAPTURE(name);
    CHECK(d.size() <= 12);
    CHECK(corpus::euler(KhHomology(d, Window::all())) == jones_unnormalized(d));
  }
}
