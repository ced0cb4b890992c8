#include "doctest.h"

#include <random>

#include "khoxotic/cp2.hpp"
#include "khoxotic/lee.hpp"

using namespace khoxotic;

namespace {

QVec random_chain(const Frame& f, std::mt19937_64& rng, int terms) {
  QVec v;
  const int n = f.diagram().size();
  for (int t = 0; t < terms; ++t) {
    const std::uint64_t vert = n ? rng() & ((std::uint64_t{1} << n) - 1) : 0;
    const int c = f.circles(vert).count;
    v[Gen{vert, rng() & ((std::uint64_t{1} << c) - 1)}] += static_cast<long>(rng() % 7) - 3;
  }
  return v;
}

bool is_zero(const QVec& v) {
  for (const auto& [g, c] : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("lee differential squares to zero") {
  std::mt19937_64 rng(3);
  for (const Diagram& d : {braid_closure(2, {1, 1, 1}), braid_closure(3, {1, -2, 1, -2}), torus_link(1, 1)}) {
    const Frame f(d);
    for (int t = 0; t < 5; ++t) CHECK(is_zero(lee_differential(f, lee_differential(f, random_chain(f, rng, 6)))));
  }
}

TEST_CASE("lee generators are cycles of the expected degree") {
  // s - 1 for knots: right trefoil s = 2, figure eight s = 0, unknot s = 0
  const Frame rt(braid_closure(2, {1, 1, 1})), lt(braid_closure(2, {-1, -1, -1}));
  const Frame fig8(braid_closure(3, {1, -2, 1, -2})), u(parse_pd("O[1]"));
  CHECK(is_zero(lee_differential(rt, lee_generator(rt))));
  CHECK(filtration_degree(rt, lee_generator(rt)) == 1);
  CHECK(filtration_degree(rt, lee_generator(rt, true)) == 1);
  CHECK(filtration_degree(lt, lee_generator(lt)) == -3);
  CHECK(filtration_degree(fig8, lee_generator(fig8)) == -1);
  CHECK(filtration_degree(u, lee_generator(u)) == -1);
}

TEST_CASE("filtration degree rejects non-cycles") {
  const Frame rt(braid_closure(2, {1, 1, 1}));
  QVec bad;
  bad[Gen{0, 0}] = 1;
  CHECK_THROWS(filtration_degree(rt, bad));
}

TEST_CASE("lee degree of the torus generator is grq") {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= n; ++p) {
      const Frame f(torus_link(p, n - p));
      CAPTURE(p);
      CAPTURE(n - p);
      CHECK(filtration_degree(f, lee_generator(f)) == grq(p, n - p));
    }
}
