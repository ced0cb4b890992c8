#include "doctest.h"

#include <fstream>
#include <sstream>

#include "khoxotic/cp2.hpp"

using namespace khoxotic;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BandPresentation trivial_disk() {
  BandPresentation b;
  b.name = "trivial";
  b.boundary = parse_pd("O[1]");
  b.caps = 1;
  return b;
}

}  // namespace

TEST_CASE("grq table") {
  CHECK(grq(1, 0) == -1);
  CHECK(grq(0, 1) == -1);
  CHECK(grq(2, 0) == 0);
  CHECK(grq(1, 1) == -2);
  CHECK(grq(3, 0) == 3);
  CHECK(grq(2, 1) == -3);
  CHECK(grq(4, 0) == 8);
  CHECK(grq(2, 2) == -4);
}

TEST_CASE("infeasible torus links are refused") {
  CHECK_THROWS_AS(check_torus_feasible(3, 3), InfeasibleError);
  CHECK_THROWS_AS(check_torus_feasible(3, 2), InfeasibleError);
  CHECK_NOTHROW(check_torus_feasible(2, 2));
}

TEST_CASE("torus slices are Z at grq and vanish below") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      CAPTURE(p);
      CAPTURE(q);
      const auto kh = torus_slice(p, q);
      const auto& g = kh->group(0, grq(p, q));
      CHECK(g.free_rank == 1);
      CHECK(g.torsion.empty());
      for (const auto& [key, h] : kh->groups())
        if (key.first == 0 && key.second < grq(p, q)) CHECK(h.is_zero());
    }
}

TEST_CASE("two-saddle maps are isomorphisms") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
    CAPTURE(p);
    CAPTURE(q);
    const TwoSaddle t = two_saddle_map(p, q);
    CHECK(abs(t.value) == 1);
    CHECK(t.movie.frames.front() == torus_link(p, q));
    CHECK(t.movie.back() == torus_link(p + 1, q + 1));
  }
  CHECK_THROWS(two_saddle_map(0, 0));
  CHECK(stabilization_map(1, 0, 0) == 1);
  CHECK(abs(stabilization_map(0, 1, 1)) == 1);
}

TEST_CASE("cp2 presentations round trip") {
  const CP2SurfacePresentation s = blow_up(trivial_disk());
  const CP2SurfacePresentation t = parse_cp2(serialize_cp2(s));
  CHECK(t.p == 1);
  CHECK(t.q == 0);
  CHECK(t.alpha() == 1);
  CHECK(t.neck.frames == s.neck.frames);
  CHECK_THROWS(parse_cp2("[]"));
}

TEST_CASE("blowing up the trivial disk gives the counit") {
  const BandPresentation b = trivial_disk();
  const KhHomology kh(b.boundary, Window::at(0, -1));
  const Functional f = cp2_functional(blow_up(b), kh);
  CHECK(f.values == std::vector<mpz_class>{1});
  CHECK(disk_functional(b, kh).values == f.values);
  CP2SurfacePresentation wrong = blow_up(b);
  wrong.p = 2;
  CHECK_THROWS_AS(cp2_functional(wrong, kh), MapError);
}

TEST_CASE("blow-up of a ribbon disk keeps its functional") {
  const auto s = mirror(parse_bands(slurp("sigma1.bands"), TEST_DATA_DIR));
  const KhHomology kh(s.boundary, Window::at(0, -1));
  CHECK(cp2_functional(blow_up(s), kh).values == disk_functional(s, kh).values);
}

TEST_CASE("stabilising the neck keeps the functional") {
  // blow-up followed by a two-saddle map lands in T(3,3)_{2,1}
  const auto s = mirror(parse_bands(slurp("sigma1p.bands"), TEST_DATA_DIR));
  const KhHomology kh(s.boundary, Window::at(0, -1));
  CP2SurfacePresentation c = blow_up(s);
  c.neck.append(two_saddle_map(1, 0).movie);
  c.p = 2;
  c.q = 1;
  CHECK(cp2_functional(c, kh).values == disk_functional(s, kh).values);
}

TEST_CASE("the strand the unknot splits from does not matter") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}}) {
    const int strands = static_cast<int>(torus_link(p, q).arcs().size());
    for (int a = 0; a < strands; ++a) {
      CAPTURE(a);
      CHECK(abs(two_saddle_map(p, q, a).value) == 1);
    }
  }
}

TEST_CASE("golden Kh^{0,-1} of J_1") {
  // recorded from this engine; the unmirrored knot, not m(J_1)
  const KhHomology kh(parse_pd(slurp("j1.pd")), Window::at(0, -1));
  std::ifstream in(std::string(TEST_GOLDEN_DIR) + "/j1_kh_0_-1.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(kh.table() == ss.str());
  const KhHomology mkh(mirror(parse_pd(slurp("j1.pd"))), Window::at(0, -1));
  std::ifstream min(std::string(TEST_GOLDEN_DIR) + "/mj1_kh_0_-1.txt");
  std::stringstream ms;
  ms << min.rdbuf();
  CHECK(mkh.table() == ms.str());
}
