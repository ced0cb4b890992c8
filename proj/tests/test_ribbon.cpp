#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "khoxotic/ribbon.hpp"

using namespace khoxotic;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Functional fn(std::vector<long> v) {
  Functional f;
  f.i = 0;
  f.j = -1;
  for (long x : v) f.values.emplace_back(x);
  return f;
}

}  // namespace

TEST_CASE("shipped assets are consistent") {
  const Diagram j1 = parse_pd(slurp("j1.pd"));
  CHECK(j1.size() == 15);
  CHECK(j1.components().size() == 1);
  const TwistTemplate t = parse_template(slurp("jk.template"));
  CHECK(t.min_k == 1);
  CHECK(t.instantiate(1) == j1);
  CHECK(t.instantiate(2).size() == 25);

  const auto j = nlohmann::json::parse(slurp("jk.template"));
  const auto s = parse_bands(slurp("sigma1.bands"), TEST_DATA_DIR);
  const auto sp = parse_bands(slurp("sigma1p.bands"), TEST_DATA_DIR);
  CHECK(s.boundary == j1);
  CHECK(sp.boundary == j1);
  // the band files are what the template produces
  const auto pairs = [&](const char* key) { return j["disks"][key].get<std::vector<std::pair<int, int>>>(); };
  CHECK(pretzel_disk(t, 1, pairs("sigma"), "x").bands == s.bands);
  CHECK(pretzel_disk(t, 1, pairs("sigma_prime"), "x").bands == sp.bands);

  const Diagram j0u = parse_pd(slurp("j0u.pd"));
  CHECK(j0u.size() == 9);
  CHECK(j0u.components().size() == 2);
}

TEST_CASE("band files round trip and reject twists") {
  const auto s = parse_bands(slurp("sigma1.bands"), TEST_DATA_DIR);
  const auto again = parse_bands(serialize_bands(s));
  CHECK(again.boundary == s.boundary);
  CHECK(again.bands == s.bands);
  CHECK(again.caps == s.caps);
  CHECK_THROWS_AS(parse_bands(R"({"version":1,"boundary":"O[1]","bands":[{"arcs":[1,1],"half_twists":1}],"caps":2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_bands(R"({"version":2,"boundary":"O[1]","bands":[],"caps":1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bands("{"), std::invalid_argument);
}

TEST_CASE("simplifier clears an unlink diagram") {
  // s1 s2 s1 = s2 s1 s2, so this word is trivial, but only after an R3
  auto m = simplify_to_unlink(braid_closure(3, {1, 2, 1, -2, -1, -2}));
  REQUIRE(m.has_value());
  CHECK(m->back().size() == 0);
  CHECK(m->back().components().size() == 3);
  CHECK_FALSE(first_invalid_move(*m).has_value());
  // a trefoil cannot be simplified away
  CHECK_FALSE(simplify_to_unlink(braid_closure(2, {1, 1, 1})).has_value());
}

TEST_CASE("ribbon movies are disks") {
  const auto s = parse_bands(slurp("sigma1.bands"), TEST_DATA_DIR);
  const Movie m = bands_to_movie(mirror(s));
  CHECK(m.euler_characteristic() == 1);
  CHECK(m.back().empty());
  CHECK_FALSE(first_invalid_move(m).has_value());
  BandPresentation wrong = s;
  wrong.caps = 2;
  CHECK_THROWS_AS(bands_to_movie(wrong), MoveError);
}

TEST_CASE("the two disks of J_1 are told apart after mirroring") {
  const auto s = mirror(parse_bands(slurp("sigma1.bands"), TEST_DATA_DIR));
  const auto sp = mirror(parse_bands(slurp("sigma1p.bands"), TEST_DATA_DIR));
  const KhHomology kh(s.boundary, Window::at(0, -1));
  const auto& g = kh.group(0, -1);
  CHECK(g.free_rank == 7);
  CHECK(g.torsion == std::vector<mpz_class>{2, 2});
  const Functional f = disk_functional(s, kh);
  const Functional h = disk_functional(sp, kh);
  CHECK(f.values == fn({0, 1, 0, 0, 0, 0, 0}).values);
  CHECK(h.values == fn({0, 0, 0, 0, 1, 0, 0}).values);
  const Verdict v = distinguish(f, h);
  CHECK(v.distinct);
  CHECK_FALSE(distinguish(f, f).distinct);
}

TEST_CASE("one-band disks of P(-3,3,-3) differ") {
  TwistTemplate t;
  t.base_columns = {-3, 3, -3};
  t.twist_per_k = {0, 0, 0};
  const auto a = pretzel_disk(t, 0, {{1, 2}}, "a");
  const auto b = pretzel_disk(t, 0, {{2, 3}}, "b");
  CHECK(a.caps == 2);
  const KhHomology kh(a.boundary, Window::at(0, -1));
  CHECK(distinguish(disk_functional(a, kh), disk_functional(b, kh)).distinct);
}
