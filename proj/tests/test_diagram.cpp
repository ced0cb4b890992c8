#include "doctest.h"

#include "khoxotic/diagram.hpp"
#include "khoxotic/families.hpp"

using namespace khoxotic;

namespace {
const char* kTrefoil = "X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n";
}

TEST_CASE("parse and serialize trefoil") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(d.size() == 3);
  CHECK(d.components().size() == 1);
  CHECK(parse_pd(serialize_pd(d)) == d);
  // this PD is the left-handed trefoil in the usual convention
  CHECK(std::abs(d.writhe()) == 3);
}

TEST_CASE("mirror flips writhe") {
  Diagram d = parse_pd(kTrefoil);
  Diagram m = mirror(d);
  CHECK(m.writhe() == -d.writhe());
  CHECK(mirror(m).writhe() == d.writhe());
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(parse_pd("X[1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4]\nX[1,5,6,7]"), ParseError);
}

TEST_CASE("torus links") {
  Diagram hopf = torus_link(1, 1);
  CHECK(hopf.components().size() == 2);
  CHECK(hopf.size() == 2);
  CHECK(hopf.linking_number(0, 1) == -1);
  Diagram t22 = torus_link(2, 0);
  CHECK(t22.components().size() == 2);
  CHECK(t22.linking_number(0, 1) == 1);
  for (int p = 1; p <= 3; ++p)
    for (int q = 0; q + p <= 4; ++q) {
      Diagram t = torus_link(p, q);
      const int n = p + q;
      CHECK(t.size() == n * (n - 1));
      CHECK(static_cast<int>(t.components().size()) == n);
    }
}

TEST_CASE("canonical form ignores labels") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(canonical_form(relabel(d)) == canonical_form(d));
  Diagram t = torus_link(2, 1);
  CHECK(canonical_form(relabel(t)) == canonical_form(t));
  CHECK(canonical_form(t) != canonical_form(mirror(t)));
}

TEST_CASE("pretzel components") {
  CHECK(pretzel({-3, 3, -3}).components().size() == 1);
  CHECK(pretzel({-3, 3, -3}).size() == 9);
  CHECK(pretzel({2, 2}).components().size() == 2);
}
