#include "doctest.h"

#include "khoxotic/families.hpp"
#include "khoxotic/jones.hpp"

using namespace khoxotic;

TEST_CASE("jones of unknot and trefoils") {
  Diagram u = parse_pd("O[1]");
  CHECK(jones_unnormalized(u) == Laurent{{-1, 1}, {1, 1}});
  // positive trefoil as braid closure: q + q^3 + q^5 - q^9
  Diagram rt = braid_closure(2, {1, 1, 1});
  CHECK(rt.writhe() == 3);
  CHECK(jones_unnormalized(rt) == Laurent{{1, 1}, {3, 1}, {5, 1}, {9, -1}});
  CHECK(jones_unnormalized(mirror(rt)) == Laurent{{-1, 1}, {-3, 1}, {-5, 1}, {-9, -1}});
}

TEST_CASE("jones is multiplicative under disjoint union") {
  Diagram rt = braid_closure(2, {1, 1, 1});
  Diagram u = parse_pd("O[1]");
  CHECK(jones_unnormalized(disjoint_union(rt, u)) == jones_unnormalized(rt) * jones_unnormalized(u));
}

TEST_CASE("jones ignores reidemeister moves in braids") {
  const Laurent trefoil = jones_unnormalized(braid_closure(2, {1, 1, 1}));
  // Markov stabilization
  CHECK(jones_unnormalized(braid_closure(3, {1, 1, 1, 2})) == trefoil);
  CHECK(jones_unnormalized(braid_closure(3, {1, 1, 1, -2})) == trefoil);
  // cancelling pair; the third strand is a split unknot
  CHECK(jones_unnormalized(braid_closure(3, {1, 2, -2, 1, 1})) == trefoil * Laurent{{-1, 1}, {1, 1}});
  // figure eight is amphichiral
  const Laurent fig8 = jones_unnormalized(braid_closure(3, {1, -2, 1, -2}));
  CHECK(jones_unnormalized(mirror(braid_closure(3, {1, -2, 1, -2}))) == fig8);
}
