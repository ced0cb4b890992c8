#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "khoxotic/cobordism.hpp"

namespace khoxotic {

// Rational chains, ordered so that output is reproducible.
using QVec = std::map<Gen, mpq_class>;

// Lee's deformation over Q: the Khovanov differential plus the terms
// x*x -> 1 on merges and x -> 1 (x) 1 on splits, which raise q by 4.
QVec lee_differential(const Frame& f, const QVec& v);

// Lee cycle of the diagram's own orientation: Seifert circles labelled
// a = 1 + x and b = 1 - x so that circles meeting at a crossing differ.
// `opposite` swaps a and b (the cycle of the reversed orientation).
QVec lee_generator(const Frame& f, bool opposite = false);

// Largest k such that the class of z has a representative in the span of
// generators with q >= k. Throws if z is not a Lee cycle or is a boundary.
int filtration_degree(const Frame& f, const QVec& z);

}  // namespace khoxotic
