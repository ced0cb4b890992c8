#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "khoxotic/diagram.hpp"

namespace khoxotic {

// Sparse Laurent polynomial, exponent -> coefficient.
using Laurent = std::map<int, std::int64_t>;

Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator+(const Laurent& a, const Laurent& b);
std::string to_string(const Laurent& p, const std::string& var = "q");

// Unnormalized Kauffman bracket in A by the state sum, with <O> = -A^2-A^-2
// and <empty> = 1.
Laurent kauffman_bracket(const Diagram& d);

// Unnormalized Jones polynomial in q (value (q + 1/q) on the unknot),
// obtained from the bracket by writhe normalization and A^-2 = -q.
Laurent jones_unnormalized(const Diagram& d);

}  // namespace khoxotic
