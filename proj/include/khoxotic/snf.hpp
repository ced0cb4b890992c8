#pragma once

#include <vector>

#include <gmpxx.h>

namespace khoxotic {

// Dense integer matrix, row-major.
struct ZMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  ZMatrix() = default;
  ZMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static ZMatrix identity(int n);
  mpz_class& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool is_zero() const;
};

ZMatrix operator*(const ZMatrix& x, const ZMatrix& y);

// P * A * Q = D with D diagonal (first `rank` entries nonzero and positive).
// The diagonal is not forced into divisibility order; use invariant_factors
// for the canonical torsion list.
struct Smith {
  ZMatrix d;
  int rank = 0;
  std::vector<mpz_class> diag;
  ZMatrix p, p_inv, q, q_inv;
};

Smith smith(ZMatrix a, bool track_rows, bool track_cols);

// Canonical invariant factors > 1 of a list of nonzero diagonal entries.
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> diag);

}  // namespace khoxotic
