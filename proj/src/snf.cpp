#include "khoxotic/snf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace khoxotic {

ZMatrix ZMatrix::identity(int n) {
  ZMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ZMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const mpz_class& z) { return z == 0; });
}

ZMatrix operator*(const ZMatrix& x, const ZMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  ZMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const mpz_class& v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) out(i, j) += v * y(k, j);
    }
  return out;
}

namespace {

struct Ops {
  ZMatrix& a;
  bool rows, cols;
  ZMatrix &p, &pi, &q, &qi;

  // row_i -= f * row_t
  void row_sub(int i, int t, const mpz_class& f) {
    for (int j = 0; j < a.cols; ++j)
      if (a(t, j) != 0) a(i, j) -= f * a(t, j);
    if (rows) {
      for (int j = 0; j < p.cols; ++j)
        if (p(t, j) != 0) p(i, j) -= f * p(t, j);
      for (int r = 0; r < pi.rows; ++r)
        if (pi(r, i) != 0) pi(r, t) += f * pi(r, i);
    }
  }
  void row_swap(int i, int t) {
    if (i == t) return;
    for (int j = 0; j < a.cols; ++j) std::swap(a(i, j), a(t, j));
    if (rows) {
      for (int j = 0; j < p.cols; ++j) std::swap(p(i, j), p(t, j));
      for (int r = 0; r < pi.rows; ++r) std::swap(pi(r, i), pi(r, t));
    }
  }
  void row_neg(int i) {
    for (int j = 0; j < a.cols; ++j) a(i, j) = -a(i, j);
    if (rows) {
      for (int j = 0; j < p.cols; ++j) p(i, j) = -p(i, j);
      for (int r = 0; r < pi.rows; ++r) pi(r, i) = -pi(r, i);
    }
  }
  // col_j -= f * col_t
  void col_sub(int j, int t, const mpz_class& f) {
    for (int i = 0; i < a.rows; ++i)
      if (a(i, t) != 0) a(i, j) -= f * a(i, t);
    if (cols) {
      for (int i = 0; i < q.rows; ++i)
        if (q(i, t) != 0) q(i, j) -= f * q(i, t);
      for (int c = 0; c < qi.cols; ++c)
        if (qi(j, c) != 0) qi(t, c) += f * qi(j, c);
    }
  }
  void col_swap(int j, int t) {
    if (j == t) return;
    for (int i = 0; i < a.rows; ++i) std::swap(a(i, j), a(i, t));
    if (cols) {
      for (int i = 0; i < q.rows; ++i) std::swap(q(i, j), q(i, t));
      for (int c = 0; c < qi.cols; ++c) std::swap(qi(j, c), qi(t, c));
    }
  }
};

}  // namespace

Smith smith(ZMatrix a, bool track_rows, bool track_cols) {
  Smith s;
  if (track_rows) {
    s.p = ZMatrix::identity(a.rows);
    s.p_inv = ZMatrix::identity(a.rows);
  }
  if (track_cols) {
    s.q = ZMatrix::identity(a.cols);
    s.q_inv = ZMatrix::identity(a.cols);
  }
  Ops ops{a, track_rows, track_cols, s.p, s.p_inv, s.q, s.q_inv};
  const int limit = std::min(a.rows, a.cols);
  int t = 0;
  for (; t < limit; ++t) {
    // Pivot of least absolute value in the trailing block.
    int bi = -1, bj = -1;
    mpz_class best;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        const mpz_class& v = a(i, j);
        if (v == 0) continue;
        if (bi < 0 || abs(v) < best) {
          best = abs(v);
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
  found:
    if (bi < 0) break;
    ops.row_swap(bi, t);
    ops.col_swap(bj, t);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < a.rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class f;
        mpz_tdiv_q(f.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (f != 0) ops.row_sub(i, t, f);
        if (a(i, t) != 0) {
          ops.row_swap(i, t);
          clean = false;
        }
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class f;
        mpz_tdiv_q(f.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (f != 0) ops.col_sub(j, t, f);
        if (a(t, j) != 0) {
          ops.col_swap(j, t);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (a(t, t) < 0) ops.row_neg(t);
    s.diag.push_back(a(t, t));
  }
  s.rank = t;
  s.d = std::move(a);
  return s;
}

std::vector<mpz_class> invariant_factors(std::vector<mpz_class> diag) {
  std::vector<mpz_class> v;
  for (auto& d : diag)
    if (abs(d) > 1) v.push_back(abs(d));
  // Repeated (gcd, lcm) replacement sorts the list into divisibility order.
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      mpz_class g = gcd(v[i], v[j]);
      mpz_class l = lcm(v[i], v[j]);
      v[i] = g;
      v[j] = l;
    }
  std::vector<mpz_class> out;
  for (auto& x : v)
    if (x > 1) out.push_back(x);
  return out;
}

}  // namespace khoxotic
