#include "khoxotic/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace khoxotic {

namespace {

std::vector<mpz_class> mul(const ZMatrix& m, const std::vector<mpz_class>& v) {
  std::vector<mpz_class> out(m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<mpz_class> widen(const std::vector<i64>& z) {
  std::vector<mpz_class> out;
  out.reserve(z.size());
  for (i64 x : z) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

bool HomologyGroup::is_cycle(const std::vector<i64>& z) const {
  if (static_cast<int>(z.size()) != dim) return false;
  for (const auto& v : mul(d_out, widen(z)))
    if (v != 0) return false;
  return true;
}

std::vector<mpz_class> HomologyGroup::coords(const std::vector<i64>& z) const {
  if (!is_cycle(z)) throw std::invalid_argument("class coordinates requested for a non-cycle");
  return mul(p2, mul(kernel, widen(z)));
}

std::vector<mpz_class> HomologyGroup::free_coords(const std::vector<i64>& z) const {
  auto w = coords(z);
  return {w.begin() + rank2(), w.end()};
}

std::vector<i64> HomologyGroup::free_generator(int k) const {
  std::vector<i64> z(dim);
  for (int r = 0; r < dim; ++r) z[r] = to_i64(gens(r, rank2() + k));
  return z;
}

HomologyGroup compute_group(const Reduction& red, int i, int j) {
  HomologyGroup h;
  h.i = i;
  h.j = j;
  const ZMatrix a = red.reduced_d(i);
  const ZMatrix b = red.reduced_d(i - 1);
  const int n = a.cols;
  h.dim = n;
  h.d_out = a;
  const Smith s1 = smith(a, false, true);
  const int r = s1.rank;
  h.kernel = ZMatrix(n - r, n);
  for (int row = r; row < n; ++row)
    for (int c = 0; c < n; ++c) h.kernel(row - r, c) = s1.q_inv(row, c);
  const ZMatrix m = h.kernel * b;
  const Smith s2 = smith(m, true, false);
  h.p2 = s2.p;
  h.diag2 = s2.diag;
  h.free_rank = (n - r) - s2.rank;
  h.torsion = invariant_factors(s2.diag);
  ZMatrix qk(n, n - r);
  for (int row = 0; row < n; ++row)
    for (int c = r; c < n; ++c) qk(row, c - r) = s1.q(row, c);
  h.gens = qk * s2.p_inv;
  return h;
}

KhHomology::KhHomology(const CubeData& cube, const Window& window, bool reduce)
    : cx_(build_complex(cube, window)), window_(window) {
  for (const auto& [j, block] : cx_.blocks) {
    auto red = std::make_unique<Reduction>(block, reduce);
    for (int i = cx_.valid_lo; i <= cx_.valid_hi; ++i) {
      if (window.i && (i < window.i->first || i > window.i->second)) continue;
      groups_.emplace(std::pair{i, j}, compute_group(*red, i, j));
    }
    red_.emplace(j, std::move(red));
  }
}

bool KhHomology::covers(int i, int j) const {
  if (i < cx_.valid_lo || i > cx_.valid_hi) return false;
  if (window_.i && (i < window_.i->first || i > window_.i->second)) return false;
  return window_.has_j(j);
}

const HomologyGroup& KhHomology::group(int i, int j) const {
  if (!covers(i, j))
    throw std::out_of_range("bidegree (" + std::to_string(i) + "," + std::to_string(j) + ") outside the computed window");
  auto it = groups_.find({i, j});
  return it == groups_.end() ? empty_ : it->second;
}

SparseVec KhHomology::lift_free(int i, int j, int k) const {
  const HomologyGroup& h = group(i, j);
  if (k < 0 || k >= h.free_rank) throw std::out_of_range("free generator index");
  const Reduction& red = *red_.at(j);
  return to_sparse(cx_.blocks.at(j), i, red.from(i, h.free_generator(k)));
}

std::vector<mpz_class> KhHomology::class_coords(int i, int j, const SparseVec& cycle) const {
  const HomologyGroup& h = group(i, j);
  auto bit = cx_.blocks.find(j);
  if (bit == cx_.blocks.end()) {
    if (!cycle.empty()) throw std::invalid_argument("cycle in an empty bidegree");
    return {};
  }
  const Reduction& red = *red_.at(j);
  return h.coords(red.to(i, to_dense(bit->second, i, cycle)));
}

std::vector<mpz_class> KhHomology::free_coords(int i, int j, const SparseVec& cycle) const {
  const HomologyGroup& h = group(i, j);
  auto w = class_coords(i, j, cycle);
  if (w.empty()) return std::vector<mpz_class>(h.free_rank);
  return {w.begin() + h.rank2(), w.end()};
}

std::string KhHomology::table() const {
  std::ostringstream out;
  for (const auto& [key, h] : groups_) {
    if (h.is_zero()) continue;
    out << key.first << " " << key.second << " " << h.free_rank;
    for (const auto& t : h.torsion) out << " " << t.get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace khoxotic
