#include "khoxotic/complex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace khoxotic {

int Block::size(int i) const {
  const int k = i - i_lo;
  if (k < 0 || k >= degrees()) return 0;
  return static_cast<int>(gens[k].size());
}

int Block::find(int i, const Gen& g) const {
  const int k = i - i_lo;
  if (k < 0 || k >= degrees()) return -1;
  auto it = index[k].find(g);
  return it == index[k].end() ? -1 : it->second;
}

std::size_t Complex::generator_count() const {
  std::size_t n = 0;
  for (const auto& [j, b] : blocks)
    for (const auto& g : b.gens) n += g.size();
  return n;
}

namespace {

// Calls f(v) for every n-bit word with s bits set, in increasing order.
template <class F>
void for_each_weight(int n, int s, F&& f) {
  if (s < 0 || s > n) return;
  if (s == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t v = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    f(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

template <class F>
void for_each_subset(int c, int t, F&& f) {
  for_each_weight(c, t, f);
}

std::pair<int, int> generated_range(const CubeData& cube, const Window& w) {
  const int lo = -cube.n_minus, hi = cube.n_plus;
  if (!w.i) return {lo, hi};
  return {std::max(w.i->first - 1, lo), std::min(w.i->second + 1, hi)};
}

}  // namespace

Complex build_complex(const CubeData& cube, const Window& window) {
  const int n = cube.size();
  if (n > 62) throw std::invalid_argument("build_complex: too many crossings");
  Complex cx;
  cx.cube = cube;
  const auto [glo, ghi] = generated_range(cube, window);
  cx.gen_lo = glo;
  cx.gen_hi = ghi;
  cx.valid_lo = (glo == -cube.n_minus) ? glo : glo + 1;
  cx.valid_hi = (ghi == cube.n_plus) ? ghi : ghi - 1;
  if (glo > ghi) return cx;
  const int ndeg = ghi - glo + 1;
  CircleCache cache(cx.cube);

  for (int i = glo; i <= ghi; ++i) {
    const int s = i + cube.n_minus;
    for_each_weight(n, s, [&](std::uint64_t v) {
      const Circles& circ = cache.at(v);
      const int c = circ.count;
      for (int t = 0; t <= c; ++t) {
        const int j = qdeg(cube, v, (t == 0 ? 0 : (std::uint64_t{1} << t) - 1), c);
        if (!window.has_j(j)) continue;
        auto [it, fresh] = cx.blocks.try_emplace(j);
        Block& b = it->second;
        if (fresh) {
          b.j = j;
          b.i_lo = glo;
          b.gens.resize(ndeg);
          b.index.resize(ndeg);
          b.d.resize(ndeg);
        }
        auto& list = b.gens[i - glo];
        for_each_subset(c, t, [&](std::uint64_t mask) { list.push_back({v, mask}); });
      }
    });
  }

  for (auto& [j, b] : cx.blocks) {
    for (int k = 0; k < ndeg; ++k) {
      std::sort(b.gens[k].begin(), b.gens[k].end());
      b.index[k].reserve(b.gens[k].size());
      for (int x = 0; x < static_cast<int>(b.gens[k].size()); ++x) b.index[k].emplace(b.gens[k][x], x);
    }
    for (int k = 0; k + 1 < ndeg; ++k) {
      auto& cols = b.d[k];
      cols.resize(b.gens[k].size());
      for (size_t x = 0; x < b.gens[k].size(); ++x) {
        differential(cx.cube, cache, b.gens[k][x], [&](const Gen& tgt, i64 coef) {
          auto it = b.index[k + 1].find(tgt);
          if (it == b.index[k + 1].end()) throw std::logic_error("differential leaves its block");
          cols[x].push_back({it->second, coef});
        });
        // Distinct edges reach distinct generators, so nothing to merge.
        std::sort(cols[x].begin(), cols[x].end());
      }
    }
  }
  return cx;
}

double estimate_generators(const CubeData& cube, const Window& window) {
  const int n = cube.size();
  const auto [glo, ghi] = generated_range(cube, window);
  CircleCache cache(cube);
  std::mt19937_64 rng(12345);
  double total = 0;
  for (int i = glo; i <= ghi; ++i) {
    const int s = i + cube.n_minus;
    const double count = std::exp(std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0));
    const int samples = 24;
    double acc = 0;
    for (int r = 0; r < samples; ++r) {
      std::vector<int> idx(n);
      for (int k = 0; k < n; ++k) idx[k] = k;
      std::shuffle(idx.begin(), idx.end(), rng);
      std::uint64_t v = 0;
      for (int k = 0; k < s; ++k) v |= std::uint64_t{1} << idx[k];
      const int c = cache.compute(v).count;
      double labelings = 0;
      for (int t = 0; t <= c; ++t) {
        const int j = qdeg(cube, v, (t == 0 ? 0 : (std::uint64_t{1} << t) - 1), c);
        if (window.has_j(j)) labelings += std::exp(std::lgamma(c + 1.0) - std::lgamma(t + 1.0) - std::lgamma(c - t + 1.0));
      }
      acc += labelings;
    }
    total += count * acc / samples;
  }
  return total;
}

std::vector<i64> to_dense(const Block& b, int i, const SparseVec& v) {
  std::vector<i64> out(b.size(i), 0);
  for (const auto& [g, c] : v) {
    const int x = b.find(i, g);
    if (x < 0) throw std::invalid_argument("vector has a generator outside the block");
    out[x] = add_checked(out[x], c);
  }
  return out;
}

SparseVec to_sparse(const Block& b, int i, const std::vector<i64>& v) {
  SparseVec out;
  const int k = i - b.i_lo;
  for (size_t x = 0; x < v.size(); ++x)
    if (v[x] != 0) out[b.gens[k][x]] = v[x];
  return out;
}

}  // namespace khoxotic
