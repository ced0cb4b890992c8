#include "khoxotic/reduce.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace khoxotic {

Reduction::Reduction(const Block& b, bool reduce) : i_lo_(b.i_lo) {
  const int nd = b.degrees();
  offset_.assign(nd + 1, 0);
  for (int k = 0; k < nd; ++k) offset_[k + 1] = offset_[k] + static_cast<int>(b.gens[k].size());
  const int total = offset_[nd];
  deg_.resize(total);
  for (int k = 0; k < nd; ++k)
    for (int g = offset_[k]; g < offset_[k + 1]; ++g) deg_[g] = k;
  out_.resize(total);
  in_.resize(total);
  alive_.assign(total, 1);
  for (int k = 0; k + 1 < nd; ++k) {
    if (b.d[k].empty()) continue;
    for (size_t x = 0; x < b.d[k].size(); ++x) {
      const int gx = offset_[k] + static_cast<int>(x);
      for (const auto& [row, coef] : b.d[k][x]) {
        const int gy = offset_[k + 1] + row;
        out_[gx].push_back({gy, coef});
        in_[gy].push_back({gx, coef});
      }
    }
  }
  for (auto& r : out_) std::sort(r.begin(), r.end());
  for (auto& r : in_) std::sort(r.begin(), r.end());
  if (reduce) eliminate_all();
  surv_.assign(nd, {});
  for (int g = 0; g < total; ++g)
    if (alive_[g]) surv_[deg_[g]].push_back(g - offset_[deg_[g]]);
}

i64 Reduction::get(const Row& r, int key) {
  auto it = std::lower_bound(r.begin(), r.end(), std::pair<int, i64>{key, INT64_MIN});
  return (it != r.end() && it->first == key) ? it->second : 0;
}

namespace {

void row_add(std::vector<std::pair<int, i64>>& r, int key, i64 delta) {
  auto it = std::lower_bound(r.begin(), r.end(), std::pair<int, i64>{key, INT64_MIN});
  if (it != r.end() && it->first == key) {
    it->second = add_checked(it->second, delta);
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, {key, delta});
  }
}

void row_erase(std::vector<std::pair<int, i64>>& r, int key) {
  auto it = std::lower_bound(r.begin(), r.end(), std::pair<int, i64>{key, INT64_MIN});
  if (it != r.end() && it->first == key) r.erase(it);
}

}  // namespace

void Reduction::add_entry(int a, int b, i64 delta) {
  if (delta == 0) return;
  row_add(out_[a], b, delta);
  row_add(in_[b], a, delta);
}

void Reduction::eliminate_all() {
  using Cand = std::tuple<i64, int, int>;
  std::priority_queue<Cand, std::vector<Cand>, std::greater<>> pq;
  auto cost = [&](int x, int y) {
    return static_cast<i64>(in_[y].size() - 1) * static_cast<i64>(out_[x].size() - 1);
  };
  auto push_best = [&](int x) {
    if (!alive_[x]) return;
    int by = -1;
    i64 bc = 0;
    for (const auto& [y, c] : out_[x]) {
      if (c != 1 && c != -1) continue;
      const i64 k = cost(x, y);
      if (by < 0 || k < bc) {
        by = y;
        bc = k;
      }
    }
    if (by >= 0) pq.push({bc, x, by});
  };
  for (int x = 0; x < static_cast<int>(out_.size()); ++x)
    if (!out_[x].empty()) push_best(x);

  while (!pq.empty()) {
    const auto [k, x, y] = pq.top();
    pq.pop();
    if (!alive_[x]) continue;
    const i64 u = alive_[y] ? get(out_[x], y) : 0;
    if ((u != 1 && u != -1) || cost(x, y) != k) {
      push_best(x);
      continue;
    }
    Step st{x, y, u, {}, {}};
    for (const auto& e : out_[x])
      if (e.first != y) st.dx.push_back(e);
    for (const auto& e : in_[y])
      if (e.first != x) st.col_y.push_back(e);
    for (const auto& [a, alpha] : st.col_y) {
      const i64 f = mul_checked(alpha, u);
      for (const auto& [b, beta] : st.dx) add_entry(a, b, -mul_checked(f, beta));
    }
    for (int g : {x, y}) {
      for (const auto& e : out_[g]) row_erase(in_[e.first], g);
      for (const auto& e : in_[g]) row_erase(out_[e.first], g);
      out_[g].clear();
      in_[g].clear();
      alive_[g] = 0;
    }
    for (const auto& e : st.col_y) push_best(e.first);
    log_.push_back(std::move(st));
  }
}

ZMatrix Reduction::reduced_d(int i) const {
  const int k = i - i_lo_;
  if (k < 0 || k + 1 >= degrees()) {
    const int cols = (k >= 0 && k < degrees()) ? static_cast<int>(surv_[k].size()) : 0;
    const int rows = (k + 1 >= 0 && k + 1 < degrees()) ? static_cast<int>(surv_[k + 1].size()) : 0;
    return ZMatrix(rows, cols);
  }
  const auto& cols = surv_[k];
  const auto& rows = surv_[k + 1];
  ZMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    const int g = offset_[k] + cols[c];
    for (const auto& [t, coef] : out_[g]) {
      const int local = t - offset_[k + 1];
      const auto it = std::lower_bound(rows.begin(), rows.end(), local);
      m(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = static_cast<long>(coef);
    }
  }
  return m;
}

std::vector<i64> Reduction::to(int i, const std::vector<i64>& v_in) const {
  const int k = i - i_lo_;
  if (k < 0 || k >= degrees()) return {};
  std::vector<i64> v = v_in;
  const int off = offset_[k];
  if (static_cast<int>(v.size()) != offset_[k + 1] - off) throw std::invalid_argument("Reduction::to: size mismatch");
  for (const Step& st : log_) {
    if (deg_[st.x] == k) {
      v[st.x - off] = 0;
    } else if (deg_[st.y] == k) {
      const i64 cy = v[st.y - off];
      if (cy == 0) continue;
      const i64 f = mul_checked(cy, st.u);
      for (const auto& [b, beta] : st.dx) v[b - off] = add_checked(v[b - off], -mul_checked(f, beta));
      v[st.y - off] = 0;
    }
  }
  std::vector<i64> out;
  out.reserve(surv_[k].size());
  for (int s : surv_[k]) out.push_back(v[s]);
  return out;
}

std::vector<i64> Reduction::from(int i, const std::vector<i64>& w_in) const {
  const int k = i - i_lo_;
  if (k < 0 || k >= degrees()) return {};
  if (w_in.size() != surv_[k].size()) throw std::invalid_argument("Reduction::from: size mismatch");
  const int off = offset_[k];
  std::vector<i64> w(offset_[k + 1] - off, 0);
  for (size_t s = 0; s < surv_[k].size(); ++s) w[surv_[k][s]] = w_in[s];
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    const Step& st = *it;
    if (deg_[st.x] != k) continue;
    i64 s = 0;
    for (const auto& [a, alpha] : st.col_y)
      if (w[a - off] != 0) s = add_checked(s, mul_checked(w[a - off], alpha));
    if (s != 0) w[st.x - off] = -mul_checked(st.u, s);
  }
  return w;
}

}  // namespace khoxotic
