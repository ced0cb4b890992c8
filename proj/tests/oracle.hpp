#pragma once

// Brute-force Khovanov homology over Z: the whole cube, dense matrices and a
// textbook Smith form. Shares nothing with the library beyond the Diagram
// type, so disagreements point at the engine.

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "khoxotic/diagram.hpp"

namespace oracle {

using Mat = std::vector<std::vector<mpz_class>>;

struct State {
  int circles = 0;
  std::map<int, int> circle_of_arc;
};

inline int find(std::map<int, int>& p, int a) {
  while (p[a] != a) a = p[a] = p[p[a]];
  return a;
}

inline State resolve(const khoxotic::Diagram& d, unsigned v) {
  std::map<int, int> parent;
  for (int a : d.arcs()) parent[a] = a;
  for (int c = 0; c < d.size(); ++c) {
    const auto& x = d.crossings()[c].arcs;
    const bool one = (v >> c) & 1u;
    auto join = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
    if (one) {
      join(x[0], x[3]);
      join(x[1], x[2]);
    } else {
      join(x[0], x[1]);
      join(x[2], x[3]);
    }
  }
  State s;
  std::map<int, int> id;
  for (int a : d.arcs()) {
    const int r = find(parent, a);
    if (!id.count(r)) id[r] = s.circles++;
    s.circle_of_arc[a] = id[r];
  }
  return s;
}

// Smith invariant factors of a dense integer matrix (nonzero ones only).
inline std::vector<mpz_class> invariant_factors(Mat a) {
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block
    size_t pr = rows, pc = cols;
    for (size_t r = t; r < rows; ++r)
      for (size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) pr = r, pc = c;
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (size_t r = t + 1; r < rows; ++r) {
      const mpz_class q = a[r][t] / a[t][t];
      if (q != 0)
        for (size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
      if (a[r][t] != 0) clean = false;
    }
    for (size_t c = t + 1; c < cols; ++c) {
      const mpz_class q = a[t][c] / a[t][t];
      if (q != 0)
        for (size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
      if (a[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pivot again
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // gcd/lcm sweep until each factor divides the next
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// Same text layout as KhHomology::table(): "i j rank torsion..." per nonzero group.
inline std::string khovanov_table(const khoxotic::Diagram& d) {
  const int n = d.size();
  const int np = d.n_plus(), nm = d.n_minus();
  struct Gen {
    unsigned v, labels;
  };
  std::vector<State> states;
  for (unsigned v = 0; v < (1u << n); ++v) states.push_back(resolve(d, v));
  // bucket generators by (i, j)
  std::map<std::pair<int, int>, std::vector<Gen>> gens;
  for (unsigned v = 0; v < (1u << n); ++v) {
    const int h = __builtin_popcount(v);
    const int k = states[v].circles;
    for (unsigned l = 0; l < (1u << k); ++l) {
      const int xs = __builtin_popcount(l);
      gens[{h - nm, k - 2 * xs + h + np - 2 * nm}].push_back({v, l});
    }
  }
  auto index_in = [](const std::vector<Gen>& list) {
    std::map<std::pair<unsigned, unsigned>, int> ix;
    for (size_t t = 0; t < list.size(); ++t) ix[{list[t].v, list[t].labels}] = static_cast<int>(t);
    return ix;
  };
  // d: C^{i,j} -> C^{i+1,j}, rows indexed by the target
  auto differential = [&](int i, int j) {
    const auto& src = gens[{i, j}];
    const auto& dst = gens[{i + 1, j}];
    const auto ix = index_in(dst);
    Mat m(dst.size(), std::vector<mpz_class>(src.size()));
    for (size_t s = 0; s < src.size(); ++s) {
      const unsigned v = src[s].v;
      for (int c = 0; c < n; ++c) {
        if ((v >> c) & 1u) continue;
        const unsigned w = v | (1u << c);
        const int sign = __builtin_popcount(v & ((1u << c) - 1)) % 2 ? -1 : 1;
        const State &a = states[v], &b = states[w];
        // labels as a map from arcs: bit per circle
        const auto& x = d.crossings()[c].arcs;
        auto label_at = [&](unsigned labels, const State& st, int arc) { return (labels >> st.circle_of_arc.at(arc)) & 1u; };
        // carry the untouched circles over by arc representatives
        std::vector<int> rep_a(a.circles, -1);
        for (const auto& [arc, cid] : a.circle_of_arc)
          if (rep_a[cid] < 0) rep_a[cid] = arc;
        auto emit = [&](unsigned out_labels, int coeff) {
          const auto it = ix.find({w, out_labels});
          m[it->second][s] += sign * coeff;
        };
        // in the 0-smoothing, x0~x1 and x2~x3
        const int p = a.circle_of_arc.at(x[0]), q = a.circle_of_arc.at(x[2]);
        unsigned base = 0;  // labels of circles in w not touched by the change
        for (int cid = 0; cid < a.circles; ++cid) {
          if (cid == p || cid == q) continue;
          if ((src[s].labels >> cid) & 1u) base |= 1u << b.circle_of_arc.at(rep_a[cid]);
        }
        if (p != q) {
          // merge
          const unsigned lp = label_at(src[s].labels, a, x[0]), lq = label_at(src[s].labels, a, x[2]);
          if (lp && lq) continue;
          const int m_id = b.circle_of_arc.at(x[0]);
          emit(base | ((lp | lq) << m_id), 1);
        } else {
          // split: x0~x3 and x1~x2 in the 1-smoothing
          const int u = b.circle_of_arc.at(x[0]), t = b.circle_of_arc.at(x[1]);
          if (label_at(src[s].labels, a, x[0])) {
            emit(base | (1u << u) | (1u << t), 1);
          } else {
            emit(base | (1u << u), 1);
            emit(base | (1u << t), 1);
          }
        }
      }
    }
    return m;
  };
  std::ostringstream out;
  for (const auto& [key, list] : gens) {
    const auto [i, j] = key;
    const auto in = gens.count({i - 1, j}) ? invariant_factors(differential(i - 1, j)) : std::vector<mpz_class>{};
    const auto outf = gens.count({i + 1, j}) ? invariant_factors(differential(i, j)) : std::vector<mpz_class>{};
    const int free_rank = static_cast<int>(list.size() - in.size() - outf.size());
    std::vector<mpz_class> torsion;
    for (const auto& f : in)
      if (f != 1) torsion.push_back(f);
    if (free_rank == 0 && torsion.empty()) continue;
    out << i << " " << j << " " << free_rank;
    for (const auto& t : torsion) out << " " << t.get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace oracle
