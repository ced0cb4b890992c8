#include "khoxotic/lee.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

namespace khoxotic {

namespace {

using Labels = std::vector<int>;  // 0 = 1, 1 = x, per circle

std::uint64_t mask_of(const Labels& l) {
  std::uint64_t m = 0;
  for (size_t k = 0; k < l.size(); ++k)
    if (l[k]) m |= std::uint64_t{1} << k;
  return m;
}

void add(QVec& out, const Gen& g, const mpq_class& c) {
  auto [it, fresh] = out.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// All edges leaving one generator.
void lee_edges(const Frame& f, const Gen& g, const mpq_class& coef, QVec& out) {
  const CubeData& cube = f.cube();
  const Circles& cv = f.circles(g.vertex);
  for (int c = 0; c < cube.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (g.vertex & bit) continue;
    const std::uint64_t w = g.vertex | bit;
    const Circles& cw = f.circles(w);
    const auto& quad = cube.quads[c];
    const mpq_class s = std::popcount(g.vertex & (bit - 1)) % 2 ? -coef : coef;
    Labels base(cw.count, 0);
    for (int k = 0; k < cw.count; ++k) base[k] = (g.xmask >> cv.of_arc[cw.rep[k]]) & 1;
    const int a = cv.of_arc[quad[0]], b = cv.of_arc[quad[2]];
    const int la = (g.xmask >> a) & 1, lb = (g.xmask >> b) & 1;
    auto emit = [&](Labels l) { add(out, Gen{w, mask_of(l)}, s); };
    if (a != b) {
      const int m = cw.of_arc[quad[0]];
      Labels l = base;
      if (la && lb) {
        l[m] = 0;  // x * x = 1
      } else {
        l[m] = la | lb;
      }
      emit(l);
    } else {
      const int c1 = cw.of_arc[quad[0]], c2 = cw.of_arc[quad[1]];
      Labels l = base;
      if (!la) {
        l[c1] = 0, l[c2] = 1;
        emit(l);
        l[c1] = 1, l[c2] = 0;
        emit(l);
      } else {
        l[c1] = 1, l[c2] = 1;
        emit(l);
        l[c1] = 0, l[c2] = 0;
        emit(l);
      }
    }
  }
}

int qof(const Frame& f, const Gen& g) { return qdeg(f.cube(), g.vertex, g.xmask, f.circles(g.vertex).count); }

// Sparse echelon basis over Q keyed by pivot row.
class Span {
 public:
  void reduce(std::map<int, mpq_class>& v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) return;
      const mpq_class factor = v.begin()->second / it->second.begin()->second;
      for (const auto& [r, x] : it->second) {
        mpq_class& y = v[r];
        y -= factor * x;
        if (y == 0) v.erase(r);
      }
    }
  }
  void insert(std::map<int, mpq_class> v) {
    reduce(v);
    if (!v.empty()) pivots_.emplace(v.begin()->first, std::move(v));
  }
  bool contains(std::map<int, mpq_class> v) const {
    reduce(v);
    return v.empty();
  }

 private:
  std::map<int, std::map<int, mpq_class>> pivots_;
};

}  // namespace

QVec lee_differential(const Frame& f, const QVec& v) {
  QVec out;
  for (const auto& [g, c] : v) lee_edges(f, g, c, out);
  return out;
}

QVec lee_generator(const Frame& f, bool opposite) {
  const Diagram& d = f.diagram();
  std::uint64_t v = 0;
  for (int c = 0; c < d.size(); ++c)
    if (!d.crossings()[c].positive) v |= std::uint64_t{1} << c;
  const Circles& cs = f.circles(v);
  // Two-colour the Seifert graph.
  std::vector<std::vector<int>> adj(cs.count);
  for (const auto& q : f.cube().quads) {
    const int a = cs.of_arc[q[0]], b = cs.of_arc[q[2]];
    if (a == b) throw std::logic_error("lee: oriented resolution puts one circle on both sides of a crossing");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(cs.count, -1);
  for (int s = 0; s < cs.count; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = opposite ? 1 : 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b : adj[a]) {
        if (colour[b] < 0) {
          colour[b] = 1 - colour[a];
          queue.push_back(b);
        } else if (colour[b] == colour[a]) {
          throw std::logic_error("lee: Seifert graph is not bipartite");
        }
      }
    }
  }
  // Expand the tensor product of (1 + x) and (1 - x).
  QVec out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cs.count); ++m) {
    int sign = 1;
    for (int k = 0; k < cs.count; ++k)
      if ((m >> k & 1) && colour[k]) sign = -sign;
    out.emplace(Gen{v, m}, sign);
  }
  return out;
}

int filtration_degree(const Frame& f, const QVec& z) {
  if (z.empty()) throw std::invalid_argument("filtration_degree: zero chain");
  if (!lee_differential(f, z).empty()) throw std::invalid_argument("filtration_degree: not a Lee cycle");
  const int n = f.cube().size();
  const int level = std::popcount(z.begin()->first.vertex);
  for (const auto& [g, c] : z)
    if (std::popcount(g.vertex) != level) throw std::invalid_argument("filtration_degree: mixed homological degree");

  // Boundaries from the degree below, with rows indexed by target generator.
  std::vector<QVec> cols;
  if (level > 0) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      if (std::popcount(v) != level - 1) continue;
      const int circles = f.circles(v).count;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << circles); ++m)
        cols.push_back(lee_differential(f, {{Gen{v, m}, 1}}));
    }
  }
  std::map<Gen, int> row;
  std::vector<int> row_q;
  auto row_of = [&](const Gen& g) {
    auto [it, fresh] = row.emplace(g, static_cast<int>(row_q.size()));
    if (fresh) row_q.push_back(qof(f, g));
    return it->second;
  };
  for (const auto& col : cols)
    for (const auto& [g, c] : col) row_of(g);
  for (const auto& [g, c] : z) row_of(g);

  int qmin = 1 << 30, qmax = -(1 << 30);
  for (int q : row_q) qmin = std::min(qmin, q), qmax = std::max(qmax, q);

  // z lies in F_k + B iff its part below k lies in the part of B below k.
  auto below = [&](const QVec& v, int k) {
    std::map<int, mpq_class> out;
    for (const auto& [g, c] : v) {
      const int r = row.at(g);
      if (row_q[r] < k) out[r] = c;
    }
    return out;
  };
  int best = qmin;
  for (int k = qmin + 2; k <= qmax + 2; k += 2) {
    Span span;
    for (const auto& col : cols) span.insert(below(col, k));
    if (!span.contains(below(z, k))) return best;
    best = k;
  }
  throw std::invalid_argument("filtration_degree: the class is zero");
}

}  // namespace khoxotic
