#include "khoxotic/cube.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace khoxotic {

CubeData CubeData::from(const Diagram& d) {
  CubeData c;
  for (const Crossing& x : d.crossings()) c.quads.push_back(x.arcs);
  c.loops = d.loops();
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  return c;
}

std::vector<int> CubeData::used_arcs() const {
  std::set<int> s(loops.begin(), loops.end());
  for (const auto& q : quads) s.insert(q.begin(), q.end());
  for (const auto& [a, b] : junctions) {
    s.insert(a);
    s.insert(b);
  }
  return {s.begin(), s.end()};
}

int CubeData::arc_bound() const {
  const auto arcs = used_arcs();
  return arcs.empty() ? 0 : arcs.back() + 1;
}

CircleCache::CircleCache(const CubeData& cube) : cube_(cube), arcs_(cube.used_arcs()), bound_(cube.arc_bound()) {
  if (cube.size() > 64) throw std::invalid_argument("more than 64 crossings are not supported");
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Circles CircleCache::compute(std::uint64_t vertex) const {
  std::vector<int> parent(bound_);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
  for (int c = 0; c < cube_.size(); ++c) {
    const auto& q = cube_.quads[c];
    if ((vertex >> c) & 1) {
      unite(q[0], q[3]);
      unite(q[1], q[2]);
    } else {
      unite(q[0], q[1]);
      unite(q[2], q[3]);
    }
  }
  for (const auto& [a, b] : cube_.junctions) unite(a, b);
  Circles out;
  out.of_arc.assign(bound_, -1);
  std::vector<int> index_of_root(bound_, -1);
  for (int a : arcs_) {
    const int r = find(parent, a);
    if (index_of_root[r] < 0) {
      index_of_root[r] = out.count++;
      out.rep.push_back(a);
    }
    if (index_of_root[r] > 63) throw std::invalid_argument("more than 64 circles in a resolution");
    out.of_arc[a] = static_cast<std::int8_t>(index_of_root[r]);
  }
  if (out.count > 64) throw std::invalid_argument("more than 64 circles in a resolution");
  return out;
}

const Circles& CircleCache::at(std::uint64_t vertex) {
  auto it = cache_.find(vertex);
  if (it != cache_.end()) return *it->second;
  auto ptr = std::make_unique<Circles>(compute(vertex));
  const Circles& ref = *ptr;
  cache_.emplace(vertex, std::move(ptr));
  return ref;
}

void differential(const CubeData& cube, CircleCache& cache, const Gen& g,
                  const std::function<void(const Gen&, i64)>& emit) {
  const Circles& cv = cache.at(g.vertex);
  for (int c = 0; c < cube.size(); ++c) {
    if ((g.vertex >> c) & 1) continue;
    const std::uint64_t w = g.vertex | (std::uint64_t{1} << c);
    const Circles& cw = cache.at(w);
    const i64 sign = (std::popcount(g.vertex & ((std::uint64_t{1} << c) - 1)) & 1) ? -1 : 1;
    const auto& q = cube.quads[c];
    const int a = cv.of_arc[q[0]];
    const int b = cv.of_arc[q[2]];
    std::uint64_t base = 0;
    for (int k = 0; k < cv.count; ++k)
      if (k != a && k != b && ((g.xmask >> k) & 1)) base |= std::uint64_t{1} << cw.of_arc[cv.rep[k]];
    const bool xa = (g.xmask >> a) & 1;
    if (a != b) {
      const bool xb = (g.xmask >> b) & 1;
      if (xa && xb) continue;
      const int m = cw.of_arc[q[0]];
      emit({w, base | ((xa || xb) ? (std::uint64_t{1} << m) : 0)}, sign);
    } else {
      const std::uint64_t p = std::uint64_t{1} << cw.of_arc[q[0]];
      const std::uint64_t r = std::uint64_t{1} << cw.of_arc[q[1]];
      if (xa) {
        emit({w, base | p | r}, sign);
      } else {
        emit({w, base | p}, sign);
        emit({w, base | r}, sign);
      }
    }
  }
}

SparseVec apply_differential(const CubeData& cube, CircleCache& cache, const SparseVec& v) {
  SparseVec out;
  for (const auto& [g, coef] : v) {
    differential(cube, cache, g, [&](const Gen& t, i64 s) {
      i64& slot = out[t];
      slot = add_checked(slot, mul_checked(coef, s));
    });
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace khoxotic
