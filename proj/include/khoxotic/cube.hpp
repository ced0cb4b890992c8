#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "khoxotic/diagram.hpp"
#include "khoxotic/integer.hpp"

namespace khoxotic {

// The data the cube of resolutions needs: crossings as arc quadruples whose
// 0-smoothing pairs (0,1),(2,3) and 1-smoothing pairs (0,3),(1,2), extra arc
// identifications (junctions) and free circles. Orientation only enters
// through the grading shifts.
struct CubeData {
  std::vector<std::array<int, 4>> quads;
  std::vector<std::pair<int, int>> junctions;
  std::vector<int> loops;
  int n_plus = 0;
  int n_minus = 0;

  static CubeData from(const Diagram& d);
  int size() const { return static_cast<int>(quads.size()); }
  int arc_bound() const;
  std::vector<int> used_arcs() const;
};

// Circles of one resolution, indexed by increasing minimal arc.
struct Circles {
  int count = 0;
  std::vector<std::int8_t> of_arc;  // arc id -> circle index, -1 if unused
  std::vector<int> rep;     // circle index -> its minimal arc
};

class CircleCache {
 public:
  explicit CircleCache(const CubeData& cube);
  const Circles& at(std::uint64_t vertex);
  Circles compute(std::uint64_t vertex) const;
  const CubeData& cube() const { return cube_; }

 private:
  const CubeData& cube_;
  std::vector<int> arcs_;
  int bound_;
  std::unordered_map<std::uint64_t, std::unique_ptr<Circles>> cache_;
};

// A generator of the Khovanov complex: a vertex of the cube and the set of
// circles labelled X (bit k refers to circle k).
struct Gen {
  std::uint64_t vertex = 0;
  std::uint64_t xmask = 0;
  friend bool operator==(const Gen&, const Gen&) = default;
  friend bool operator<(const Gen& a, const Gen& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.xmask < b.xmask;
  }
};

struct GenHash {
  std::size_t operator()(const Gen& g) const noexcept {
    std::uint64_t h = g.vertex * 0x9E3779B97F4A7C15ULL;
    h ^= g.xmask + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using SparseVec = std::unordered_map<Gen, i64, GenHash>;

inline int hdeg(const CubeData& c, std::uint64_t v) { return std::popcount(v) - c.n_minus; }
inline int qdeg(const CubeData& c, std::uint64_t v, std::uint64_t xmask, int circles) {
  return circles - 2 * std::popcount(xmask) + std::popcount(v) + c.n_plus - 2 * c.n_minus;
}

// Applies the differential along every outgoing edge of `g`, calling
// emit(target, coefficient).
void differential(const CubeData& cube, CircleCache& cache, const Gen& g,
                  const std::function<void(const Gen&, i64)>& emit);

// Sparse differential of a vector (all generators in one bidegree).
SparseVec apply_differential(const CubeData& cube, CircleCache& cache, const SparseVec& v);

}  // namespace khoxotic
