#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "khoxotic/cube.hpp"

namespace khoxotic {

// Requested homological range and optional quantum range. The complex is
// generated one degree beyond the requested range on each side.
struct Window {
  std::optional<std::pair<int, int>> i;
  std::optional<std::pair<int, int>> j;

  static Window all() { return {}; }
  static Window at(int i0, int j0) { return {std::pair{i0, i0}, std::pair{j0, j0}}; }
  bool has_j(int j) const { return !this->j || (j >= this->j->first && j <= this->j->second); }
};

// Column-sparse matrix: cols[c] lists (row, coefficient).
using SparseCols = std::vector<std::vector<std::pair<int, i64>>>;

// All generators of one quantum grading, split by homological degree.
struct Block {
  int j = 0;
  int i_lo = 0;  // degree of gens[0]
  std::vector<std::vector<Gen>> gens;
  std::vector<std::unordered_map<Gen, int, GenHash>> index;
  std::vector<SparseCols> d;  // d[k] : degree i_lo+k -> i_lo+k+1

  int degrees() const { return static_cast<int>(gens.size()); }
  int size(int i) const;
  int find(int i, const Gen& g) const;
};

struct Complex {
  CubeData cube;
  int gen_lo = 0, gen_hi = -1;      // generated degrees
  int valid_lo = 0, valid_hi = -1;  // degrees whose homology is exact
  std::map<int, Block> blocks;      // by quantum grading

  std::size_t generator_count() const;
};

Complex build_complex(const CubeData& cube, const Window& window = Window::all());

// Rough number of generators a window would create, from sampled vertices.
double estimate_generators(const CubeData& cube, const Window& window);

// Dense <-> sparse conversion against a block degree.
std::vector<i64> to_dense(const Block& b, int i, const SparseVec& v);
SparseVec to_sparse(const Block& b, int i, const std::vector<i64>& v);

}  // namespace khoxotic
