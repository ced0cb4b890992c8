#pragma once

#include <vector>

#include "khoxotic/complex.hpp"
#include "khoxotic/snf.hpp"

namespace khoxotic {

// Gaussian elimination of unit entries in one block, keeping enough of a log
// to transport vectors both ways:
//   to   : C -> C' (projection onto the reduced complex)
//   from : C' -> C (inclusion of the reduced complex)
// Both are chain maps and mutually inverse homotopy equivalences.
class Reduction {
 public:
  explicit Reduction(const Block& b, bool reduce = true);

  int i_lo() const { return i_lo_; }
  int degrees() const { return static_cast<int>(offset_.size()) - 1; }
  // Surviving generators of degree i, as indices into the block's list.
  const std::vector<int>& survivors(int i) const { return surv_[i - i_lo_]; }
  // Reduced differential from degree i to i+1 as a dense matrix
  // (rows: survivors(i+1), cols: survivors(i)).
  ZMatrix reduced_d(int i) const;
  std::size_t eliminated() const { return log_.size(); }

  // Dense vectors are indexed by the block's generator list of degree i
  // (for `to` input and `from` output) or by survivors(i).
  std::vector<i64> to(int i, const std::vector<i64>& v) const;
  std::vector<i64> from(int i, const std::vector<i64>& w) const;

 private:
  struct Step {
    int x, y;
    i64 u;
    std::vector<std::pair<int, i64>> dx;     // d(x) without y, global ids
    std::vector<std::pair<int, i64>> col_y;  // d(a, y) for a != x
  };
  using Row = std::vector<std::pair<int, i64>>;

  void eliminate_all();
  void add_entry(int a, int b, i64 delta);
  static i64 get(const Row& r, int key);

  int i_lo_;
  std::vector<int> offset_;  // global id of first generator in each degree
  std::vector<int> deg_;     // degree offset of each global id
  std::vector<Row> out_, in_;
  std::vector<char> alive_;
  std::vector<Step> log_;
  std::vector<std::vector<int>> surv_;
};

}  // namespace khoxotic
