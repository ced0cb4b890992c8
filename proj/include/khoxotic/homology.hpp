#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "khoxotic/complex.hpp"
#include "khoxotic/reduce.hpp"
#include "khoxotic/snf.hpp"

namespace khoxotic {

// Homology in one bidegree with a presentation for class arithmetic. All
// vectors here are in the coordinates of the reduced complex.
struct HomologyGroup {
  int i = 0, j = 0;
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors, each dividing the next

  int dim = 0;        // reduced generators in degree i
  ZMatrix d_out;      // reduced differential leaving degree i
  ZMatrix kernel;     // (dim - r) x dim, cycle -> kernel coordinates
  ZMatrix p2;         // kernel coordinates -> class coordinates
  std::vector<mpz_class> diag2;
  ZMatrix gens;       // dim x (dim - r), column k represents class basis e_k

  int rank2() const { return static_cast<int>(diag2.size()); }
  bool is_cycle(const std::vector<i64>& z) const;
  // Class coordinates; entries below rank2() are torsion (mod diag2), the
  // rest are the free coordinates.
  std::vector<mpz_class> coords(const std::vector<i64>& z) const;
  std::vector<mpz_class> free_coords(const std::vector<i64>& z) const;
  std::vector<i64> free_generator(int k) const;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

HomologyGroup compute_group(const Reduction& red, int i, int j);

class KhHomology {
 public:
  KhHomology(const CubeData& cube, const Window& window, bool reduce = true);
  KhHomology(const Diagram& d, const Window& window, bool reduce = true)
      : KhHomology(CubeData::from(d), window, reduce) {}

  const Complex& complex() const { return cx_; }
  const std::map<std::pair<int, int>, HomologyGroup>& groups() const { return groups_; }
  // Returns an empty group for bidegrees with no generators; throws if the
  // bidegree lies outside the exact range of the window.
  const HomologyGroup& group(int i, int j) const;
  bool covers(int i, int j) const;

  // Cycle in the unreduced complex representing free generator k.
  SparseVec lift_free(int i, int j, int k) const;
  // Class of a cycle of the unreduced complex.
  std::vector<mpz_class> class_coords(int i, int j, const SparseVec& cycle) const;
  std::vector<mpz_class> free_coords(int i, int j, const SparseVec& cycle) const;

  // Nonzero groups as text "i j rank [torsion...]" lines, sorted.
  std::string table() const;

 private:
  Complex cx_;
  Window window_;
  std::map<int, std::unique_ptr<Reduction>> red_;
  std::map<std::pair<int, int>, HomologyGroup> groups_;
  HomologyGroup empty_;
};

}  // namespace khoxotic
