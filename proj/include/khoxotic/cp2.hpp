#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "khoxotic/ribbon.hpp"

namespace khoxotic {

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quantum filtration degree of the Lee generator of T(p+q,p+q)_{p,q}.
int grq(int p, int q);

// Torus computations run at homological degree 0 for p+q <= 5 when the
// estimated generator count fits `budget`; anything else throws
// InfeasibleError.
constexpr double kTorusGeneratorBudget = 1.5e6;
void check_torus_feasible(int p, int q, double budget = kTorusGeneratorBudget);

// Kh^{0,grq} of torus_link(p,q), checked to be Z, with a generator.
struct TorusProjection {
  int p = 0, q = 0, j = 0;
  Diagram diagram;
  std::shared_ptr<const KhHomology> kh;
  SparseVec generator;
  // Coordinate of a cycle of bidegree (0, j) on the generator.
  mpz_class project(const SparseVec& cycle) const;
};

// Cached per (p, q) for the life of the process.
TorusProjection torus_projection(int p, int q, double budget = kTorusGeneratorBudget);

// Kh^{0,*}(torus_link(p,q)) over all quantum degrees.
std::shared_ptr<const KhHomology> torus_slice(int p, int q, double budget = kTorusGeneratorBudget);

// A surface in the punctured CP^2 meeting the core p times positively and q
// times negatively, cut open along the boundary of a neighbourhood of the
// core. The neck movie runs from the boundary diagram to torus_link(p,q).
struct CP2SurfacePresentation {
  int p = 1, q = 0;
  Movie neck;
  int alpha() const { return p - q; }
};

std::string serialize_cp2(const CP2SurfacePresentation& s);
CP2SurfacePresentation parse_cp2(const std::string& json_text);

// Blow up a ribbon disk at a point: the ribbon movie without its last death,
// relabelled so that it ends at torus_link(1,0).
CP2SurfacePresentation blow_up(const BandPresentation& b, const SimplifyOptions& opt = {});

// Neck movie map followed by projection to Kh^{0,grq(p,q)}; sign-normalised.
// `kh` is the homology of the neck's first frame. Throws MapError when the
// neck does not end at torus_link(p,q).
Functional cp2_functional(const CP2SurfacePresentation& s, const KhHomology& kh);

struct TwoSaddle {
  int p = 0, q = 0;
  Movie movie;           // torus_link(p,q) -> ... -> torus_link(p+1,q+1)
  bool standard_start = false;  // false if the movie starts at another diagram of the link
  mpz_class value;       // induced map Z -> Z on the grq slices
};

// Split an unknot off one strand, then merge it into a new pair of opposite
// strands. `attach` picks the strand (index into the sorted arcs of the
// smaller link) the unknot is split from.
TwoSaddle two_saddle_map(int p, int q, int attach = 0);

// Composite of l two-saddle maps; 1 for l = 0.
mpz_class stabilization_map(int p, int q, int l);

}  // namespace khoxotic
