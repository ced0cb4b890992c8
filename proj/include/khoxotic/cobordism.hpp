#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "khoxotic/cube.hpp"
#include "khoxotic/moves.hpp"

namespace khoxotic {

// A diagram together with its cube data and circle cache. Not copyable: the
// cache refers to the cube.
class Frame {
 public:
  explicit Frame(Diagram d);
  Frame(const Frame&) = delete;
  Frame& operator=(const Frame&) = delete;

  const Diagram& diagram() const { return d_; }
  const CubeData& cube() const { return cube_; }
  const Circles& circles(std::uint64_t v) const { return cache_->at(v); }
  SparseVec d(const SparseVec& v) const { return apply_differential(cube_, *cache_, v); }
  // 1 if the circle through `arc` carries X in g.
  int label(const Gen& g, int arc) const;
  // For each circle at v, some arc of it outside `avoid` (-1 if none).
  std::vector<int> reps_avoiding(std::uint64_t v, const std::set<int>& avoid) const;

 private:
  Diagram d_;
  CubeData cube_;
  std::unique_ptr<CircleCache> cache_;
  std::vector<int> arcs_;
};

// Gaussian elimination of a local circle O (kink, bigon or triangle) against
// the cube edges at the local crossings. At most two cancellations: a split
// one removing O labelled X together with the vertex before it, and a merge
// one removing O labelled 1 together with the vertex after it.
class LocalReduction {
 public:
  // `fixed` lists local crossings held at their O bit (the R3 middle crossing).
  LocalReduction(const Frame& f, std::vector<int> local, std::set<int> inner, std::set<int> fixed = {});

  const std::vector<int>& local() const { return local_; }
  const std::set<int>& inner() const { return inner_; }
  // Local bit pattern (bit k = crossing local()[k]) at which O exists.
  unsigned o_pattern() const { return o_pattern_; }
  unsigned pattern(std::uint64_t vertex) const;
  bool survivor(const Gen& g) const { return !removed(static_cast<int>(steps_.size()), g); }

  SparseVec to(const SparseVec& v) const;
  SparseVec from(const SparseVec& r) const;
  SparseVec reduced_d(const SparseVec& r) const { return dk(static_cast<int>(steps_.size()), r); }
  const Frame& frame() const { return f_; }

 private:
  struct Step {
    bool split;
    int flip;  // local index whose bit the cancelled edge changes
  };
  bool o_is_x(const Gen& g) const { return f_.label(g, *inner_.begin()); }
  bool in_a(int s, const Gen& g) const;
  bool in_b(int s, const Gen& g) const;
  bool removed(int upto, const Gen& g) const;
  SparseVec dk(int k, const SparseVec& v) const;
  SparseVec phi_inv(int s, const SparseVec& b) const;

  const Frame& f_;
  std::vector<int> local_;
  std::set<int> inner_;
  unsigned o_pattern_ = 0;
  std::vector<Step> steps_;
  mutable std::vector<std::unordered_map<Gen, std::pair<Gen, i64>, GenHash>> memo_;
};

// Chain map between the complexes of two frames.
class ElementaryMap {
 public:
  virtual ~ElementaryMap() = default;
  virtual SparseVec operator()(const SparseVec& v) const = 0;
  // q-degree shift of the map.
  virtual int q_shift() const { return 0; }
};

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `before` and `after` must stay alive while the map is used.
std::unique_ptr<ElementaryMap> make_elementary_map(const Frame& before, const Move& m, const Frame& after);

// d'(f(v)) - f(d(v)); empty when f commutes with the differentials on v.
SparseVec chain_defect(const ElementaryMap& f, const Frame& before, const Frame& after, const SparseVec& v);

SparseVec scaled(const SparseVec& v, i64 c);
void add_into(SparseVec& acc, const SparseVec& v, i64 c = 1);

}  // namespace khoxotic
