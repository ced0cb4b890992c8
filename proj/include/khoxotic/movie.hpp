#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "khoxotic/cobordism.hpp"
#include "khoxotic/homology.hpp"

namespace khoxotic {

constexpr int kMovieFormatVersion = 1;

struct Movie {
  std::vector<Diagram> frames;
  std::vector<Move> moves;  // moves[t] takes frames[t] to frames[t+1]

  static Movie starting_at(Diagram d) { return {{std::move(d)}, {}}; }
  const Diagram& back() const { return frames.back(); }
  // Appends a forward move (removal, R3, birth, death, saddle, relabel).
  void push(const Move& m);
  // Appends an insertion move (R1+ or R2+) whose result is `after`.
  void push_insertion(const Move& m, Diagram after);
  void append(const Movie& tail);
  int euler_characteristic() const;  // births + deaths - saddles
};

// Index of the first move that does not connect its frames, or nullopt.
std::optional<int> first_invalid_move(const Movie& m);

std::string movie_to_json(const Movie& m);
Movie movie_from_json(const std::string& text);
std::string move_to_json(const Move& m);

// The reversed movie presents the same surface upside down for R-moves and
// relabels; births/deaths/saddles are swapped with their duals.
Movie reverse_movie(const Movie& m);

// Chain map of a whole movie. Keeps every frame alive.
class MovieMap {
 public:
  explicit MovieMap(const Movie& m);
  // Pushes v through all moves. With `check`, every step is tested for
  // commuting with the differentials on v.
  SparseVec operator()(const SparseVec& v, bool check = false) const;
  const Frame& source() const { return *frames_.front(); }
  const Frame& target() const { return *frames_.back(); }
  int q_shift() const;

 private:
  std::vector<std::unique_ptr<Frame>> frames_;
  std::vector<std::unique_ptr<ElementaryMap>> maps_;
};

// Values of a map into Kh(empty) = Z on the free generators of Kh^{i,j}.
struct Functional {
  int i = 0, j = 0;
  std::vector<mpz_class> values;
  // Makes the first nonzero value positive; returns the sign applied.
  int normalize();
  bool is_zero() const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

Functional movie_functional(const Movie& m, const KhHomology& kh, int i, int j);

struct Verdict {
  bool distinct = false;
  // Which functional takes the value +-1 ("f" or "g").
  std::string direction;
  std::vector<mpz_class> witness;  // coordinates on the free generators
};

// Looks for an integer class phi with f(phi) = +-1 and g(phi) = 0, then the
// same with f and g exchanged.
Verdict distinguish(const Functional& f, const Functional& g);

}  // namespace khoxotic
