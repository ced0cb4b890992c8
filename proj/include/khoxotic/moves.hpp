#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoxotic/diagram.hpp"

namespace khoxotic {

// Elementary moves between diagrams. Sites of insertion moves (R1+, R2+) are
// given on the diagram after the move, so every R-move is described by the
// removal it undoes.
enum class MoveKind { R1Minus, R1Plus, R2Minus, R2Plus, R3, Birth, Death, Saddle, Relabel };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

struct Move {
  MoveKind kind = MoveKind::R3;
  std::vector<int> crossings;  // R1: {c}; R2: {c1, c2}; R3: three crossings
  std::vector<int> arcs;       // R1: {kink arc}; R3: inner arcs or empty; saddle: {e, f}; birth/death: {loop}
  int new_arc = 0;             // saddles that create a loop; 0 picks max_arc + 1
  std::map<int, int> arc_map;  // relabel: old -> new
  std::vector<int> order;      // relabel: new crossing k is old crossing order[k]

  friend bool operator==(const Move&, const Move&) = default;
};

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Removal moves and R3 act on `d` as the diagram before the move. For the
// insertion kinds this applies the inverse, i.e. maps the later frame back.
Diagram apply_move(const Diagram& d, const Move& m);
// Applies m to `before` and checks the result equals `after`.
bool move_connects(const Diagram& before, const Move& m, const Diagram& after);
// The move taking `after` back to `before`.
Move inverse_move(const Move& m, const Diagram& before, const Diagram& after);

// Individual patterns. They throw MoveError on an illegal site.
Diagram r1_remove(const Diagram& d, int crossing, int kink_arc);
Diagram r2_remove(const Diagram& d, int c1, int c2);
Diagram r3_apply(const Diagram& d, int c1, int c2, int c3, const std::vector<int>& inner_hint = {});
Diagram saddle(const Diagram& d, int e, int f, int new_arc = 0);
Diagram birth(const Diagram& d, int loop_arc = 0);
Diagram death(const Diagram& d, int loop_arc);
Diagram relabel_move(const Diagram& d, const std::map<int, int>& arc_map, const std::vector<int>& order);

// Deletes the crossings in S, letting strands run straight through. Each
// surviving run keeps the id of its first arc; closed runs become loops named
// by their smallest arc outside `internal`. arc_map receives old -> new ids.
Diagram remove_crossings(const Diagram& d, const std::set<int>& S, const std::set<int>& internal,
                         std::map<int, int>* arc_map = nullptr);

// Site enumeration, deterministic order.
std::vector<Move> r1_sites(const Diagram& d);
std::vector<Move> r2_sites(const Diagram& d);
std::vector<Move> r3_sites(const Diagram& d);
// All saddles between two distinct crossing arcs that respect orientation.
std::vector<std::pair<int, int>> saddle_sites(const Diagram& d);
bool saddle_allowed(const Diagram& d, int e, int f);

// Geometry of an R3 site, shared with the chain maps.
struct R3Site {
  std::array<int, 3> lines_crossing{};  // crossing index of line pair {1,2}, {0,2}, {0,1}
  std::array<int, 3> inner{};           // inner arc of each line
  std::array<int, 3> height{};          // 0 = top, 2 = bottom
  int top = -1;                         // line index of the top strand
};
// Three crossings can bound two triangles; `inner_hint` (the three inner
// arcs) picks one, otherwise the first stacked triangle is used.
R3Site r3_site(const Diagram& d, int c1, int c2, int c3, const std::vector<int>& inner_hint = {});

// Finds a relabel move (arc renaming plus crossing reordering) taking `a`
// to `b`, if the two diagrams are isomorphic as labelled PD codes.
std::optional<Move> find_relabel(const Diagram& a, const Diagram& b);

}  // namespace khoxotic
