#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khoxotic {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, ArcMultiplicity, Orientation };
  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A crossing in PD notation. arcs[0] is the incoming under-strand, the rest
// follow counterclockwise. The under-strand runs arcs[0] -> arcs[2]; the
// over-strand runs arcs[3] -> arcs[1] when positive, arcs[1] -> arcs[3] when
// negative.
struct Crossing {
  std::array<int, 4> arcs{};
  bool positive = true;

  bool outgoing(int slot) const {
    switch (slot & 3) {
      case 0: return false;
      case 2: return true;
      case 1: return positive;
      default: return !positive;
    }
  }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct HalfEdge {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct ArcEnds {
  HalfEdge tail;  // where the arc leaves a crossing
  HalfEdge head;  // where the arc enters a crossing
};

// One side of an arc on the boundary of a face, with the direction the face
// walk traverses it relative to the arc's orientation.
struct FaceSide {
  int arc = -1;
  bool forward = true;
};

// Oriented planar link diagram. Crossingless components are kept as loop arc
// ids. Values are immutable by convention; all operations return new diagrams.
class Diagram {
 public:
  Diagram() = default;
  // Validates every invariant; throws ParseError on violation.
  Diagram(std::vector<Crossing> crossings, std::vector<int> loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& loops() const { return loops_; }
  int size() const { return static_cast<int>(crossings_.size()); }
  bool empty() const { return crossings_.empty() && loops_.empty(); }

  int n_plus() const;
  int n_minus() const;

  // Sorted list of all arc ids (crossing arcs and loops).
  std::vector<int> arcs() const;
  int max_arc() const;
  const ArcEnds& ends(int arc) const { return ends_.at(arc); }
  bool is_loop(int arc) const;

  // Components in order of their minimal arc id; each lists arcs in
  // traversal order starting from the minimal arc.
  std::vector<std::vector<int>> components() const;
  int component_of(int arc) const;

  // Faces of the planar embedding encoded by the ccw slot order. Loops do
  // not participate.
  std::vector<std::vector<FaceSide>> faces() const;

  // Half the signed count of crossings between two distinct components.
  int linking_number(int comp_a, int comp_b) const;
  int writhe() const { return n_plus() - n_minus(); }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.loops_ == b.loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> loops_;
  std::map<int, ArcEnds> ends_;
};

// Text format: see docs/formats.md.
Diagram parse_pd(std::string_view text);
std::string serialize_pd(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram reverse_components(const Diagram& d, const std::vector<int>& components);
Diagram disjoint_union(const Diagram& a, const Diagram& b);
// Relabels arcs to 1..N in order of first appearance along components;
// crossings are kept in input order.
Diagram relabel(const Diagram& d);
// Relabels arcs and reorders nothing; returns the old->new map.
Diagram relabel(const Diagram& d, std::map<int, int>& old_to_new);
// Canonical text used to compare diagrams up to arc relabeling and crossing
// order.
std::string canonical_form(const Diagram& d);

// Builds a crossing from four half-edges listed counterclockwise. Strands are
// (0,2) and (1,3); `under` is 0 or 1 selecting the under-strand.
struct PlacedEnd {
  int arc = -1;
  bool incoming = false;
};
Crossing place_crossing(const std::array<PlacedEnd, 4>& ccw, int under);

}  // namespace khoxotic
