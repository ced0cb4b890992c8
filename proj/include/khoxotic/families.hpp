#pragma once

#include <string>
#include <utility>
#include <vector>

#include "khoxotic/diagram.hpp"

namespace khoxotic {

// Assembles a diagram from abstract crossings with four ports each (listed
// counterclockwise) and undirected connections between ports. Orientation is
// found by tracing; seeds fix the direction of individual components.
class PlanarBuilder {
 public:
  struct Port {
    int crossing = -1;
    int slot = -1;
  };
  // `over` selects the over-strand: 0 for ports (0,2), 1 for ports (1,3).
  int add_crossing(int over);
  void connect(Port a, Port b);
  void add_loop() { ++loops_; }
  // Component through `p` is oriented so that it enters its crossing at `p`.
  void seed(Port p) { seeds_.push_back(p); }
  Diagram build() const;

 private:
  std::vector<int> over_;
  std::vector<std::array<Port, 4>> link_;
  std::vector<Port> seeds_;
  int loops_ = 0;
};

// Closure of a braid word on `strands` strands. Letters are +i / -i for
// sigma_i^{+-1}, 1-based. Components through the listed bottom positions
// (0-based) are oriented downwards, all others upwards.
Diagram braid_closure(int strands, const std::vector<int>& word, const std::vector<int>& reversed_positions = {});

// Closure of the positive full twist on p+q strands with the last q strands
// reversed. One strand gives a crossingless circle.
Diagram torus_link(int p, int q);

// Pretzel link with the given signed column lengths.
Diagram pretzel(const std::vector<int>& columns);

struct TwistTemplate {
  std::string name;
  // Column lengths at k = 0; twist columns grow by 2|sign| crossings per k.
  std::vector<int> base_columns;
  std::vector<int> twist_per_k;  // signed increment per unit of k, per column
  int min_k = 0;
  Diagram instantiate(int k) const;
};

TwistTemplate parse_template(const std::string& json_text);
std::string serialize_template(const TwistTemplate& t);

}  // namespace khoxotic
