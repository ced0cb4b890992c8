#include "khoxotic/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace khoxotic {

int PlanarBuilder::add_crossing(int over) {
  over_.push_back(over);
  link_.push_back({});
  return static_cast<int>(over_.size()) - 1;
}

void PlanarBuilder::connect(Port a, Port b) {
  link_.at(a.crossing)[a.slot] = b;
  link_.at(b.crossing)[b.slot] = a;
}

Diagram PlanarBuilder::build() const {
  const int n = static_cast<int>(over_.size());
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      if (link_[c][s].crossing < 0) throw std::logic_error("PlanarBuilder: unconnected port");

  std::vector<std::array<int, 4>> arc(n, {0, 0, 0, 0});
  std::vector<std::array<bool, 4>> incoming(n, {false, false, false, false});
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  int next_id = 1;
  for (int c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[c0][s0]) continue;
      // Trace entering at (c0,s0); collect passages.
      std::vector<std::pair<Port, Port>> passages;  // (entry, exit)
      Port in{c0, s0};
      do {
        Port out{in.crossing, (in.slot + 2) & 3};
        passages.push_back({in, out});
        seen[in.crossing][in.slot] = seen[out.crossing][out.slot] = true;
        in = link_[out.crossing][out.slot];
      } while (!(in.crossing == c0 && in.slot == s0));
      bool reverse = false;
      for (const Port& sd : seeds_) {
        bool hit = false;
        for (const auto& [e, x] : passages) {
          if (e.crossing == sd.crossing && e.slot == sd.slot) { hit = true; break; }
          if (x.crossing == sd.crossing && x.slot == sd.slot) { hit = true; reverse = true; break; }
        }
        if (hit) break;
      }
      // Arcs run from each exit port to the next entry port.
      for (size_t k = 0; k < passages.size(); ++k) {
        const Port x = passages[k].second;
        const Port e = passages[(k + 1) % passages.size()].first;
        const int id = next_id++;
        arc[x.crossing][x.slot] = id;
        arc[e.crossing][e.slot] = id;
        incoming[e.crossing][e.slot] = !reverse;
        incoming[x.crossing][x.slot] = reverse;
      }
    }
  }
  std::vector<Crossing> xs;
  for (int c = 0; c < n; ++c) {
    std::array<PlacedEnd, 4> ends;
    for (int s = 0; s < 4; ++s) ends[s] = {arc[c][s], incoming[c][s]};
    xs.push_back(place_crossing(ends, 1 - over_[c]));
  }
  std::vector<int> loops;
  for (int i = 0; i < loops_; ++i) loops.push_back(next_id++);
  return Diagram(std::move(xs), std::move(loops));
}

Diagram braid_closure(int strands, const std::vector<int>& word, const std::vector<int>& reversed_positions) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  using Port = PlanarBuilder::Port;
  PlanarBuilder b;
  std::vector<Port> first(strands), top(strands);
  std::vector<bool> touched(strands, false);
  // Ports listed counterclockwise: 0 = bottom right, 1 = top right,
  // 2 = top left, 3 = bottom left.
  for (int letter : word) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= strands) throw std::invalid_argument("braid_closure: bad letter " + std::to_string(letter));
    const int left = i - 1, right = i;
    // The strand moving right (bottom left to top right) is over for a
    // positive letter.
    const int c = b.add_crossing(letter > 0 ? 1 : 0);
    const Port bl{c, 3}, br{c, 0}, tl{c, 2}, tr{c, 1};
    for (auto [pos, port] : {std::pair{left, bl}, std::pair{right, br}}) {
      if (touched[pos]) b.connect(top[pos], port);
      else first[pos] = port;
      touched[pos] = true;
    }
    top[left] = tl;
    top[right] = tr;
  }
  for (int k = 0; k < strands; ++k) {
    if (!touched[k]) {
      b.add_loop();
      continue;
    }
    b.connect(top[k], first[k]);
  }
  for (int k = 0; k < strands; ++k) {
    if (!touched[k]) continue;
    const bool rev = std::find(reversed_positions.begin(), reversed_positions.end(), k) != reversed_positions.end();
    b.seed(rev ? top[k] : first[k]);
  }
  return b.build();
}

Diagram torus_link(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("torus_link: need p,q >= 0 and p+q >= 1");
  const int n = p + q;
  std::vector<int> word;
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) word.push_back(i);
  std::vector<int> rev;
  for (int k = n - q; k < n; ++k) rev.push_back(k);
  return braid_closure(n, word, rev);
}

Diagram pretzel(const std::vector<int>& columns) {
  using Port = PlanarBuilder::Port;
  if (columns.empty()) throw std::invalid_argument("pretzel: no columns");
  PlanarBuilder b;
  // Ports: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
  std::vector<Port> tl, tr, bl, br;
  for (int a : columns) {
    if (a == 0) throw std::invalid_argument("pretzel: empty column");
    int prev = -1;
    for (int k = 0; k < std::abs(a); ++k) {
      const int c = b.add_crossing(a > 0 ? 0 : 1);
      if (prev < 0) {
        tl.push_back({c, 1});
        tr.push_back({c, 0});
      } else {
        b.connect({prev, 2}, {c, 1});
        b.connect({prev, 3}, {c, 0});
      }
      prev = c;
    }
    bl.push_back({prev, 2});
    br.push_back({prev, 3});
  }
  const int m = static_cast<int>(columns.size());
  for (int i = 0; i + 1 < m; ++i) {
    b.connect(tr[i], tl[i + 1]);
    b.connect(br[i], bl[i + 1]);
  }
  b.connect(tl[0], tr[m - 1]);
  b.connect(bl[0], br[m - 1]);
  return b.build();
}

Diagram TwistTemplate::instantiate(int k) const {
  if (k < min_k) throw std::invalid_argument("template " + name + " is defined for k >= " + std::to_string(min_k));
  std::vector<int> cols = base_columns;
  for (size_t i = 0; i < cols.size(); ++i) cols[i] += k * twist_per_k.at(i);
  return pretzel(cols);
}

TwistTemplate parse_template(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  TwistTemplate t;
  if (j.value("family", std::string("pretzel")) != "pretzel")
    throw ParseError(ParseError::Kind::Syntax, "unsupported template family");
  t.name = j.value("name", std::string("J"));
  t.base_columns = j.at("columns").get<std::vector<int>>();
  t.twist_per_k = j.at("twist_per_k").get<std::vector<int>>();
  t.min_k = j.value("min_k", 0);
  if (t.base_columns.size() != t.twist_per_k.size())
    throw ParseError(ParseError::Kind::Syntax, "columns and twist_per_k differ in length");
  for (int d : t.twist_per_k)
    if (d % 2 != 0) throw ParseError(ParseError::Kind::Syntax, "twist increments must be full twists");
  return t;
}

std::string serialize_template(const TwistTemplate& t) {
  nlohmann::ordered_json j;
  j["family"] = "pretzel";
  j["name"] = t.name;
  j["columns"] = t.base_columns;
  j["twist_per_k"] = t.twist_per_k;
  j["min_k"] = t.min_k;
  return j.dump(2) + "\n";
}

}  // namespace khoxotic
