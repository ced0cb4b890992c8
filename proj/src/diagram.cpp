#include "khoxotic/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace khoxotic {

namespace {

struct Occurrence {
  int crossing;
  int slot;
};

// Both occurrences of every crossing arc, in (crossing, slot) order.
std::map<int, std::vector<Occurrence>> occurrences(const std::vector<Crossing>& xs) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    for (int s = 0; s < 4; ++s) occ[xs[i].arcs[s]].push_back({i, s});
  return occ;
}

Occurrence other_end(const std::map<int, std::vector<Occurrence>>& occ, int arc, Occurrence here) {
  const auto& v = occ.at(arc);
  if (v[0].crossing == here.crossing && v[0].slot == here.slot) return v[1];
  return v[0];
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<int> loops)
    : crossings_(std::move(crossings)), loops_(std::move(loops)) {
  std::sort(loops_.begin(), loops_.end());
  std::map<int, std::pair<int, int>> counts;  // arc -> (outgoing, incoming)
  for (int i = 0; i < size(); ++i) {
    const Crossing& x = crossings_[i];
    for (int s = 0; s < 4; ++s) {
      const int a = x.arcs[s];
      if (x.outgoing(s)) {
        ++counts[a].first;
        ends_[a].tail = {i, s};
      } else {
        ++counts[a].second;
        ends_[a].head = {i, s};
      }
    }
  }
  for (const auto& [arc, c] : counts) {
    if (c.first + c.second != 2)
      throw ParseError(ParseError::Kind::ArcMultiplicity,
                       "arc " + std::to_string(arc) + " appears " + std::to_string(c.first + c.second) + " times");
    if (c.first != 1)
      throw ParseError(ParseError::Kind::Orientation,
                       "arc " + std::to_string(arc) + " is not entered and left exactly once");
  }
  std::set<int> seen;
  for (int l : loops_) {
    if (counts.count(l) || !seen.insert(l).second)
      throw ParseError(ParseError::Kind::ArcMultiplicity, "loop arc " + std::to_string(l) + " reused");
  }
}

int Diagram::n_plus() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.positive; }));
}

int Diagram::n_minus() const { return size() - n_plus(); }

std::vector<int> Diagram::arcs() const {
  std::vector<int> out;
  out.reserve(ends_.size() + loops_.size());
  for (const auto& [a, e] : ends_) out.push_back(a);
  out.insert(out.end(), loops_.begin(), loops_.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Diagram::max_arc() const {
  int m = 0;
  if (!ends_.empty()) m = ends_.rbegin()->first;
  for (int l : loops_) m = std::max(m, l);
  return m;
}

bool Diagram::is_loop(int arc) const { return std::find(loops_.begin(), loops_.end(), arc) != loops_.end(); }

std::vector<std::vector<int>> Diagram::components() const {
  std::vector<std::vector<int>> comps;
  std::set<int> visited;
  for (int start : arcs()) {
    if (visited.count(start)) continue;
    std::vector<int> comp;
    if (is_loop(start)) {
      comp.push_back(start);
      visited.insert(start);
    } else {
      int a = start;
      while (!visited.count(a)) {
        visited.insert(a);
        comp.push_back(a);
        const HalfEdge h = ends_.at(a).head;
        a = crossings_[h.crossing].arcs[(h.slot + 2) & 3];
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

int Diagram::component_of(int arc) const {
  const auto comps = components();
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    if (std::find(comps[i].begin(), comps[i].end(), arc) != comps[i].end()) return i;
  throw std::out_of_range("arc " + std::to_string(arc) + " not in diagram");
}

std::vector<std::vector<FaceSide>> Diagram::faces() const {
  const auto occ = occurrences(crossings_);
  std::vector<std::array<bool, 4>> used(crossings_.size(), {false, false, false, false});
  std::vector<std::vector<FaceSide>> faces;
  for (int i = 0; i < size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      if (used[i][s]) continue;
      std::vector<FaceSide> face;
      Occurrence cur{i, s};
      while (!used[cur.crossing][cur.slot]) {
        used[cur.crossing][cur.slot] = true;
        const int arc = crossings_[cur.crossing].arcs[cur.slot];
        const bool forward = crossings_[cur.crossing].outgoing(cur.slot);
        face.push_back({arc, forward});
        const Occurrence far = other_end(occ, arc, cur);
        cur = {far.crossing, (far.slot + 1) & 3};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int Diagram::linking_number(int comp_a, int comp_b) const {
  const auto comps = components();
  std::map<int, int> comp_of;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int a : comps[c]) comp_of[a] = c;
  int total = 0;
  for (const Crossing& x : crossings_) {
    const int u = comp_of[x.arcs[0]];
    const int o = comp_of[x.arcs[1]];
    if ((u == comp_a && o == comp_b) || (u == comp_b && o == comp_a)) total += x.positive ? 1 : -1;
  }
  return total / 2;
}

Crossing place_crossing(const std::array<PlacedEnd, 4>& ccw, int under) {
  // Position of the incoming end of the under-strand.
  int start = -1;
  for (int p : {under, under + 2})
    if (ccw[p].incoming) start = p;
  if (start < 0 || ccw[(start + 2) & 3].incoming) throw std::logic_error("place_crossing: under-strand not oriented through");
  Crossing x;
  for (int s = 0; s < 4; ++s) x.arcs[s] = ccw[(start + s) & 3].arc;
  const int over_in = ccw[(start + 1) & 3].incoming ? 1 : 3;
  if (ccw[(start + 1) & 3].incoming == ccw[(start + 3) & 3].incoming)
    throw std::logic_error("place_crossing: over-strand not oriented through");
  x.positive = over_in == 3;
  return x;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::Syntax, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, int line) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) syntax(line, "expected integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_bracket(std::string_view body, char tag, int line) {
  if (body.size() < 3 || body[0] != tag || body[1] != '[' || body.back() != ']') syntax(line, "malformed entry");
  body = body.substr(2, body.size() - 3);
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    out.push_back(parse_int(body.substr(pos, comma - pos), line));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> raw;
  std::vector<int> loops;
  std::map<int, int> flags;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, 7) == "orient:") {
      std::string_view rest = line.substr(7);
      size_t p = 0;
      while (p < rest.size()) {
        size_t comma = rest.find(',', p);
        if (comma == std::string_view::npos) comma = rest.size();
        std::string_view item = trim(rest.substr(p, comma - p));
        p = comma + 1;
        if (item.empty()) continue;
        const size_t colon = item.find(':');
        if (colon == std::string_view::npos) syntax(line_no, "orient entry needs component:sign");
        const int comp = parse_int(item.substr(0, colon), line_no);
        const int sign = parse_int(item.substr(colon + 1), line_no);
        if (sign != 1 && sign != -1) syntax(line_no, "orientation flag must be +1 or -1");
        if (comp < 1) syntax(line_no, "components are numbered from 1");
        flags[comp] = sign;
      }
      continue;
    }
    // Several entries may share a line.
    size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == ',')) ++p;
      if (p >= line.size()) break;
      const size_t close = line.find(']', p);
      if (close == std::string_view::npos) syntax(line_no, "missing ']'");
      std::string_view entry = line.substr(p, close - p + 1);
      p = close + 1;
      if (entry[0] == 'X') {
        auto v = parse_bracket(entry, 'X', line_no);
        if (v.size() != 4) syntax(line_no, "X[] needs four arc ids");
        raw.push_back({v[0], v[1], v[2], v[3]});
      } else if (entry[0] == 'O') {
        auto v = parse_bracket(entry, 'O', line_no);
        if (v.size() != 1) syntax(line_no, "O[] needs one arc id");
        loops.push_back(v[0]);
      } else {
        syntax(line_no, "unknown entry '" + std::string(entry) + "'");
      }
    }
  }

  // Multiplicity.
  std::map<int, std::vector<Occurrence>> occ;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i)
    for (int s = 0; s < 4; ++s) occ[raw[i][s]].push_back({i, s});
  for (const auto& [arc, v] : occ)
    if (v.size() != 2)
      throw ParseError(ParseError::Kind::ArcMultiplicity,
                       "arc " + std::to_string(arc) + " appears " + std::to_string(v.size()) + " times");
  for (int l : loops)
    if (occ.count(l) || std::count(loops.begin(), loops.end(), l) != 1)
      throw ParseError(ParseError::Kind::ArcMultiplicity, "loop arc " + std::to_string(l) + " reused");

  // Trace unoriented components; record every passage (crossing, entry slot).
  struct Passage {
    int crossing;
    int in_slot;
  };
  std::set<std::pair<int, int>> used;  // (crossing, slot) entered or left
  std::vector<std::pair<int, std::vector<Passage>>> comps;  // (min arc, passages)
  std::vector<int> all_arcs;
  for (const auto& [a, v] : occ) all_arcs.push_back(a);
  std::set<int> arc_done;
  for (int start : all_arcs) {
    if (arc_done.count(start)) continue;
    std::vector<Passage> passages;
    int min_arc = start;
    // Enter through the first occurrence of the start arc.
    Occurrence cur = occ[start][0];
    int arc = start;
    while (true) {
      arc_done.insert(arc);
      min_arc = std::min(min_arc, arc);
      passages.push_back({cur.crossing, cur.slot});
      const int out_slot = (cur.slot + 2) & 3;
      const int next_arc = raw[cur.crossing][out_slot];
      const Occurrence far = other_end(occ, next_arc, {cur.crossing, out_slot});
      arc = next_arc;
      cur = far;
      if (cur.crossing == occ[start][0].crossing && cur.slot == occ[start][0].slot) break;
    }
    comps.push_back({min_arc, std::move(passages)});
  }
  for (int l : loops) comps.push_back({l, {}});
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [comp, sign] : flags)
    if (comp > static_cast<int>(comps.size()))
      throw ParseError(ParseError::Kind::Syntax, "orient names component " + std::to_string(comp) + " which does not exist");

  // Direction: under passages must agree; otherwise use the reference
  // direction (first crossing in file order entered through slot 3).
  // in_slot_final[crossing][strand] = entry slot of that strand.
  std::vector<std::array<int, 2>> entry(raw.size(), {-1, -1});
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const auto& passages = comps[c].second;
    if (passages.empty()) continue;
    int dir = 0;  // +1 keep traced direction, -1 reverse
    for (const Passage& p : passages) {
      if (p.in_slot == 0 || p.in_slot == 2) {
        const int d = p.in_slot == 0 ? 1 : -1;
        if (dir != 0 && dir != d)
          throw ParseError(ParseError::Kind::Orientation,
                           "component " + std::to_string(c + 1) + " passes under in both directions");
        dir = d;
      }
    }
    if (dir == 0) {
      const Passage* first = &passages[0];
      for (const Passage& p : passages)
        if (p.crossing < first->crossing) first = &p;
      dir = first->in_slot == 3 ? 1 : -1;
    }
    auto it = flags.find(c + 1);
    if (it != flags.end()) dir *= it->second;
    for (const Passage& p : passages) {
      const int in = dir > 0 ? p.in_slot : (p.in_slot + 2) & 3;
      entry[p.crossing][in & 1] = in;
    }
  }

  std::vector<Crossing> xs;
  xs.reserve(raw.size());
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    const int under_in = entry[i][0];
    const int over_in = entry[i][1];
    Crossing x;
    for (int s = 0; s < 4; ++s) x.arcs[s] = raw[i][(under_in + s) & 3];
    x.positive = ((over_in - under_in) & 3) == 3;
    xs.push_back(x);
  }
  return Diagram(std::move(xs), std::move(loops));
}

std::string serialize_pd(const Diagram& d) {
  std::ostringstream out;
  const auto comps = d.components();
  out << "orient:";
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    int flag = 1;
    if (!d.is_loop(comps[c][0])) {
      bool has_under = false;
      int first_x = -1;
      bool enters_d = false;
      for (int arc : comps[c]) {
        const HalfEdge h = d.ends(arc).head;
        if (h.slot == 0) has_under = true;
        if (first_x < 0 || h.crossing < first_x) {
          first_x = h.crossing;
          enters_d = h.slot == 3;
        }
      }
      if (!has_under && !enters_d) flag = -1;
    }
    out << (c ? ", " : " ") << (c + 1) << ":" << (flag > 0 ? "+1" : "-1");
  }
  out << "\n";
  for (const Crossing& x : d.crossings())
    out << "X[" << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2] << "," << x.arcs[3] << "]\n";
  for (int l : d.loops()) out << "O[" << l << "]\n";
  return out.str();
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.size());
  for (const Crossing& x : d.crossings()) {
    // Old over-strand becomes the under-strand; start from its incoming end.
    Crossing m;
    const int start = x.positive ? 3 : 1;
    for (int s = 0; s < 4; ++s) m.arcs[s] = x.arcs[(start + s) & 3];
    // The old under-strand (slots 0 -> 2) is now over; it enters at new slot
    // (0 - start) mod 4.
    m.positive = ((0 - start) & 3) == 3;
    xs.push_back(m);
  }
  return Diagram(std::move(xs), d.loops());
}

Diagram reverse_components(const Diagram& d, const std::vector<int>& which) {
  const auto comps = d.components();
  std::set<int> flipped;
  for (int c : which)
    for (int a : comps.at(c)) flipped.insert(a);
  std::vector<Crossing> xs;
  for (const Crossing& x : d.crossings()) {
    const bool under_flip = flipped.count(x.arcs[0]) > 0;
    const bool over_flip = flipped.count(x.arcs[1]) > 0;
    std::array<PlacedEnd, 4> ends;
    for (int s = 0; s < 4; ++s) {
      const bool flip = (s % 2 == 0) ? under_flip : over_flip;
      ends[s] = {x.arcs[s], x.outgoing(s) == flip};
    }
    xs.push_back(place_crossing(ends, 0));
  }
  return Diagram(std::move(xs), d.loops());
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  const int shift = a.max_arc();
  std::vector<Crossing> xs = a.crossings();
  for (Crossing x : b.crossings()) {
    for (int& arc : x.arcs) arc += shift;
    xs.push_back(x);
  }
  std::vector<int> loops = a.loops();
  for (int l : b.loops()) loops.push_back(l + shift);
  return Diagram(std::move(xs), std::move(loops));
}

Diagram relabel(const Diagram& d, std::map<int, int>& old_to_new) {
  old_to_new.clear();
  int next = 1;
  for (const auto& comp : d.components())
    for (int a : comp) old_to_new[a] = next++;
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& x : xs)
    for (int& a : x.arcs) a = old_to_new.at(a);
  std::vector<int> loops;
  for (int l : d.loops()) loops.push_back(old_to_new.at(l));
  return Diagram(std::move(xs), std::move(loops));
}

Diagram relabel(const Diagram& d) {
  std::map<int, int> m;
  return relabel(d, m);
}

namespace {

// Serialization of one connected piece explored from crossing `root`, with
// crossings and arcs numbered in BFS order.
std::string rooted_form(const Diagram& d, int root, std::vector<char>& touched) {
  const auto& xs = d.crossings();
  std::map<int, int> cross_id;
  std::map<int, int> arc_id;
  std::vector<int> order;
  std::vector<int> queue{root};
  cross_id[root] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int c = queue[qi];
    order.push_back(c);
    for (int s = 0; s < 4; ++s) {
      const int a = xs[c].arcs[s];
      if (!arc_id.count(a)) arc_id[a] = static_cast<int>(arc_id.size());
      const ArcEnds& e = d.ends(a);
      for (int nb : {e.tail.crossing, e.head.crossing})
        if (!cross_id.count(nb)) {
          cross_id[nb] = static_cast<int>(cross_id.size());
          queue.push_back(nb);
        }
    }
  }
  std::ostringstream out;
  for (int c : order) {
    touched[c] = 1;
    const Crossing& x = xs[c];
    out << (x.positive ? 'P' : 'N');
    for (int a : x.arcs) out << arc_id[a] << '.';
  }
  return out.str();
}

}  // namespace

std::string canonical_form(const Diagram& d) {
  std::vector<std::string> pieces;
  std::vector<char> touched(d.size(), 0);
  for (int c = 0; c < d.size(); ++c) {
    if (touched[c]) continue;
    std::vector<char> scratch(d.size(), 0);
    std::string best = rooted_form(d, c, scratch);
    std::vector<int> members;
    for (int i = 0; i < d.size(); ++i)
      if (scratch[i]) members.push_back(i);
    for (int m : members) {
      std::vector<char> s2(d.size(), 0);
      best = std::min(best, rooted_form(d, m, s2));
    }
    for (int m : members) touched[m] = 1;
    pieces.push_back(best);
  }
  std::sort(pieces.begin(), pieces.end());
  std::string out = "loops=" + std::to_string(d.loops().size());
  for (const auto& p : pieces) out += "|" + p;
  return out;
}

}  // namespace khoxotic
