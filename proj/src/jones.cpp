#include "khoxotic/jones.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace khoxotic {

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (const auto& [e, c] : b) out[e] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string to_string(const Laurent& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) out << mag;
    if (e != 0) out << var << (e != 1 ? "^" + std::to_string(e) : "");
  }
  return out.str();
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Laurent kauffman_bracket(const Diagram& d) {
  const int n = d.size();
  if (n > 24) throw std::invalid_argument("kauffman_bracket: too many crossings for the state sum");
  const int arcs = d.max_arc() + 1;
  // Number of states with each (A-count, circle count).
  std::map<std::pair<int, int>, std::int64_t> tally;
  std::vector<int> parent(arcs);
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings()[c].arcs;
      // The A-smoothing joins the regions swept counterclockwise by the
      // over-strand, i.e. it pairs the arcs (0,1) and (2,3).
      if (!((state >> c) & 1)) {
        ++a_count;
        parent[find(parent, x[0])] = find(parent, x[1]);
        parent[find(parent, x[2])] = find(parent, x[3]);
      } else {
        parent[find(parent, x[0])] = find(parent, x[3]);
        parent[find(parent, x[1])] = find(parent, x[2]);
      }
    }
    int circles = 0;
    for (int a : d.arcs())
      if (find(parent, a) == a) ++circles;
    ++tally[{a_count, circles}];
  }
  const Laurent delta{{2, -1}, {-2, -1}};
  Laurent out;
  for (const auto& [key, count] : tally) {
    const auto [a_count, circles] = key;
    Laurent term{{a_count - (n - a_count), count}};
    for (int i = 0; i < circles; ++i) term = term * delta;
    out = out + term;
  }
  return out;
}

Laurent jones_unnormalized(const Diagram& d) {
  const Laurent bracket = kauffman_bracket(d);
  const int w = d.writhe();
  // (-A^3)^{-w}
  const Laurent norm{{-3 * w, (w % 2 == 0) ? 1 : -1}};
  const Laurent f = norm * bracket;
  Laurent out;
  for (const auto& [e, c] : f) {
    if (e % 2 != 0) throw std::logic_error("jones: odd power of A");
    // A^e = (A^-2)^(-e/2) = (-q)^(-e/2)
    const int m = -e / 2;
    out[m] += (m % 2 == 0) ? c : -c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace khoxotic
