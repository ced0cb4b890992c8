#include "khoxotic/moves.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace khoxotic {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R3: return "R3";
    case MoveKind::Birth: return "birth";
    case MoveKind::Death: return "death";
    case MoveKind::Saddle: return "saddle";
    case MoveKind::Relabel: return "relabel";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus, MoveKind::R2Plus, MoveKind::R3,
                     MoveKind::Birth, MoveKind::Death, MoveKind::Saddle, MoveKind::Relabel})
    if (to_string(k) == s) return k;
  throw MoveError("unknown move kind '" + s + "'");
}

namespace {

[[noreturn]] void illegal(const std::string& what) { throw MoveError(what); }

bool valid_crossing(const Diagram& d, int c) { return c >= 0 && c < d.size(); }

}  // namespace

Diagram remove_crossings(const Diagram& d, const std::set<int>& S, const std::set<int>& internal,
                         std::map<int, int>* arc_map) {
  const auto& xs = d.crossings();
  std::map<int, int> run_of;
  auto next_arc = [&](int a) {
    const HalfEdge h = d.ends(a).head;
    return xs[h.crossing].arcs[(h.slot + 2) & 3];
  };
  for (int a : d.arcs()) {
    if (d.is_loop(a) || S.count(d.ends(a).tail.crossing)) continue;
    int cur = a;
    while (true) {
      run_of[cur] = a;
      if (!S.count(d.ends(cur).head.crossing)) break;
      cur = next_arc(cur);
    }
  }
  std::vector<int> loops = d.loops();
  for (int a : d.arcs()) {
    if (d.is_loop(a) || run_of.count(a)) continue;
    std::vector<int> cycle;
    int cur = a;
    while (!run_of.count(cur)) {
      run_of[cur] = -1;
      cycle.push_back(cur);
      cur = next_arc(cur);
    }
    int id = -1;
    for (int x : cycle)
      if (!internal.count(x) && (id < 0 || x < id)) id = x;
    if (id < 0) id = *std::min_element(cycle.begin(), cycle.end());
    loops.push_back(id);
  }
  std::vector<Crossing> out;
  for (int c = 0; c < d.size(); ++c) {
    if (S.count(c)) continue;
    Crossing x = xs[c];
    for (int s = 0; s < 4; ++s)
      if (!x.outgoing(s)) x.arcs[s] = run_of.at(x.arcs[s]);
    out.push_back(x);
  }
  if (arc_map) {
    arc_map->clear();
    std::map<int, int> cycle_id;
    for (int l : loops) cycle_id[l] = l;
    for (const auto& [a, r] : run_of) (*arc_map)[a] = r;
    // Arcs on closed runs point at the loop id chosen for their cycle.
    for (auto& [a, r] : *arc_map) {
      if (r >= 0) continue;
      int cur = a;
      std::vector<int> seen;
      while (!cycle_id.count(cur)) {
        seen.push_back(cur);
        cur = next_arc(cur);
      }
      for (int x : seen) cycle_id[x] = cycle_id[cur];
      r = cycle_id[cur];
    }
    for (int l : d.loops()) (*arc_map)[l] = l;
  }
  return Diagram(std::move(out), std::move(loops));
}

namespace {

// Slot of `arc` at crossing c on the given end.
int slot_at(const Diagram& d, int arc, int c) {
  const ArcEnds& e = d.ends(arc);
  if (e.tail.crossing == c) return e.tail.slot;
  if (e.head.crossing == c) return e.head.slot;
  return -1;
}

// Connected pieces of the crossing graph; returns piece index per crossing.
std::vector<int> pieces(const Diagram& d) {
  std::vector<int> parent(d.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a : d.arcs()) {
    if (d.is_loop(a)) continue;
    parent[find(d.ends(a).tail.crossing)] = find(d.ends(a).head.crossing);
  }
  std::vector<int> out(d.size());
  for (int c = 0; c < d.size(); ++c) out[c] = find(c);
  return out;
}

bool is_bigon(const Diagram& d, const std::vector<FaceSide>& face, int& c1, int& c2) {
  if (face.size() != 2) return false;
  const int a = face[0].arc, b = face[1].arc;
  if (a == b) return false;
  const ArcEnds& ea = d.ends(a);
  const ArcEnds& eb = d.ends(b);
  std::set<int> ca{ea.tail.crossing, ea.head.crossing}, cb{eb.tail.crossing, eb.head.crossing};
  if (ca.size() != 2 || ca != cb) return false;
  c1 = *ca.begin();
  c2 = *ca.rbegin();
  // One strand must pass over at both crossings.
  return (slot_at(d, a, c1) & 1) == (slot_at(d, a, c2) & 1);
}

// Model of three lines in a disk with ports p0..p5 counterclockwise, line l
// joining p_l and p_{l+3}. In configuration A each line meets the others in
// increasing index order from p_l; B is the reverse.
struct R3Model {
  std::array<int, 6> port{};
  std::array<int, 3> inner{};
  std::array<bool, 3> forward{};  // oriented p_l -> p_{l+3}
  std::array<int, 3> height{};

  Crossing build(int l, int m, bool config_a) const {
    static const int ord_a[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    static const int ord_b[3][2] = {{2, 1}, {2, 0}, {1, 0}};
    const auto& ord = config_a ? ord_a : ord_b;
    const std::array<int, 4> ports{l, m, l + 3, m + 3};
    std::array<PlacedEnd, 4> ccw;
    for (int t = 0; t < 4; ++t) {
      const int k = ports[t];
      const int ll = k % 3;
      const int other = ll == l ? m : l;
      const int pos = ord[ll][0] == other ? 0 : 1;
      if (k == ll) ccw[t] = {pos == 0 ? port[ll] : inner[ll], forward[ll]};
      else ccw[t] = {pos == 1 ? port[ll + 3] : inner[ll], !forward[ll]};
    }
    return place_crossing(ccw, height[l] > height[m] ? 0 : 1);
  }
};

}  // namespace

Diagram r1_remove(const Diagram& d, int crossing, int kink) {
  if (!valid_crossing(d, crossing)) illegal("R1: no crossing " + std::to_string(crossing));
  const auto arcs = d.arcs();
  if (!std::binary_search(arcs.begin(), arcs.end(), kink) || d.is_loop(kink)) illegal("R1: bad kink arc");
  const ArcEnds& e = d.ends(kink);
  if (e.tail.crossing != crossing || e.head.crossing != crossing) illegal("R1: arc does not return to the crossing");
  const int gap = (e.tail.slot - e.head.slot + 4) & 3;
  if (gap != 1 && gap != 3) illegal("R1: kink slots not adjacent");
  return remove_crossings(d, {crossing}, {kink});
}

Diagram r2_remove(const Diagram& d, int c1, int c2) {
  if (!valid_crossing(d, c1) || !valid_crossing(d, c2) || c1 == c2) illegal("R2: bad crossings");
  for (const auto& face : d.faces()) {
    int a = -1, b = -1;
    if (is_bigon(d, face, a, b) && a == std::min(c1, c2) && b == std::max(c1, c2))
      return remove_crossings(d, {c1, c2}, {face[0].arc, face[1].arc});
  }
  illegal("R2: crossings " + std::to_string(c1) + "," + std::to_string(c2) + " do not bound a removable bigon");
}

namespace {

// Fills `site` from a triangular face; false if the strands are not stacked.
bool site_from_face(const Diagram& d, const std::set<int>& cs, const std::vector<FaceSide>& face, R3Site& site) {
  if (face.size() != 3) return false;
  std::set<std::set<int>> pairs;
  for (int k = 0; k < 3; ++k) {
    const int a = face[k].arc;
    const ArcEnds& e = d.ends(a);
    if (!cs.count(e.tail.crossing) || !cs.count(e.head.crossing) || e.tail.crossing == e.head.crossing) return false;
    pairs.insert({e.tail.crossing, e.head.crossing});
    int off = -1;
    for (int c : cs)
      if (c != e.tail.crossing && c != e.head.crossing) off = c;
    site.inner[k] = a;
    site.lines_crossing[k] = off;
  }
  if (pairs.size() != 3) return false;
  // Line k runs over at a crossing when its arc sits in an odd slot there.
  std::array<int, 3> overs{};
  for (int k = 0; k < 3; ++k) {
    const ArcEnds& e = d.ends(site.inner[k]);
    overs[k] = (e.tail.slot & 1) + (e.head.slot & 1);
  }
  std::array<int, 3> sorted = overs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) return false;
  for (int k = 0; k < 3; ++k) {
    site.height[k] = 2 - overs[k];
    if (overs[k] == 2) site.top = k;
  }
  return true;
}

}  // namespace

R3Site r3_site(const Diagram& d, int c1, int c2, int c3, const std::vector<int>& inner_hint) {
  const std::set<int> cs{c1, c2, c3};
  if (cs.size() != 3 || !valid_crossing(d, c1) || !valid_crossing(d, c2) || !valid_crossing(d, c3))
    illegal("R3: need three distinct crossings");
  const std::set<int> hint(inner_hint.begin(), inner_hint.end());
  for (const auto& face : d.faces()) {
    R3Site site;
    if (!site_from_face(d, cs, face, site)) continue;
    if (!hint.empty() && hint != std::set<int>(site.inner.begin(), site.inner.end())) continue;
    return site;
  }
  illegal("R3: no stacked triangle on crossings " + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3));
}

Diagram r3_apply(const Diagram& d, int c1, int c2, int c3, const std::vector<int>& inner_hint) {
  const R3Site site = r3_site(d, c1, c2, c3, inner_hint);
  const auto& xs = d.crossings();
  std::array<int, 3> in_port{}, out_port{};
  for (int k = 0; k < 3; ++k) {
    const ArcEnds& e = d.ends(site.inner[k]);
    in_port[k] = xs[e.tail.crossing].arcs[(e.tail.slot + 2) & 3];
    out_port[k] = xs[e.head.crossing].arcs[(e.head.slot + 2) & 3];
  }
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int flips = 0; flips < 8; ++flips) {
      R3Model model;
      for (int l = 0; l < 3; ++l) {
        const int a = perm[l];
        const bool flip = (flips >> l) & 1;
        model.port[l] = flip ? out_port[a] : in_port[a];
        model.port[l + 3] = flip ? in_port[a] : out_port[a];
        model.forward[l] = !flip;
        model.inner[l] = site.inner[a];
        model.height[l] = site.height[a];
      }
      for (bool config_a : {true, false}) {
        bool match = true;
        for (int l = 0; l < 3 && match; ++l)
          for (int m = l + 1; m < 3 && match; ++m) {
            const int third = 3 - perm[l] - perm[m];
            match = model.build(l, m, config_a) == xs[site.lines_crossing[third]];
          }
        if (!match) continue;
        std::vector<Crossing> out = xs;
        for (int l = 0; l < 3; ++l)
          for (int m = l + 1; m < 3; ++m) out[site.lines_crossing[3 - perm[l] - perm[m]]] = model.build(l, m, !config_a);
        return Diagram(std::move(out), d.loops());
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  illegal("R3: local picture not recognised");
}

bool saddle_allowed(const Diagram& d, int e, int f) {
  if (e == f || d.is_loop(e) || d.is_loop(f)) return false;
  const auto arcs = d.arcs();
  if (!std::binary_search(arcs.begin(), arcs.end(), e) || !std::binary_search(arcs.begin(), arcs.end(), f)) return false;
  const auto piece = pieces(d);
  if (piece[d.ends(e).tail.crossing] != piece[d.ends(f).tail.crossing]) return true;
  for (const auto& face : d.faces()) {
    int fe = -1, ff = -1;
    for (const auto& s : face) {
      if (s.arc == e) fe = s.forward;
      if (s.arc == f) ff = s.forward;
    }
    if (fe >= 0 && fe == ff) return true;
  }
  return false;
}

Diagram saddle(const Diagram& d, int e, int f, int new_arc) {
  const auto arcs = d.arcs();
  auto has = [&](int a) { return std::binary_search(arcs.begin(), arcs.end(), a); };
  if (!has(e) || !has(f)) illegal("saddle: unknown arc");
  std::vector<int> loops = d.loops();
  if (e == f) {
    const int id = new_arc ? new_arc : d.max_arc() + 1;
    if (has(id)) illegal("saddle: arc id " + std::to_string(id) + " already used");
    loops.push_back(id);
    std::sort(loops.begin(), loops.end());
    return Diagram(d.crossings(), std::move(loops));
  }
  if (d.is_loop(e) || d.is_loop(f)) {
    const int gone = d.is_loop(f) ? f : e;
    loops.erase(std::find(loops.begin(), loops.end(), gone));
    return Diagram(d.crossings(), std::move(loops));
  }
  if (!saddle_allowed(d, e, f)) illegal("saddle: arcs " + std::to_string(e) + "," + std::to_string(f) + " are not antiparallel across a face");
  std::vector<Crossing> xs = d.crossings();
  const HalfEdge he = d.ends(e).head, hf = d.ends(f).head;
  xs[he.crossing].arcs[he.slot] = f;
  xs[hf.crossing].arcs[hf.slot] = e;
  return Diagram(std::move(xs), std::move(loops));
}

Diagram birth(const Diagram& d, int loop_arc) {
  const int id = loop_arc ? loop_arc : d.max_arc() + 1;
  const auto arcs = d.arcs();
  if (std::binary_search(arcs.begin(), arcs.end(), id)) illegal("birth: arc id in use");
  std::vector<int> loops = d.loops();
  loops.push_back(id);
  std::sort(loops.begin(), loops.end());
  return Diagram(d.crossings(), std::move(loops));
}

Diagram death(const Diagram& d, int loop_arc) {
  if (!d.is_loop(loop_arc)) illegal("death: " + std::to_string(loop_arc) + " is not a crossingless circle");
  std::vector<int> loops = d.loops();
  loops.erase(std::find(loops.begin(), loops.end(), loop_arc));
  return Diagram(d.crossings(), std::move(loops));
}

Diagram relabel_move(const Diagram& d, const std::map<int, int>& arc_map, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != d.size()) illegal("relabel: order has wrong length");
  std::vector<int> seen(order);
  std::sort(seen.begin(), seen.end());
  for (int k = 0; k < d.size(); ++k)
    if (seen[k] != k) illegal("relabel: order is not a permutation");
  std::set<int> targets;
  for (int a : d.arcs()) {
    auto it = arc_map.find(a);
    if (it == arc_map.end()) illegal("relabel: arc " + std::to_string(a) + " missing from map");
    if (!targets.insert(it->second).second || it->second <= 0) illegal("relabel: map is not injective");
  }
  std::vector<Crossing> xs;
  for (int k : order) {
    Crossing x = d.crossings()[k];
    for (int& a : x.arcs) a = arc_map.at(a);
    xs.push_back(x);
  }
  std::vector<int> loops;
  for (int l : d.loops()) loops.push_back(arc_map.at(l));
  std::sort(loops.begin(), loops.end());
  return Diagram(std::move(xs), std::move(loops));
}

Diagram apply_move(const Diagram& d, const Move& m) {
  auto need = [&](size_t nc, size_t na) {
    if (m.crossings.size() != nc || m.arcs.size() != na) illegal(to_string(m.kind) + ": wrong site size");
  };
  switch (m.kind) {
    case MoveKind::R1Minus: need(1, 1); return r1_remove(d, m.crossings[0], m.arcs[0]);
    case MoveKind::R2Minus: need(2, 0); return r2_remove(d, m.crossings[0], m.crossings[1]);
    case MoveKind::R3:
      if (m.crossings.size() != 3 || (m.arcs.size() != 0 && m.arcs.size() != 3)) illegal("R3: wrong site size");
      return r3_apply(d, m.crossings[0], m.crossings[1], m.crossings[2], m.arcs);
    case MoveKind::Birth: need(0, 1); return birth(d, m.arcs[0]);
    case MoveKind::Death: need(0, 1); return death(d, m.arcs[0]);
    case MoveKind::Saddle: need(0, 2); return saddle(d, m.arcs[0], m.arcs[1], m.new_arc);
    case MoveKind::Relabel: return relabel_move(d, m.arc_map, m.order);
    case MoveKind::R1Plus:
    case MoveKind::R2Plus: illegal(to_string(m.kind) + " is specified on the later frame");
  }
  illegal("unknown move");
}

bool move_connects(const Diagram& before, const Move& m, const Diagram& after) {
  try {
    if (m.kind == MoveKind::R1Plus) return apply_move(after, {MoveKind::R1Minus, m.crossings, m.arcs}) == before;
    if (m.kind == MoveKind::R2Plus) return apply_move(after, {MoveKind::R2Minus, m.crossings, m.arcs}) == before;
    return apply_move(before, m) == after;
  } catch (const MoveError&) {
    return false;
  } catch (const ParseError&) {
    return false;
  }
}

Move inverse_move(const Move& m, const Diagram& before, const Diagram& after) {
  Move inv = m;
  switch (m.kind) {
    case MoveKind::R1Minus: inv.kind = MoveKind::R1Plus; break;
    case MoveKind::R1Plus: inv.kind = MoveKind::R1Minus; break;
    case MoveKind::R2Minus: inv.kind = MoveKind::R2Plus; break;
    case MoveKind::R2Plus: inv.kind = MoveKind::R2Minus; break;
    case MoveKind::R3: break;
    case MoveKind::Birth: inv.kind = MoveKind::Death; break;
    case MoveKind::Death: inv.kind = MoveKind::Birth; break;
    case MoveKind::Saddle: {
      const int e = m.arcs[0], f = m.arcs[1];
      inv.new_arc = 0;
      if (e == f) {
        const int created = m.new_arc ? m.new_arc : before.max_arc() + 1;
        inv.arcs = {e, created};
      } else if (before.is_loop(e) || before.is_loop(f)) {
        const int gone = before.is_loop(f) ? f : e;
        const int kept = gone == f ? e : f;
        inv.arcs = {kept, kept};
        inv.new_arc = gone;
      }
      break;
    }
    case MoveKind::Relabel: {
      inv.arc_map.clear();
      for (const auto& [a, b] : m.arc_map) inv.arc_map[b] = a;
      inv.order.assign(m.order.size(), 0);
      for (size_t k = 0; k < m.order.size(); ++k) inv.order[m.order[k]] = static_cast<int>(k);
      break;
    }
  }
  (void)after;
  return inv;
}

std::vector<Move> r1_sites(const Diagram& d) {
  std::vector<Move> out;
  for (int a : d.arcs()) {
    if (d.is_loop(a)) continue;
    const ArcEnds& e = d.ends(a);
    if (e.tail.crossing != e.head.crossing) continue;
    const int gap = (e.tail.slot - e.head.slot + 4) & 3;
    if (gap == 1 || gap == 3) out.push_back({MoveKind::R1Minus, {e.tail.crossing}, {a}});
  }
  std::sort(out.begin(), out.end(), [](const Move& x, const Move& y) {
    return std::tie(x.crossings, x.arcs) < std::tie(y.crossings, y.arcs);
  });
  return out;
}

std::vector<Move> r2_sites(const Diagram& d) {
  std::set<std::pair<int, int>> found;
  for (const auto& face : d.faces()) {
    int a = -1, b = -1;
    if (is_bigon(d, face, a, b)) found.insert({a, b});
  }
  std::vector<Move> out;
  for (const auto& [a, b] : found) out.push_back({MoveKind::R2Minus, {a, b}, {}});
  return out;
}

std::vector<Move> r3_sites(const Diagram& d) {
  std::set<std::pair<std::array<int, 3>, std::array<int, 3>>> found;
  for (const auto& face : d.faces()) {
    if (face.size() != 3) continue;
    std::set<int> cs;
    for (const auto& s : face) {
      cs.insert(d.ends(s.arc).tail.crossing);
      cs.insert(d.ends(s.arc).head.crossing);
    }
    if (cs.size() != 3) continue;
    R3Site site;
    if (!site_from_face(d, cs, face, site)) continue;
    std::array<int, 3> key, arcs = site.inner;
    std::copy(cs.begin(), cs.end(), key.begin());
    std::sort(arcs.begin(), arcs.end());
    found.insert({key, arcs});
  }
  std::vector<Move> out;
  for (const auto& [k, a] : found) out.push_back({MoveKind::R3, {k[0], k[1], k[2]}, {a[0], a[1], a[2]}});
  return out;
}

std::vector<std::pair<int, int>> saddle_sites(const Diagram& d) {
  std::set<std::pair<int, int>> found;
  for (const auto& face : d.faces())
    for (size_t x = 0; x < face.size(); ++x)
      for (size_t y = 0; y < face.size(); ++y)
        if (face[x].arc < face[y].arc && face[x].forward == face[y].forward) found.insert({face[x].arc, face[y].arc});
  return {found.begin(), found.end()};
}

std::optional<Move> find_relabel(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size() || a.loops().size() != b.loops().size() || a.n_plus() != b.n_plus()) return std::nullopt;
  const auto& xa = a.crossings();
  const auto& xb = b.crossings();
  const int n = a.size();
  std::vector<int> map_c(n, -1), used_b(n, 0);
  std::map<int, int> arc_map, arc_rev;
  // Grows the matching from a seed pair; undoes partial work on failure.
  auto grow = [&](int ca, int cb) {
    std::vector<std::pair<int, int>> stack{{ca, cb}};
    std::vector<int> touched_c;
    std::vector<int> touched_a;
    bool ok = true;
    while (!stack.empty() && ok) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (map_c[x] >= 0) {
        ok = map_c[x] == y;
        continue;
      }
      if (used_b[y] || xa[x].positive != xb[y].positive) {
        ok = false;
        break;
      }
      map_c[x] = y;
      used_b[y] = 1;
      touched_c.push_back(x);
      for (int s = 0; s < 4 && ok; ++s) {
        const int u = xa[x].arcs[s], v = xb[y].arcs[s];
        auto it = arc_map.find(u);
        if (it != arc_map.end()) {
          ok = it->second == v;
          continue;
        }
        if (arc_rev.count(v)) {
          ok = false;
          break;
        }
        arc_map[u] = v;
        arc_rev[v] = u;
        touched_a.push_back(u);
        const ArcEnds& ea = a.ends(u);
        const ArcEnds& eb = b.ends(v);
        if (ea.tail.slot != eb.tail.slot || ea.head.slot != eb.head.slot) {
          ok = false;
          break;
        }
        stack.push_back({ea.tail.crossing, eb.tail.crossing});
        stack.push_back({ea.head.crossing, eb.head.crossing});
      }
    }
    if (!ok) {
      for (int x : touched_c) {
        used_b[map_c[x]] = 0;
        map_c[x] = -1;
      }
      for (int u : touched_a) {
        arc_rev.erase(arc_map[u]);
        arc_map.erase(u);
      }
    }
    return ok;
  };
  for (int x = 0; x < n; ++x) {
    if (map_c[x] >= 0) continue;
    bool done = false;
    for (int y = 0; y < n && !done; ++y)
      if (!used_b[y]) done = grow(x, y);
    if (!done) return std::nullopt;
  }
  for (size_t k = 0; k < a.loops().size(); ++k) arc_map[a.loops()[k]] = b.loops()[k];
  Move m{MoveKind::Relabel, {}, {}};
  m.arc_map = arc_map;
  m.order.assign(n, 0);
  for (int x = 0; x < n; ++x) m.order[map_c[x]] = x;
  if (relabel_move(a, m.arc_map, m.order) != b) return std::nullopt;
  return m;
}

}  // namespace khoxotic
