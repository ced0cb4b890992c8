#include "khoxotic/cp2.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "json.hpp"

namespace khoxotic {

int grq(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("grq: need p, q >= 0 and p + q >= 1");
  return (p - q) * (p - q) - 2 * std::max(p, q);
}

void check_torus_feasible(int p, int q, double budget) {
  if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("torus link needs p, q >= 0 and p + q >= 1");
  const std::string name = "T(" + std::to_string(p + q) + "," + std::to_string(p + q) + ")";
  if (p + q > 5) throw InfeasibleError(name + " is outside the feasible range");
  const double est = estimate_generators(CubeData::from(torus_link(p, q)), Window{std::pair{0, 0}, std::nullopt});
  if (est > budget)
    throw InfeasibleError(name + " needs about " + std::to_string(static_cast<long long>(est)) + " generators");
}

mpz_class TorusProjection::project(const SparseVec& cycle) const {
  const auto c = kh->free_coords(0, j, cycle);
  return c.empty() ? mpz_class(0) : c[0];
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, TorusProjection> projections;
std::map<std::pair<int, int>, std::shared_ptr<const KhHomology>> slices;

}  // namespace

TorusProjection torus_projection(int p, int q, double budget) {
  check_torus_feasible(p, q, budget);
  std::lock_guard lock(cache_mutex);
  auto it = projections.find({p, q});
  if (it != projections.end()) return it->second;
  TorusProjection t;
  t.p = p;
  t.q = q;
  t.j = grq(p, q);
  t.diagram = torus_link(p, q);
  t.kh = std::make_shared<const KhHomology>(t.diagram, Window::at(0, t.j));
  const HomologyGroup& g = t.kh->group(0, t.j);
  if (g.free_rank != 1 || !g.torsion.empty())
    throw std::logic_error("Kh^{0,grq} of torus_link(" + std::to_string(p) + "," + std::to_string(q) +
                           ") is not infinite cyclic");
  t.generator = t.kh->lift_free(0, t.j, 0);
  return projections.emplace(std::pair{p, q}, t).first->second;
}

std::shared_ptr<const KhHomology> torus_slice(int p, int q, double budget) {
  check_torus_feasible(p, q, budget);
  std::lock_guard lock(cache_mutex);
  auto& s = slices[{p, q}];
  if (!s) s = std::make_shared<const KhHomology>(torus_link(p, q), Window{std::pair{0, 0}, std::nullopt});
  return s;
}

std::string serialize_cp2(const CP2SurfacePresentation& s) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["p"] = s.p;
  j["q"] = s.q;
  j["neck"] = nlohmann::json::parse(movie_to_json(s.neck));
  return j.dump(1) + "\n";
}

CP2SurfacePresentation parse_cp2(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cp2: ") + e.what());
  }
  if (j.value("version", 0) != 1) throw std::invalid_argument("cp2: unsupported version");
  CP2SurfacePresentation s;
  s.p = j.at("p").get<int>();
  s.q = j.at("q").get<int>();
  if (s.p < 0 || s.q < 0 || s.p + s.q == 0) throw std::invalid_argument("cp2: need p, q >= 0 and p + q >= 1");
  s.neck = movie_from_json(j.at("neck").dump());
  return s;
}

CP2SurfacePresentation blow_up(const BandPresentation& b, const SimplifyOptions& opt) {
  CP2SurfacePresentation s;
  s.neck = bands_to_movie(b, opt);
  if (s.neck.moves.empty() || s.neck.moves.back().kind != MoveKind::Death)
    throw MoveError("blow_up: ribbon movie does not end with a death");
  s.neck.moves.pop_back();
  s.neck.frames.pop_back();
  const Diagram target = torus_link(1, 0);
  const int from = s.neck.back().loops().at(0), to = target.loops().at(0);
  if (from != to) s.neck.push({MoveKind::Relabel, {}, {}, 0, {{from, to}}, {}});
  return s;
}

Functional cp2_functional(const CP2SurfacePresentation& s, const KhHomology& kh) {
  const TorusProjection t = torus_projection(s.p, s.q);
  if (!(s.neck.back() == t.diagram))
    throw MapError("cp2: neck movie does not end at torus_link(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")");
  const CubeData src = CubeData::from(s.neck.frames.front());
  if (src.quads != kh.complex().cube.quads || src.loops != kh.complex().cube.loops)
    throw MapError("cp2: neck movie does not start at the diagram of the homology");
  MovieMap f(s.neck);
  Functional out;
  out.i = 0;
  out.j = t.j - f.q_shift();
  const HomologyGroup& h = kh.group(out.i, out.j);
  for (int k = 0; k < h.free_rank; ++k) out.values.push_back(t.project(f(kh.lift_free(out.i, out.j, k))));
  out.normalize();
  return out;
}

namespace {

// Greedy simplification of `d` until `done` holds; nullopt if stuck.
template <class Done>
std::optional<Movie> simplify_until(const Diagram& d, Done done, const SimplifyOptions& opt = {}) {
  Movie m = Movie::starting_at(d);
  while (!done(m.back())) {
    if (static_cast<int>(m.frames.size()) > opt.max_frames || m.back().size() == 0) return std::nullopt;
    auto r1 = r1_sites(m.back());
    if (!r1.empty()) {
      m.push(r1.front());
      continue;
    }
    auto r2 = r2_sites(m.back());
    if (!r2.empty()) {
      m.push(r2.front());
      continue;
    }
    // One R3 at a time is enough for peeling a band off.
    bool moved = false;
    for (const Move& r3 : r3_sites(m.back())) {
      const Diagram next = apply_move(m.back(), r3);
      if (!r1_sites(next).empty() || !r2_sites(next).empty()) {
        m.push(r3);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return m;
}

}  // namespace

TwoSaddle two_saddle_map(int p, int q, int attach) {
  check_torus_feasible(p + 1, q + 1);
  if (p == 0 && q == 0) throw std::invalid_argument("two_saddle_map: need p + q >= 1");
  const int n = p + q;
  const Diagram big = torus_link(p + 1, q + 1);
  auto done = [n](const Diagram& d) {
    return d.size() == n * (n - 1) && static_cast<int>(d.loops().size()) == (n == 1 ? 2 : 1);
  };
  for (const auto& [e, f] : saddle_sites(big)) {
    const Diagram cut = saddle(big, e, f);
    if (static_cast<int>(cut.components().size()) != n + 1) continue;
    auto peel = simplify_until(cut, done);
    if (!peel) continue;
    // Split the end frame into the smaller link and the unknot.
    const Diagram& end = peel->back();
    const int u = end.loops().back();
    std::vector<int> rest = end.loops();
    rest.pop_back();
    const Diagram small(end.crossings(), rest);
    const auto arcs = small.arcs();
    if (attach < 0 || attach >= static_cast<int>(arcs.size())) throw std::invalid_argument("two_saddle_map: bad strand");

    TwoSaddle out;
    out.p = p;
    out.q = q;
    const Diagram standard = torus_link(p, q);
    if (auto r = find_relabel(standard, small)) {
      out.movie = Movie::starting_at(standard);
      out.movie.push(*r);
      out.standard_start = true;
    } else {
      out.movie = Movie::starting_at(small);
    }
    out.movie.push({MoveKind::Saddle, {}, {arcs[attach], arcs[attach]}, u});
    out.movie.append(reverse_movie(*peel));
    out.movie.push({MoveKind::Saddle, {}, {e, f}});

    const KhHomology kh(out.movie.frames.front(), Window::at(0, grq(p, q)));
    const HomologyGroup& g = kh.group(0, grq(p, q));
    if (g.free_rank != 1 || !g.torsion.empty()) throw std::logic_error("two_saddle_map: source slice is not Z");
    out.value = torus_projection(p + 1, q + 1).project(MovieMap(out.movie)(kh.lift_free(0, grq(p, q), 0)));
    return out;
  }
  throw MoveError("two_saddle_map: no saddle peels an unknot off torus_link(" + std::to_string(p + 1) + "," +
                  std::to_string(q + 1) + ")");
}

mpz_class stabilization_map(int p, int q, int l) {
  if (l < 0) throw std::invalid_argument("stabilization_map: l < 0");
  if (l == 0) return 1;
  std::vector<TwoSaddle> steps;
  bool chained = true;
  for (int k = 0; k < l; ++k) {
    steps.push_back(two_saddle_map(p + k, q + k));
    chained = chained && steps.back().standard_start;
  }
  if (!chained) {
    mpz_class v = 1;
    for (const auto& s : steps) v *= s.value;
    return v;
  }
  Movie m = steps[0].movie;
  for (int k = 1; k < l; ++k) m.append(steps[k].movie);
  const KhHomology kh(m.frames.front(), Window::at(0, grq(p, q)));
  return torus_projection(p + l, q + l).project(MovieMap(m)(kh.lift_free(0, grq(p, q), 0)));
}

}  // namespace khoxotic
