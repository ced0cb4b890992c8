#include "khoxotic/movie.hpp"

#include <stdexcept>

#include "json.hpp"

namespace khoxotic {

using nlohmann::json;

void Movie::push(const Move& m) {
  if (m.kind == MoveKind::R1Plus || m.kind == MoveKind::R2Plus)
    throw MoveError("insertion moves need the later frame; use push_insertion");
  frames.push_back(apply_move(frames.back(), m));
  moves.push_back(m);
}

void Movie::push_insertion(const Move& m, Diagram after) {
  if (!move_connects(frames.back(), m, after)) throw MoveError("insertion does not connect the frames");
  frames.push_back(std::move(after));
  moves.push_back(m);
}

void Movie::append(const Movie& tail) {
  if (tail.frames.empty()) return;
  if (!(tail.frames.front() == frames.back())) throw MoveError("movies do not compose: endpoint mismatch");
  frames.insert(frames.end(), tail.frames.begin() + 1, tail.frames.end());
  moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
}

int Movie::euler_characteristic() const {
  int chi = 0;
  for (const Move& m : moves) {
    if (m.kind == MoveKind::Birth || m.kind == MoveKind::Death) ++chi;
    if (m.kind == MoveKind::Saddle) --chi;
  }
  return chi;
}

std::optional<int> first_invalid_move(const Movie& m) {
  if (m.frames.size() != m.moves.size() + 1) return static_cast<int>(std::min(m.frames.size(), m.moves.size()));
  for (size_t t = 0; t < m.moves.size(); ++t)
    if (!move_connects(m.frames[t], m.moves[t], m.frames[t + 1])) return static_cast<int>(t);
  return std::nullopt;
}

namespace {

json move_json(const Move& m) {
  json j;
  j["kind"] = to_string(m.kind);
  if (!m.crossings.empty()) j["crossings"] = m.crossings;
  if (!m.arcs.empty()) j["arcs"] = m.arcs;
  if (m.new_arc) j["new_arc"] = m.new_arc;
  if (m.kind == MoveKind::Relabel) {
    json pairs = json::array();
    for (const auto& [a, b] : m.arc_map) pairs.push_back({a, b});
    j["arc_map"] = pairs;
    j["order"] = m.order;
  }
  return j;
}

Move move_from(const json& j) {
  Move m;
  m.kind = move_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("crossings")) m.crossings = j["crossings"].get<std::vector<int>>();
  if (j.contains("arcs")) m.arcs = j["arcs"].get<std::vector<int>>();
  if (j.contains("new_arc")) m.new_arc = j["new_arc"].get<int>();
  if (j.contains("arc_map"))
    for (const auto& p : j["arc_map"]) m.arc_map[p.at(0).get<int>()] = p.at(1).get<int>();
  if (j.contains("order")) m.order = j["order"].get<std::vector<int>>();
  return m;
}

}  // namespace

std::string move_to_json(const Move& m) { return move_json(m).dump(); }

std::string movie_to_json(const Movie& m) {
  json j;
  j["version"] = kMovieFormatVersion;
  json frames = json::array();
  for (const Diagram& d : m.frames) frames.push_back(serialize_pd(d));
  j["frames"] = frames;
  json moves = json::array();
  for (const Move& mv : m.moves) moves.push_back(move_json(mv));
  j["moves"] = moves;
  return j.dump(1);
}

Movie movie_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("movie: ") + e.what());
  }
  if (j.value("version", 0) != kMovieFormatVersion) throw std::invalid_argument("movie: unsupported version");
  Movie m;
  try {
    for (const auto& f : j.at("frames")) m.frames.push_back(parse_pd(f.get<std::string>()));
    for (const auto& mv : j.at("moves")) m.moves.push_back(move_from(mv));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("movie: ") + e.what());
  }
  if (m.frames.empty()) m.frames.push_back(Diagram{});
  return m;
}

Movie reverse_movie(const Movie& m) {
  Movie r;
  r.frames.assign(m.frames.rbegin(), m.frames.rend());
  for (int t = static_cast<int>(m.moves.size()) - 1; t >= 0; --t)
    r.moves.push_back(inverse_move(m.moves[t], m.frames[t], m.frames[t + 1]));
  return r;
}

MovieMap::MovieMap(const Movie& m) {
  if (auto bad = first_invalid_move(m)) throw MapError("movie step " + std::to_string(*bad) + " is invalid");
  for (const Diagram& d : m.frames) frames_.push_back(std::make_unique<Frame>(d));
  for (size_t t = 0; t < m.moves.size(); ++t)
    maps_.push_back(make_elementary_map(*frames_[t], m.moves[t], *frames_[t + 1]));
}

SparseVec MovieMap::operator()(const SparseVec& v_in, bool check) const {
  SparseVec v = v_in;
  for (size_t t = 0; t < maps_.size(); ++t) {
    if (check && !chain_defect(*maps_[t], *frames_[t], *frames_[t + 1], v).empty())
      throw MapError("movie step " + std::to_string(t) + " does not commute with the differential");
    v = (*maps_[t])(v);
  }
  return v;
}

int MovieMap::q_shift() const {
  int s = 0;
  for (const auto& m : maps_) s += m->q_shift();
  return s;
}

int Functional::normalize() {
  for (const auto& v : values) {
    if (v == 0) continue;
    if (v > 0) return 1;
    for (auto& w : values) w = -w;
    return -1;
  }
  return 1;
}

bool Functional::is_zero() const {
  for (const auto& v : values)
    if (v != 0) return false;
  return true;
}

Functional movie_functional(const Movie& m, const KhHomology& kh, int i, int j) {
  if (!m.back().empty()) throw MapError("functional: movie does not end at the empty diagram");
  const CubeData src = CubeData::from(m.frames.front());
  if (src.quads != kh.complex().cube.quads || src.loops != kh.complex().cube.loops)
    throw MapError("functional: movie does not start at the diagram of the homology");
  MovieMap f(m);
  Functional out;
  out.i = i;
  out.j = j;
  const HomologyGroup& h = kh.group(i, j);
  for (int k = 0; k < h.free_rank; ++k) {
    const SparseVec img = f(kh.lift_free(i, j, k));
    auto it = img.find(Gen{0, 0});
    out.values.emplace_back(static_cast<long>(it == img.end() ? 0 : it->second));
  }
  return out;
}

namespace {

// Integer x with f.x = 1 and g.x = 0, if any.
std::optional<std::vector<mpz_class>> solve_pair(const Functional& f, const Functional& g) {
  const int n = static_cast<int>(f.values.size());
  ZMatrix a(2, n);
  for (int k = 0; k < n; ++k) {
    a(0, k) = f.values[k];
    a(1, k) = g.values[k];
  }
  const Smith s = smith(a, true, true);
  // D y = P b with b = (1, 0).
  std::vector<mpz_class> pb{s.p(0, 0), s.p(1, 0)};
  std::vector<mpz_class> y(n);
  for (int r = 0; r < 2; ++r) {
    if (r < s.rank) {
      const mpz_class& dr = s.d(r, r);
      if (pb[r] % dr != 0) return std::nullopt;
      y[r] = pb[r] / dr;
    } else if (pb[r] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (y[c] != 0) x[r] += s.q(r, c) * y[c];
  return x;
}

}  // namespace

Verdict distinguish(const Functional& f, const Functional& g) {
  if (f.i != g.i || f.j != g.j || f.values.size() != g.values.size())
    throw std::invalid_argument("distinguish: functionals live on different groups");
  Verdict v;
  if (auto x = solve_pair(f, g)) {
    v.distinct = true;
    v.direction = "f";
    v.witness = *x;
  } else if (auto y = solve_pair(g, f)) {
    v.distinct = true;
    v.direction = "g";
    v.witness = *y;
  }
  return v;
}

}  // namespace khoxotic
