#include "khoxotic/ribbon.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace khoxotic {

using nlohmann::json;

BandPresentation parse_bands(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bands: ") + e.what());
  }
  if (j.value("version", 0) != 1) throw std::invalid_argument("bands: unsupported version");
  BandPresentation b;
  b.name = j.value("name", std::string());
  if (j.contains("boundary")) {
    b.boundary = parse_pd(j["boundary"].get<std::string>());
  } else {
    const std::string path = base_dir + "/" + j.at("boundary_file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("bands: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    b.boundary = parse_pd(ss.str());
  }
  for (const auto& x : j.at("bands")) {
    Band band;
    band.e = x.at("arcs").at(0).get<int>();
    band.f = x.at("arcs").at(1).get<int>();
    band.half_twists = x.value("half_twists", 0);
    if (band.half_twists != 0) throw std::invalid_argument("bands: twisted bands are not supported");
    b.bands.push_back(band);
  }
  b.caps = j.at("caps").get<int>();
  if (j.contains("certificate")) b.certificate = movie_from_json(j["certificate"].dump());
  return b;
}

std::string serialize_bands(const BandPresentation& b, const std::string& boundary_file) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["name"] = b.name;
  if (boundary_file.empty())
    j["boundary"] = serialize_pd(b.boundary);
  else
    j["boundary_file"] = boundary_file;
  json bands = json::array();
  for (const Band& x : b.bands) bands.push_back({{"arcs", {x.e, x.f}}, {"half_twists", x.half_twists}});
  j["bands"] = bands;
  j["caps"] = b.caps;
  if (b.certificate) j["certificate"] = json::parse(movie_to_json(*b.certificate));
  return j.dump(2) + "\n";
}

BandPresentation mirror(const BandPresentation& b) {
  BandPresentation m = b;
  m.name = "m(" + b.name + ")";
  m.boundary = mirror(b.boundary);
  if (b.certificate) {
    Movie c;
    for (const Diagram& d : b.certificate->frames) c.frames.push_back(mirror(d));
    c.moves = b.certificate->moves;
    m.certificate = c;
  }
  return m;
}

BandPresentation pretzel_disk(const TwistTemplate& t, int k, const std::vector<std::pair<int, int>>& column_pairs,
                              const std::string& name) {
  BandPresentation b;
  b.name = name;
  b.boundary = t.instantiate(k);
  // Crossings come out column by column.
  std::vector<int> column_of;
  for (size_t c = 0; c < t.base_columns.size(); ++c) {
    const int len = std::abs(t.base_columns[c] + k * t.twist_per_k[c]);
    column_of.insert(column_of.end(), len, static_cast<int>(c) + 1);
  }
  // Arcs running between two crossings of the same column.
  auto column_arc = [&](int arc) {
    const ArcEnds& e = b.boundary.ends(arc);
    const int a = column_of.at(e.head.crossing), z = column_of.at(e.tail.crossing);
    return a == z ? a : 0;
  };
  const auto sites = saddle_sites(b.boundary);
  for (const auto& [i, j] : column_pairs) {
    if (j != i + 1) throw std::invalid_argument("pretzel_disk: bands join adjacent columns");
    bool found = false;
    for (const auto& [e, f] : sites) {
      const int ce = column_arc(e), cf = column_arc(f);
      if ((ce == i && cf == j) || (ce == j && cf == i)) {
        b.bands.push_back({e, f, 0});
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("pretzel_disk: no band site between columns " + std::to_string(i) + " and " +
                                            std::to_string(j));
  }
  b.caps = static_cast<int>(b.boundary.components().size() + column_pairs.size());
  return b;
}

namespace {

// First R1 site, else first R2 site.
std::optional<Move> reducing_move(const Diagram& d) {
  auto r1 = r1_sites(d);
  if (!r1.empty()) return r1.front();
  auto r2 = r2_sites(d);
  if (!r2.empty()) return r2.front();
  return std::nullopt;
}

// Shortest R3 sequence (up to depth) after which a reducing move exists.
std::optional<std::vector<Move>> r3_search(const Diagram& start, int depth) {
  struct Node {
    Diagram d;
    int parent;
    Move via;
    int depth;
  };
  std::vector<Node> nodes{{start, -1, {}, 0}};
  std::unordered_map<std::string, int> seen{{serialize_pd(start), 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    if (nodes[at].depth >= depth) continue;
    for (const Move& m : r3_sites(nodes[at].d)) {
      Diagram next = apply_move(nodes[at].d, m);
      const std::string key = serialize_pd(next);
      if (seen.count(key)) continue;
      const bool done = reducing_move(next).has_value();
      nodes.push_back({std::move(next), at, m, nodes[at].depth + 1});
      const int id = static_cast<int>(nodes.size()) - 1;
      seen.emplace(key, id);
      if (done) {
        std::vector<Move> path;
        for (int k = id; nodes[k].parent >= 0; k = nodes[k].parent) path.push_back(nodes[k].via);
        return std::vector<Move>(path.rbegin(), path.rend());
      }
      queue.push_back(id);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Movie> simplify_to_unlink(const Diagram& d, const SimplifyOptions& opt) {
  Movie m = Movie::starting_at(d);
  while (m.back().size() > 0) {
    if (static_cast<int>(m.frames.size()) > opt.max_frames) return std::nullopt;
    if (auto r = reducing_move(m.back())) {
      m.push(*r);
      continue;
    }
    auto path = r3_search(m.back(), opt.r3_depth);
    if (!path) return std::nullopt;
    for (const Move& x : *path) m.push(x);
  }
  return m;
}

Movie bands_to_movie(const BandPresentation& b, const SimplifyOptions& opt) {
  Movie m = Movie::starting_at(b.boundary);
  for (const Band& band : b.bands) {
    if (band.half_twists != 0) throw MoveError("twisted bands are not supported");
    m.push({MoveKind::Saddle, {}, {band.e, band.f}});
  }
  if (static_cast<int>(m.back().components().size()) != b.caps)
    throw MoveError("bands leave " + std::to_string(m.back().components().size()) + " components, expected " +
                    std::to_string(b.caps));
  if (b.certificate) {
    m.append(*b.certificate);
  } else {
    auto cert = simplify_to_unlink(m.back(), opt);
    if (!cert) throw MoveError("simplifier could not reach a crossingless diagram; supply a certificate");
    m.append(*cert);
  }
  if (m.back().size() != 0) throw MoveError("certificate does not end crossingless");
  const std::vector<int> loops = m.back().loops();
  for (int l : loops) m.push({MoveKind::Death, {}, {l}});
  return m;
}

Functional disk_functional(const BandPresentation& b, const KhHomology& kh, const SimplifyOptions& opt) {
  Functional f = movie_functional(bands_to_movie(b, opt), kh, 0, -1);
  f.normalize();
  return f;
}

}  // namespace khoxotic
