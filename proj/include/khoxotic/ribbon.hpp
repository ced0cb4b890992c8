#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khoxotic/families.hpp"
#include "khoxotic/movie.hpp"

namespace khoxotic {

// A band attached along two arcs that face each other across one region of
// the diagram. Bands through several regions are not supported; put the
// needed isotopy into the boundary diagram instead.
struct Band {
  int e = 0, f = 0;
  int half_twists = 0;  // only 0 is supported
  friend bool operator==(const Band&, const Band&) = default;
};

struct BandPresentation {
  std::string name;
  Diagram boundary;
  std::vector<Band> bands;
  int caps = 0;  // components of the unlink after the bands
  std::optional<Movie> certificate;  // post-band diagram -> crossingless unlink
};

// JSON band file. `boundary` is either inline PD text or a path relative to
// `base_dir` (key "boundary_file").
BandPresentation parse_bands(const std::string& json_text, const std::string& base_dir = ".");
std::string serialize_bands(const BandPresentation& b, const std::string& boundary_file = "");

BandPresentation mirror(const BandPresentation& b);

// Ribbon disk of a pretzel template: one band between columns i and i+1
// (1-based) for each listed pair, cutting both columns apart.
BandPresentation pretzel_disk(const TwistTemplate& t, int k, const std::vector<std::pair<int, int>>& column_pairs,
                              const std::string& name);

struct SimplifyOptions {
  int r3_depth = 3;
  int max_frames = 10000;
};

// Greedy R1/R2 removal with a bounded breadth-first R3 search when stuck.
// Returns a movie ending at a crossingless diagram, or nullopt.
std::optional<Movie> simplify_to_unlink(const Diagram& d, const SimplifyOptions& opt = {});

// Saddles, then the certificate (or the greedy simplifier), then deaths.
// Throws MoveError when the simplifier fails or the cap count is wrong.
Movie bands_to_movie(const BandPresentation& b, const SimplifyOptions& opt = {});

// The disk's functional on Kh^{0,-1}(boundary); sign-normalised.
Functional disk_functional(const BandPresentation& b, const KhHomology& kh, const SimplifyOptions& opt = {});

}  // namespace khoxotic
