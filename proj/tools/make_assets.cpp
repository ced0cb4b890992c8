// Regenerates the shipped link and band assets under data/.
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "khoxotic/ribbon.hpp"

using namespace khoxotic;

namespace {

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// J_0 with an unknotted circle around the top of column 1. 1/k surgery on
// the circle adds k full twists to that column.
Diagram j0_with_circle(const std::vector<int>& columns) {
  using Port = PlanarBuilder::Port;
  PlanarBuilder b;
  // Ports: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
  std::vector<Port> tl, tr, bl, br;
  for (int a : columns) {
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
  for (int i = 0; i + 1 < m; ++i) b.connect(br[i], bl[i + 1]);
  for (int i = 1; i + 1 < m; ++i) b.connect(tr[i], tl[i + 1]);
  b.connect(bl[0], br[m - 1]);
  // Circle ports: 0 right, 1 up, 2 left, 3 down. Back arc under, front over.
  const int ua = b.add_crossing(1), ub = b.add_crossing(1);
  const int uc = b.add_crossing(0), ud = b.add_crossing(0);
  b.connect({ua, 0}, {ub, 2});
  b.connect({ub, 0}, {ud, 0});
  b.connect({ud, 2}, {uc, 0});
  b.connect({uc, 2}, {ua, 2});
  b.connect({ua, 3}, {uc, 1});
  b.connect({uc, 3}, tl[0]);
  b.connect({ub, 3}, {ud, 1});
  b.connect({ud, 3}, tr[0]);
  b.connect({ua, 1}, tr[m - 1]);
  b.connect({ub, 1}, tl[1]);
  return b.build();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  const TwistTemplate jk{"J", {1, -1, 1, -1, 1}, {2, -2, 2, -2, 2}, 1};
  const std::vector<std::pair<int, int>> sigma{{1, 2}, {3, 4}}, sigma_p{{2, 3}, {4, 5}};

  nlohmann::ordered_json t = nlohmann::ordered_json::parse(serialize_template(jk));
  t["disks"] = {{"sigma", sigma}, {"sigma_prime", sigma_p}};
  write(dir + "/jk.template", t.dump(2) + "\n");

  const BandPresentation s = pretzel_disk(jk, 1, sigma, "sigma1");
  const BandPresentation sp = pretzel_disk(jk, 1, sigma_p, "sigma1p");
  write(dir + "/j1.pd", serialize_pd(s.boundary));
  write(dir + "/sigma1.bands", serialize_bands(s, "j1.pd"));
  write(dir + "/sigma1p.bands", serialize_bands(sp, "j1.pd"));
  write(dir + "/j0u.pd", serialize_pd(j0_with_circle({1, -1, 1, -1, 1})));
  std::cout << "wrote assets to " << dir << "\n";
}
