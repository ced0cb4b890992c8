// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "khoxotic/commands.hpp"
#include "khoxotic/lee.hpp"
#include "oracle.hpp"

using namespace khoxotic;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& what, const std::function<std::string(bool&)>& body) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s [%d] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(), secs, detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Sign s with the movie map equal to s * identity on free homology, else 0.
int identity_sign(const Movie& movie, const KhHomology& kh) {
  MovieMap f(movie);
  int sign = 0;
  for (const auto& [key, h] : kh.groups())
    for (int k = 0; k < h.free_rank; ++k) {
      const auto c = kh.free_coords(key.first, key.second, f(kh.lift_free(key.first, key.second, k), true));
      for (int t = 0; t < h.free_rank; ++t) {
        if (t != k && c[t] != 0) return 0;
        if (t != k) continue;
        if (abs(c[t]) != 1) return 0;
        const int s = c[t] > 0 ? 1 : -1;
        if (sign && s != sign) return 0;
        sign = s;
      }
    }
  return sign;
}

Options options(const std::string& cache) {
  Options o;
  o.data_dir = ACCEPT_DATA_DIR;
  o.cache_dir = cache;
  return o;
}

std::string fresh_dir(const std::string& tag) {
  const auto p = std::filesystem::temp_directory_path() / ("khoxotic-accept-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p.string();
}

}  // namespace

int main() {
  report(1, "small links match the full-cube SNF oracle, torsion included, each under 1s", [](bool& ok) {
    std::ostringstream d;
    for (const auto& [name, diag] : corpus::small_links()) {
      const auto t0 = Clock::now();
      const bool same = KhHomology(diag, Window::all()).table() == oracle::khovanov_table(diag);
      const double s = seconds_since(t0);
      if (!same || s >= 1.0) {
        ok = false;
        d << name << (same ? " slow " : " differs ");
      }
    }
    return d.str();
  });

  report(2, "Euler characteristic equals the state-sum Jones polynomial on >= 20 diagrams up to 12 crossings, under 60s",
         [](bool& ok) {
           const auto t0 = Clock::now();
           const auto list = corpus::euler_corpus();
           int good = 0, maxc = 0;
           for (const auto& [name, d] : list) {
             maxc = std::max(maxc, d.size());
             if (corpus::euler(KhHomology(d, Window::all())) == jones_unnormalized(d)) ++good;
           }
           ok = good == static_cast<int>(list.size()) && good >= 20 && maxc <= 12 && seconds_since(t0) < 60;
           return std::to_string(good) + "/" + std::to_string(list.size()) + " diagrams, max " + std::to_string(maxc) +
                  " crossings";
         });

  report(3, "torus table p+q <= 4: Kh^{0,grq} = Z and 0 below", [](bool& ok) {
    int rows = 0;
    for (int n = 1; n <= 4; ++n)
      for (int p = n; p >= 0; --p) {
        const int q = n - p, g = grq(p, q);
        const auto kh = torus_slice(p, q);
        const auto& at = kh->group(0, g);
        bool row = at.free_rank == 1 && at.torsion.empty();
        for (const auto& [key, h] : kh->groups())
          if (key.first == 0 && key.second < g && !h.is_zero()) row = false;
        ok = ok && row;
        ++rows;
      }
    return std::to_string(rows) + " rows";
  });

  report(4, "Lee filtration degree equals grq for p+q <= 3", [](bool& ok) {
    std::ostringstream d;
    for (int n = 1; n <= 3; ++n)
      for (int p = n; p >= 0; --p) {
        const Frame f(torus_link(p, n - p));
        const int s = filtration_degree(f, lee_generator(f));
        d << "(" << p << "," << n - p << ")=" << s << " ";
        ok = ok && s == grq(p, n - p);
      }
    return d.str();
  });

  report(5, "two_saddle_map is +-1 for (1,0), (0,1), (1,1)", [](bool& ok) {
    std::ostringstream d;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
      const TwoSaddle t = two_saddle_map(p, q);
      d << "(" << p << "," << q << ")=" << t.value << " ";
      ok = ok && abs(t.value) == 1 && t.standard_start;
    }
    return d.str();
  });

  report(6, "forward then inverse R-move movies induce +-identity on 10 cases", [](bool& ok) {
    const std::vector<std::pair<int, std::vector<int>>> words = {
        {2, {1, 1, 1, -1}}, {3, {1, 2, 1}}, {3, {1, -2, 1, -2}}, {3, {2, 1, 2, -1}}, {3, {1, 1, 2, -1, 2}}};
    int cases = 0, good = 0;
    for (const auto& [n, w] : words) {
      const Diagram d = braid_closure(n, w);
      const KhHomology kh(d, Window::all());
      for (const auto& list : {r1_sites(d), r2_sites(d), r3_sites(d)})
        for (const Move& m : list) {
          if (cases == 10) break;
          Movie movie = Movie::starting_at(d);
          movie.push(m);
          movie.append(reverse_movie(movie));
          ++cases;
          if (identity_sign(movie, kh) != 0) ++good;
        }
    }
    ok = cases == 10 && good == 10;
    return std::to_string(good) + "/" + std::to_string(cases);
  });

  report(7, "verify-hs 1 distinct with witness values (+-1, 0); theorem1 1 has cp2 = +-disk", [](bool& ok) {
    const std::string dir = fresh_dir("c7");
    const Report v = cmd_verify_hs(1, options(dir));
    const auto& vals = v.json["results"]["verdict"]["values"];
    const Report t = cmd_theorem1(1, options(dir));
    std::filesystem::remove_all(dir);
    ok = v.json["verdict"] == "distinct-with-witness" && vals.size() == 2 &&
         (vals[0] == 1 || vals[0] == -1) && vals[1] == 0 && v.exit_code == 0 && t.exit_code == 0 &&
         t.json["results"]["blowdown_agrees"] == true;
    return "values " + vals.dump() + ", theorem1 " + t.json["verdict"].get<std::string>();
  });

  report(8, "repeated cold-cache runs give byte-identical JSON", [](bool& ok) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const std::string dir = fresh_dir("c8-" + std::to_string(run));
      const std::string out = cmd_verify_hs(1, options(dir)).json.dump(2) + cmd_theorem1(1, options(dir)).json.dump(2) +
                              cmd_torus_table(3, options(dir)).json.dump(2);
      std::filesystem::remove_all(dir);
      if (run == 0)
        first = out;
      else
        ok = out == first;
    }
    return std::to_string(first.size()) + " bytes";
  });

  return failures;
}
