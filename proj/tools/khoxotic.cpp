#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "khoxotic/commands.hpp"

using namespace khoxotic;

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("KHOXOTIC_DATA_DIR"); env && *env) return env;
  return KHOXOTIC_DATA_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology over Z, ribbon disk functionals and CP^2 surface maps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  opt.data_dir = data_dir();
  opt.cache_dir = default_cache_dir();
  std::string window, json_out;
  bool no_cache = false, timings = false;
  app.add_option("--window", window, "bidegree window, e.g. i=0:2,j=-1:5");
  app.add_option("--cache-dir", opt.cache_dir, "result cache (default $KHOXOTIC_CACHE_DIR or ~/.cache/khoxotic)");
  app.add_flag("--no-cache", no_cache, "do not read or write the cache");
  app.add_option("--jobs", opt.jobs, "accepted for compatibility; computation is single-threaded")->check(CLI::PositiveNumber);
  app.add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
  app.add_flag("--force", opt.force, "run even when the generator estimate is over budget");
  app.add_option("--max-generators", opt.max_generators, "generator budget for --force checks");
  app.add_option("--certificate", opt.certificates, "isotopy movie for a disk (repeat for the second disk)")
      ->check(CLI::ExistingFile);
  app.add_flag("--timings", timings, "add wall-clock timings to the JSON (makes it run-dependent)");
  app.add_option("--data-dir", opt.data_dir, "directory holding j1.pd, sigma1*.bands and jk.template");

  std::string pd_file, movie_file;
  int k = 1, max_n = 4;
  std::vector<int> pq;

  auto* homology = app.add_subcommand("homology", "Kh^{i,j} of a PD diagram");
  homology->add_option("pd_file", pd_file)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify-hs", "compare the two ribbon disks of J_k by their Kh functionals");
  verify->add_option("k", k)->required();
  verify->add_flag("--self-test", opt.self_test, "compare sigma with itself");

  auto* thm = app.add_subcommand("theorem1", "blow up both disks and compare the CP^2 functionals");
  thm->add_option("k", k)->required();
  thm->add_flag("--self-test", opt.self_test, "trivial disk of the unknot; cp2 must be the counit");
  thm->add_option("--pq", pq, "override the (p,q) of the blow-ups")->expected(2);

  auto* torus = app.add_subcommand("torus-table", "Kh^{0,*} and Lee degrees of T(p+q,p+q)_{p,q}");
  torus->add_option("max_n", max_n)->required();

  auto* movie = app.add_subcommand("movie-check", "validate a movie file");
  movie->add_option("movie_file", movie_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  if (no_cache) opt.cache_dir.clear();
  if (pq.size() == 2) opt.pq = std::pair{pq[0], pq[1]};

  try {
    if (!window.empty()) opt.window = parse_window(window);
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    if (*homology) r = cmd_homology(pd_file, opt);
    if (*verify) r = cmd_verify_hs(k, opt);
    if (*thm) r = cmd_theorem1(k, opt);
    if (*torus) r = cmd_torus_table(max_n, opt);
    if (*movie) r = cmd_movie_check(movie_file, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "khoxotic: " << r.json["command"].get<std::string>() << " took " << secs << "s\n";
    if (timings) r.json["timings"] = {{"wall_seconds", secs}, {"jobs", opt.jobs}};
    const std::string dumped = r.json.dump(2) + "\n";
    if (json_out == "-") {
      std::cout << dumped;
    } else {
      std::cout << r.text;
      if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw InputError("cannot write " + json_out);
        out << dumped;
      }
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "khoxotic: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
