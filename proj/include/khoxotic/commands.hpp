#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "khoxotic/cp2.hpp"

namespace khoxotic {

constexpr int kReportSchemaVersion = 1;
constexpr int kConventionVersion = 1;

enum ExitCode { kSuccess = 0, kNegative = 1, kInputError = 2, kInfeasible = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data_dir;
  std::string cache_dir;  // empty disables the cache
  int jobs = 1;
  bool force = false;
  double max_generators = 67108864.0;  // 2^26
  std::optional<Window> window;
  std::vector<std::string> certificates;  // movie files, one per disk in order
  bool self_test = false;
  std::optional<std::pair<int, int>> pq;  // overrides blow-up metadata
};

struct Report {
  nlohmann::ordered_json json;
  int exit_code = kSuccess;
  std::string text;  // human-readable summary
};

// "i=a:b,j=c:d" with either part optional and ":b" optional.
Window parse_window(const std::string& s);
std::string default_cache_dir();

Report cmd_homology(const std::string& pd_file, const Options& opt);
Report cmd_verify_hs(int k, const Options& opt);
Report cmd_theorem1(int k, const Options& opt);
Report cmd_torus_table(int max_n, const Options& opt);
Report cmd_movie_check(const std::string& movie_file, const Options& opt);

// Maps an exception escaping a command to an exit code and message.
int exit_code_for(const std::exception& e);

}  // namespace khoxotic
