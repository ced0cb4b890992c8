#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khoxotic/commands.hpp"
#include "khoxotic/jones.hpp"

namespace py = pybind11;
using namespace khoxotic;

namespace {

Options make_options(const std::string& data_dir, const std::string& cache_dir, bool force, bool self_test) {
  Options o;
  o.data_dir = data_dir;
  o.cache_dir = cache_dir;
  o.force = force;
  o.self_test = self_test;
  return o;
}

// Report as (json text, exit code, summary); the Python side parses the JSON.
py::tuple pack(const Report& r) { return py::make_tuple(r.json.dump(), r.exit_code, r.text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Khovanov homology over Z";

  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MapError>(m, "MapError");

  m.attr("CONVENTION_VERSION") = kConventionVersion;

  m.def("normalize_pd", [](const std::string& text) { return serialize_pd(parse_pd(text)); },
        "Parse PD text and print it back in canonical layout.");
  m.def("mirror_pd", [](const std::string& text) { return serialize_pd(mirror(parse_pd(text))); });
  m.def("crossings", [](const std::string& text) { return parse_pd(text).size(); });
  m.def("components", [](const std::string& text) { return parse_pd(text).components().size(); });
  m.def("torus_link_pd", [](int p, int q) { return serialize_pd(torus_link(p, q)); });
  m.def("pretzel_pd", [](const std::vector<int>& cols) { return serialize_pd(pretzel(cols)); });
  m.def("braid_pd", [](int strands, const std::vector<int>& word) { return serialize_pd(braid_closure(strands, word)); });

  m.def(
      "homology",
      [](const std::string& text, const std::string& window) {
        const Window w = window.empty() ? Window::all() : parse_window(window);
        py::gil_scoped_release release;
        const KhHomology kh(parse_pd(text), w);
        std::vector<std::tuple<int, int, int, std::vector<std::string>>> out;
        for (const auto& [key, g] : kh.groups()) {
          if (g.is_zero()) continue;
          std::vector<std::string> tors;
          for (const auto& t : g.torsion) tors.push_back(t.get_str());
          out.emplace_back(key.first, key.second, g.free_rank, tors);
        }
        return out;
      },
      py::arg("pd"), py::arg("window") = "");

  m.def("jones", [](const std::string& text) {
    const Laurent l = jones_unnormalized(parse_pd(text));
    return std::map<int, std::int64_t>(l.begin(), l.end());
  });

  m.def("grq", &grq);
  m.def("two_saddle_value", [](int p, int q) { return two_saddle_map(p, q).value.get_si(); });

  m.def(
      "verify_hs",
      [](int k, const std::string& data_dir, const std::string& cache_dir, bool force, bool self_test) {
        return pack(cmd_verify_hs(k, make_options(data_dir, cache_dir, force, self_test)));
      },
      py::arg("k"), py::arg("data_dir"), py::arg("cache_dir") = "", py::arg("force") = false,
      py::arg("self_test") = false);
  m.def(
      "theorem1",
      [](int k, const std::string& data_dir, const std::string& cache_dir, bool force, bool self_test) {
        return pack(cmd_theorem1(k, make_options(data_dir, cache_dir, force, self_test)));
      },
      py::arg("k"), py::arg("data_dir"), py::arg("cache_dir") = "", py::arg("force") = false,
      py::arg("self_test") = false);
  m.def(
      "torus_table",
      [](int max_n, const std::string& cache_dir) { return pack(cmd_torus_table(max_n, make_options("", cache_dir, false, false))); },
      py::arg("max_n"), py::arg("cache_dir") = "");
  m.def("movie_check", [](const std::string& path) { return pack(cmd_movie_check(path, Options{})); });
}
