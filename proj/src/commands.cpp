#include "khoxotic/commands.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <regex>
#include <sstream>

#include <openssl/evp.h>

#include "khoxotic/lee.hpp"

namespace khoxotic {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson zjson(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ojson zvec(const std::vector<mpz_class>& v) {
  ojson a = ojson::array();
  for (const auto& z : v) a.push_back(zjson(z));
  return a;
}

std::vector<mpz_class> zvec_from(const nlohmann::json& a) {
  std::vector<mpz_class> v;
  for (const auto& x : a) v.emplace_back(x.is_string() ? mpz_class(x.get<std::string>()) : mpz_class(x.get<long>()));
  return v;
}

ojson group_json(const HomologyGroup& g) {
  ojson j;
  j["i"] = g.i;
  j["j"] = g.j;
  j["rank"] = g.free_rank;
  j["torsion"] = zvec(g.torsion);
  return j;
}

std::string window_string(const Window& w) {
  std::ostringstream s;
  if (w.i) s << "i=" << w.i->first << ":" << w.i->second;
  if (w.i && w.j) s << ",";
  if (w.j) s << "j=" << w.j->first << ":" << w.j->second;
  return s.str().empty() ? "all" : s.str();
}

ojson skeleton(const std::string& command) {
  ojson r;
  r["schema"] = "khoxotic.report";
  r["schema_version"] = kReportSchemaVersion;
  r["convention_version"] = kConventionVersion;
  r["command"] = command;
  return r;
}

// Results keyed by content hash. Each entry is written under an exclusive
// lock on its own lock file and renamed into place.
class Cache {
 public:
  explicit Cache(const std::string& dir) : dir_(dir) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  template <class Compute>
  nlohmann::json get_or(const std::string& key, Compute compute) {
    if (dir_.empty()) return compute();
    const fs::path file = fs::path(dir_) / (key + ".json");
    const fs::path lock = fs::path(dir_) / (key + ".lock");
    const int fd = ::open(lock.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd < 0) throw std::runtime_error("cache: cannot open " + lock.string());
    ::flock(fd, LOCK_EX);
    struct Unlock {
      int fd;
      ~Unlock() {
        ::flock(fd, LOCK_UN);
        ::close(fd);
      }
    } unlock{fd};
    if (fs::exists(file)) {
      try {
        return nlohmann::json::parse(read_file(file.string()));
      } catch (const nlohmann::json::exception&) {
        // Damaged entry: recompute below.
      }
    }
    nlohmann::json value = compute();
    const fs::path tmp = fs::path(dir_) / (key + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp);
      out << value.dump();
    }
    fs::rename(tmp, file);
    return value;
  }

 private:
  std::string dir_;
};

void guard(const Diagram& d, const Window& w, const Options& opt) {
  const double est = estimate_generators(CubeData::from(d), w);
  if (est > opt.max_generators && !opt.force)
    throw InfeasibleError("about " + std::to_string(static_cast<long long>(est)) + " generators exceeds the budget of " +
                          std::to_string(static_cast<long long>(opt.max_generators)) + "; pass --force to run anyway");
}

double torus_budget(const Options& opt) {
  return opt.force ? std::numeric_limits<double>::infinity() : kTorusGeneratorBudget;
}

// Homology of a disk boundary in bidegree (0, -1), built on first use.
class BoundaryHomology {
 public:
  explicit BoundaryHomology(const Diagram& d) : d_(d) {}
  const KhHomology& get() {
    if (!kh_) kh_ = std::make_unique<KhHomology>(d_, Window::at(0, -1));
    return *kh_;
  }

 private:
  Diagram d_;
  std::unique_ptr<KhHomology> kh_;
};

Functional functional_from(const nlohmann::json& j) {
  Functional f;
  f.i = j.at("i").get<int>();
  f.j = j.at("j").get<int>();
  f.values = zvec_from(j.at("values"));
  return f;
}

nlohmann::json functional_to(const Functional& f) {
  nlohmann::json j;
  j["i"] = f.i;
  j["j"] = f.j;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& z : f.values) v.push_back(z.fits_slong_p() ? nlohmann::json(z.get_si()) : nlohmann::json(z.get_str()));
  j["values"] = v;
  return j;
}

mpz_class dot(const Functional& f, const std::vector<mpz_class>& x) {
  mpz_class s = 0;
  for (size_t k = 0; k < x.size(); ++k) s += f.values[k] * x[k];
  return s;
}

struct DiskPair {
  std::string boundary_name;
  BandPresentation sigma, sigma_prime;  // mirrored, ready to evaluate
};

DiskPair load_disks(int k, const Options& opt) {
  if (k < 1) throw InputError("k must be at least 1");
  DiskPair out;
  BandPresentation s, sp;
  if (k == 1) {
    s = parse_bands(read_file(opt.data_dir + "/sigma1.bands"), opt.data_dir);
    sp = parse_bands(read_file(opt.data_dir + "/sigma1p.bands"), opt.data_dir);
  } else {
    const auto j = nlohmann::json::parse(read_file(opt.data_dir + "/jk.template"));
    const TwistTemplate t = parse_template(j.dump());
    const auto pairs = [&](const char* key) {
      return j.at("disks").at(key).get<std::vector<std::pair<int, int>>>();
    };
    s = pretzel_disk(t, k, pairs("sigma"), "sigma" + std::to_string(k));
    sp = pretzel_disk(t, k, pairs("sigma_prime"), "sigma" + std::to_string(k) + "p");
  }
  if (!(s.boundary == sp.boundary)) throw InputError("the two band presentations have different boundaries");
  if (opt.certificates.size() > 2) throw InputError("at most two certificates (one per disk)");
  if (opt.certificates.size() > 0) s.certificate = movie_from_json(read_file(opt.certificates[0]));
  if (opt.certificates.size() > 1) sp.certificate = movie_from_json(read_file(opt.certificates[1]));
  out.boundary_name = "J_" + std::to_string(k);
  out.sigma = mirror(s);
  out.sigma_prime = mirror(sp);
  return out;
}

ojson disk_inputs(const DiskPair& d) {
  ojson in;
  in["boundary"] = d.boundary_name;
  in["boundary_sha256"] = sha256(serialize_pd(d.sigma.boundary));
  in["sigma_sha256"] = sha256(serialize_bands(d.sigma));
  in["sigma_prime_sha256"] = sha256(serialize_bands(d.sigma_prime));
  return in;
}

Functional cached_disk(Cache& cache, const BandPresentation& b, BoundaryHomology& kh) {
  const std::string key = sha256("disk|" + std::to_string(kConventionVersion) + "|" + serialize_bands(b));
  return functional_from(cache.get_or(key, [&] { return functional_to(disk_functional(b, kh.get())); }));
}

Functional cached_cp2(Cache& cache, const CP2SurfacePresentation& s, BoundaryHomology& kh, const Options& opt) {
  const std::string key = sha256("cp2|" + std::to_string(kConventionVersion) + "|" + serialize_cp2(s));
  return functional_from(cache.get_or(key, [&] {
    torus_projection(s.p, s.q, torus_budget(opt));
    return functional_to(cp2_functional(s, kh.get()));
  }));
}

nlohmann::json cached_group(Cache& cache, const Diagram& d, BoundaryHomology& kh) {
  const std::string key = sha256("group|0|-1|" + std::to_string(kConventionVersion) + "|" + serialize_pd(d));
  return cache.get_or(key, [&] {
    const HomologyGroup& g = kh.get().group(0, -1);
    return nlohmann::json::parse(group_json(g).dump());
  });
}

ojson verdict_json(const Verdict& v, const Functional& f, const Functional& g) {
  ojson r;
  r["distinct"] = v.distinct;
  if (v.distinct) {
    r["direction"] = v.direction == "f" ? "sigma" : "sigma_prime";
    r["witness"] = zvec(v.witness);
    r["values"] = zvec({dot(f, v.witness), dot(g, v.witness)});
  }
  return r;
}

std::string functional_text(const Functional& f) {
  std::ostringstream s;
  s << "[";
  for (size_t k = 0; k < f.values.size(); ++k) s << (k ? ", " : "") << f.values[k];
  s << "]";
  return s.str();
}

bool same_up_to_sign(const Functional& a, const Functional& b) {
  if (a.values.size() != b.values.size()) return false;
  bool plus = true, minus = true;
  for (size_t k = 0; k < a.values.size(); ++k) {
    plus = plus && a.values[k] == b.values[k];
    minus = minus && a.values[k] == -b.values[k];
  }
  return plus || minus;
}

}  // namespace

Window parse_window(const std::string& s) {
  Window w;
  static const std::regex part(R"(\s*([ij])\s*=\s*(-?\d+)(?::(-?\d+))?\s*)");
  std::stringstream in(s);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, part)) throw InputError("bad window component '" + item + "'");
    const int lo = std::stoi(m[2]), hi = m[3].matched ? std::stoi(m[3]) : lo;
    if (lo > hi) throw InputError("empty window range '" + item + "'");
    (m[1] == "i" ? w.i : w.j) = std::pair{lo, hi};
    any = true;
  }
  if (!any) throw InputError("empty window");
  return w;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("KHOXOTIC_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/khoxotic";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/khoxotic";
  return ".khoxotic-cache";
}

Report cmd_homology(const std::string& pd_file, const Options& opt) {
  const Diagram d = parse_pd(read_file(pd_file));
  const Window w = opt.window.value_or(Window::all());
  guard(d, w, opt);
  Cache cache(opt.cache_dir);
  const std::string pd = serialize_pd(d);
  const auto groups = cache.get_or(sha256("homology|" + std::to_string(kConventionVersion) + "|" + window_string(w) + "|" + pd), [&] {
    const KhHomology kh(d, w);
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [key, g] : kh.groups())
      if (!g.is_zero()) a.push_back(nlohmann::json::parse(group_json(g).dump()));
    return a;
  });
  Report r;
  r.json = skeleton("homology");
  r.json["inputs"] = {{"diagram_sha256", sha256(pd)}, {"window", window_string(w)}};
  ojson res;
  res["crossings"] = d.size();
  res["components"] = d.components().size();
  res["groups"] = groups;
  r.json["results"] = res;
  std::ostringstream t;
  t << "Kh of " << pd_file << " (" << d.size() << " crossings, window " << window_string(w) << ")\n";
  for (const auto& g : groups) {
    t << "  Kh^{" << g["i"].get<int>() << "," << g["j"].get<int>() << "} = ";
    const int rank = g["rank"].get<int>();
    bool first = true;
    if (rank) t << "Z" << (rank > 1 ? "^" + std::to_string(rank) : ""), first = false;
    for (const auto& z : g["torsion"]) {
      t << (first ? "" : " + ") << "Z/" << z.dump();
      first = false;
    }
    t << "\n";
  }
  r.text = t.str();
  r.exit_code = kSuccess;
  return r;
}

Report cmd_verify_hs(int k, const Options& opt) {
  const DiskPair disks = load_disks(k, opt);
  guard(disks.sigma.boundary, Window::at(0, -1), opt);
  Cache cache(opt.cache_dir);
  BoundaryHomology kh(disks.sigma.boundary);
  const auto group = cached_group(cache, disks.sigma.boundary, kh);
  const Functional f = cached_disk(cache, disks.sigma, kh);
  const Functional g = opt.self_test ? f : cached_disk(cache, disks.sigma_prime, kh);
  const Verdict v = distinguish(f, g);

  Report r;
  r.json = skeleton("verify-hs");
  ojson in = disk_inputs(disks);
  in["k"] = k;
  in["self_test"] = opt.self_test;
  r.json["inputs"] = in;
  ojson res;
  res["crossings"] = disks.sigma.boundary.size();
  res["group"] = group;
  res["functionals"] = {{"sigma", zvec(f.values)}, {"sigma_prime", zvec(g.values)}};
  res["verdict"] = verdict_json(v, f, g);
  r.json["results"] = res;
  r.json["verdict"] = v.distinct ? "distinct-with-witness" : "not-distinguished";
  r.exit_code = v.distinct ? kSuccess : kNegative;

  std::ostringstream t;
  t << "m(J_" << k << "): " << disks.sigma.boundary.size() << " crossings, Kh^{0,-1} rank " << group["rank"].get<int>()
    << ", torsion " << group["torsion"].dump() << "\n";
  t << "  Kh(m(Sigma))  = " << functional_text(f) << "\n";
  t << "  Kh(m(Sigma')) = " << functional_text(g) << (opt.self_test ? " (self-test: same disk)" : "") << "\n";
  if (v.distinct) {
    t << "  distinct: phi = " << r.json["results"]["verdict"]["witness"].dump() << " gives values "
      << r.json["results"]["verdict"]["values"].dump() << "\n";
  } else {
    t << "  not distinguished\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_theorem1(int k, const Options& opt) {
  Report r;
  r.json = skeleton("theorem1");
  std::ostringstream t;
  Cache cache(opt.cache_dir);

  if (opt.self_test) {
    // Trivial disk of the unknot blown up once: the CP^2 map must be the counit.
    BandPresentation trivial;
    trivial.name = "trivial";
    trivial.boundary = parse_pd("O[1]");
    trivial.caps = 1;
    BoundaryHomology kh(trivial.boundary);
    CP2SurfacePresentation s = blow_up(trivial);
    if (opt.pq) std::tie(s.p, s.q) = *opt.pq;
    const Functional disk = cached_disk(cache, trivial, kh);
    const Functional cp2 = cached_cp2(cache, s, kh, opt);
    Functional counit;
    counit.i = 0;
    counit.j = -1;
    counit.values = {1};
    const bool ok = same_up_to_sign(cp2, counit) && same_up_to_sign(disk, counit);
    r.json["inputs"] = {{"k", k}, {"self_test", true}};
    ojson res;
    res["disk_functional"] = zvec(disk.values);
    res["cp2_functional"] = zvec(cp2.values);
    res["counit"] = zvec(counit.values);
    res["cp2_equals_counit"] = ok;
    r.json["results"] = res;
    r.json["verdict"] = ok ? "pass" : "fail";
    r.exit_code = ok ? kSuccess : kNegative;
    t << "trivial disk blown up once: cp2 " << functional_text(cp2) << ", counit " << functional_text(counit)
      << (ok ? " (equal)" : " (DIFFERENT)") << "\n";
    r.text = t.str();
    return r;
  }

  const DiskPair disks = load_disks(k, opt);
  guard(disks.sigma.boundary, Window::at(0, -1), opt);
  BoundaryHomology kh(disks.sigma.boundary);
  const auto group = cached_group(cache, disks.sigma.boundary, kh);

  ojson res;
  res["crossings"] = disks.sigma.boundary.size();
  res["group"] = group;
  ojson surfaces = ojson::object();
  std::vector<Functional> d4, cp2;
  bool blowdown_ok = true;
  for (const BandPresentation* b : {&disks.sigma, &disks.sigma_prime}) {
    const char* name = b == &disks.sigma ? "sigma" : "sigma_prime";
    CP2SurfacePresentation s = blow_up(*b);
    if (opt.pq) std::tie(s.p, s.q) = *opt.pq;
    d4.push_back(cached_disk(cache, *b, kh));
    cp2.push_back(cached_cp2(cache, s, kh, opt));
    const bool same = same_up_to_sign(d4.back(), cp2.back());
    blowdown_ok = blowdown_ok && same;
    ojson e;
    e["p"] = s.p;
    e["q"] = s.q;
    e["alpha"] = s.alpha();
    e["neck_frames"] = s.neck.frames.size();
    e["neck_sha256"] = sha256(movie_to_json(s.neck));
    e["disk_functional"] = zvec(d4.back().values);
    e["cp2_functional"] = zvec(cp2.back().values);
    e["equal_up_to_sign"] = same;
    surfaces[name] = e;
    t << "  " << name << ": Kh(m(Sigma)) = " << functional_text(d4.back()) << ", Kh_CP2(S) = "
      << functional_text(cp2.back()) << (same ? " (equal up to sign)" : " (DIFFERENT)") << "\n";
  }
  const TorusProjection tp = torus_projection(1, 0, torus_budget(opt));
  ojson gen = ojson::array();
  std::vector<std::pair<Gen, i64>> terms(tp.generator.begin(), tp.generator.end());
  std::sort(terms.begin(), terms.end());
  for (const auto& [gg, c] : terms) gen.push_back({gg.vertex, gg.xmask, c});
  res["torus_generator"] = {{"p", 1}, {"q", 0}, {"j", tp.j}, {"cycle", gen}};
  res["surfaces"] = surfaces;
  const Verdict v = distinguish(cp2[0], cp2[1]);
  res["cp2_verdict"] = verdict_json(v, cp2[0], cp2[1]);
  res["blowdown_agrees"] = blowdown_ok;
  r.json["inputs"] = disk_inputs(disks);
  r.json["inputs"]["k"] = k;
  r.json["results"] = res;
  const bool ok = blowdown_ok && v.distinct;
  r.json["verdict"] = ok ? "pass" : "fail";
  r.exit_code = ok ? kSuccess : kNegative;
  std::ostringstream head;
  head << "m(J_" << k << "), blow-ups S, S' with (p,q) = (1,0):\n";
  t << (v.distinct ? "  CP2 functionals distinct: phi = " + res["cp2_verdict"]["witness"].dump() + " gives " +
                         res["cp2_verdict"]["values"].dump()
                   : std::string("  CP2 functionals not distinguished"))
    << "\n";
  r.text = head.str() + t.str();
  return r;
}

Report cmd_torus_table(int max_n, const Options& opt) {
  if (max_n < 1) throw InputError("max_n must be at least 1");
  if (max_n > 5) throw InfeasibleError("torus links beyond p+q = 5 are outside the feasible range");
  Cache cache(opt.cache_dir);
  Report r;
  r.json = skeleton("torus-table");
  r.json["inputs"] = {{"max_n", max_n}};
  ojson rows = ojson::array();
  bool all_ok = true;
  std::ostringstream t;
  t << "  p  q  grq  Kh^{0,grq}  zero below  Lee degree\n";
  for (int n = 1; n <= max_n; ++n) {
    for (int p = n; p >= 0; --p) {
      const int q = n - p;
      const int g = grq(p, q);
      const std::string key = sha256("torus|" + std::to_string(kConventionVersion) + "|" + std::to_string(p) + "|" +
                                     std::to_string(q));
      const auto row = cache.get_or(key, [&] {
        const auto kh = torus_slice(p, q, torus_budget(opt));
        nlohmann::json slices = nlohmann::json::array();
        bool zero_below = true;
        for (const auto& [bd, grp] : kh->groups()) {
          if (bd.first != 0 || grp.is_zero()) continue;
          slices.push_back(nlohmann::json::parse(group_json(grp).dump()));
          if (bd.second < g) zero_below = false;
        }
        const HomologyGroup& at = kh->group(0, g);
        nlohmann::json e;
        e["slices"] = slices;
        e["z_at_grq"] = at.free_rank == 1 && at.torsion.empty();
        e["zero_below"] = zero_below;
        if (n <= 3) {
          const Frame f(torus_link(p, q));
          e["lee_degree"] = filtration_degree(f, lee_generator(f));
        }
        return e;
      });
      ojson o;
      o["p"] = p;
      o["q"] = q;
      o["grq"] = g;
      for (const auto& [kk, vv] : row.items()) o[kk] = vv;
      const bool lee_ok = !row.contains("lee_degree") || row["lee_degree"].get<int>() == g;
      const bool ok = row["z_at_grq"].get<bool>() && row["zero_below"].get<bool>() && lee_ok;
      o["ok"] = ok;
      all_ok = all_ok && ok;
      rows.push_back(o);
      t << std::setw(3) << p << std::setw(3) << q << std::setw(5) << g << std::setw(12)
        << (row["z_at_grq"].get<bool>() ? "Z" : "not Z") << std::setw(12) << (row["zero_below"].get<bool>() ? "yes" : "NO")
        << std::setw(12) << (row.contains("lee_degree") ? std::to_string(row["lee_degree"].get<int>()) : "-") << "\n";
    }
  }
  r.json["results"] = {{"rows", rows}};
  r.json["verdict"] = all_ok ? "pass" : "fail";
  r.exit_code = all_ok ? kSuccess : kNegative;
  r.text = t.str();
  return r;
}

Report cmd_movie_check(const std::string& movie_file, const Options&) {
  const std::string text = read_file(movie_file);
  Movie m;
  std::optional<int> bad;
  const bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (!blank) {
    m = movie_from_json(text);
    bad = first_invalid_move(m);
  }
  Report r;
  r.json = skeleton("movie-check");
  r.json["inputs"] = {{"movie_sha256", sha256(text)}};
  ojson res;
  res["frames"] = blank ? 0 : m.frames.size();
  res["moves"] = m.moves.size();
  res["valid"] = !bad.has_value();
  res["first_invalid"] = bad ? ojson(*bad) : ojson(nullptr);
  r.json["results"] = res;
  r.json["verdict"] = bad ? "invalid" : "valid";
  r.exit_code = bad ? kNegative : kSuccess;
  r.text = bad ? "movie invalid: move " + std::to_string(*bad) + " does not connect its frames\n"
               : "movie valid (" + std::to_string(m.moves.size()) + " moves)\n";
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InfeasibleError*>(&e)) return kInfeasible;
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const MapError*>(&e) ||
      dynamic_cast<const MoveError*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e))
    return kInputError;
  return kNegative;
}

}  // namespace khoxotic
