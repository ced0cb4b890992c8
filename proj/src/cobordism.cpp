#include "khoxotic/cobordism.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace khoxotic {

Frame::Frame(Diagram d) : d_(std::move(d)), cube_(CubeData::from(d_)) {
  cache_ = std::make_unique<CircleCache>(cube_);
  arcs_ = cube_.used_arcs();
}

int Frame::label(const Gen& g, int arc) const {
  const Circles& c = circles(g.vertex);
  return static_cast<int>((g.xmask >> c.of_arc.at(arc)) & 1);
}

std::vector<int> Frame::reps_avoiding(std::uint64_t v, const std::set<int>& avoid) const {
  const Circles& c = circles(v);
  std::vector<int> out(c.count, -1);
  for (int a : arcs_) {
    if (avoid.count(a)) continue;
    const int k = c.of_arc[a];
    if (out[k] < 0) out[k] = a;
  }
  return out;
}

SparseVec scaled(const SparseVec& v, i64 c) {
  SparseVec out;
  if (c == 0) return out;
  for (const auto& [g, x] : v) out.emplace(g, mul_checked(x, c));
  return out;
}

void add_into(SparseVec& acc, const SparseVec& v, i64 c) {
  if (c == 0) return;
  for (const auto& [g, x] : v) {
    i64& slot = acc[g];
    slot = add_checked(slot, mul_checked(x, c));
    if (slot == 0) acc.erase(g);
  }
}

namespace {

template <class Pred>
SparseVec filtered(const SparseVec& v, Pred keep) {
  SparseVec out;
  for (const auto& [g, x] : v)
    if (x != 0 && keep(g)) out.emplace(g, x);
  return out;
}

std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

// Sign correcting edge signs when the local crossings are deleted from the
// crossing order: each local 1-bit flips the sign of edges at later outer
// crossings.
int psi(std::uint64_t vertex, const std::vector<int>& local, int n) {
  int parity = 0;
  std::uint64_t outer_mask = (n == 64 ? ~std::uint64_t{0} : bit(n) - 1);
  for (int c : local) outer_mask &= ~bit(c);
  for (int c : local) {
    if (!((vertex >> c) & 1)) continue;
    const std::uint64_t later = outer_mask & ~((bit(c) << 1) - 1);
    parity += std::popcount(vertex & later);
  }
  return parity & 1 ? -1 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// LocalReduction

LocalReduction::LocalReduction(const Frame& f, std::vector<int> local, std::set<int> inner, std::set<int> fixed)
    : f_(f), local_(std::move(local)), inner_(std::move(inner)) {
  const int K = static_cast<int>(local_.size());
  int found = 0;
  for (unsigned p = 0; p < (1u << K); ++p) {
    std::uint64_t v = 0;
    for (int k = 0; k < K; ++k)
      if ((p >> k) & 1) v |= bit(local_[k]);
    const Circles& c = f_.circles(v);
    const int o = c.of_arc.at(*inner_.begin());
    bool exact = true;
    for (int a : inner_) exact = exact && c.of_arc.at(a) == o;
    for (int a : f_.cube().used_arcs())
      if (c.of_arc[a] == o && !inner_.count(a)) exact = false;
    if (exact) {
      o_pattern_ = p;
      ++found;
    }
  }
  if (found != 1) throw MapError("local circle does not appear at exactly one local resolution");
  std::vector<int> ones, zeros;
  for (int k = 0; k < K; ++k) {
    if (fixed.count(local_[k])) continue;
    ((o_pattern_ >> k) & 1 ? ones : zeros).push_back(k);
  }
  if (ones.size() + zeros.size() == 1) {
    steps_.push_back({!ones.empty(), ones.empty() ? zeros[0] : ones[0]});
  } else if (ones.size() == 1 && zeros.size() == 1) {
    steps_.push_back({true, ones[0]});
    steps_.push_back({false, zeros[0]});
  } else {
    throw MapError("unsupported local pattern for elimination");
  }
  memo_.resize(steps_.size());
}

unsigned LocalReduction::pattern(std::uint64_t vertex) const {
  unsigned p = 0;
  for (size_t k = 0; k < local_.size(); ++k)
    if ((vertex >> local_[k]) & 1) p |= 1u << k;
  return p;
}

bool LocalReduction::in_a(int s, const Gen& g) const {
  const Step& st = steps_[s];
  const unsigned p = pattern(g.vertex);
  if (st.split) return p == (o_pattern_ ^ (1u << st.flip));
  return p == o_pattern_ && !o_is_x(g);
}

bool LocalReduction::in_b(int s, const Gen& g) const {
  const Step& st = steps_[s];
  const unsigned p = pattern(g.vertex);
  if (st.split) return p == o_pattern_ && o_is_x(g);
  return p == (o_pattern_ ^ (1u << st.flip));
}

bool LocalReduction::removed(int upto, const Gen& g) const {
  for (int s = 0; s < upto; ++s)
    if (in_a(s, g) || in_b(s, g)) return true;
  return false;
}

SparseVec LocalReduction::dk(int k, const SparseVec& v) const {
  if (k == 0) return f_.d(v);
  const int s = k - 1;
  SparseVec w = dk(s, v);
  const SparseVec corr = dk(s, phi_inv(s, filtered(w, [&](const Gen& g) { return in_b(s, g); })));
  add_into(w, corr, -1);
  return filtered(w, [&](const Gen& g) { return !removed(k, g); });
}

SparseVec LocalReduction::phi_inv(int s, const SparseVec& b) const {
  SparseVec out;
  const Step& st = steps_[s];
  for (const auto& [g, c] : b) {
    auto it = memo_[s].find(g);
    if (it == memo_[s].end()) {
      Gen a{g.vertex ^ bit(local_[st.flip]), 0};
      const auto reps = f_.reps_avoiding(a.vertex, inner_);
      for (size_t k = 0; k < reps.size(); ++k) {
        if (reps[k] < 0) {
          if (st.split) throw MapError("elimination: stray local circle");
          continue;  // O labelled 1
        }
        if (f_.label(g, reps[k])) a.xmask |= bit(static_cast<int>(k));
      }
      const SparseVec da = filtered(dk(s, {{a, 1}}), [&](const Gen& x) { return in_b(s, x); });
      if (da.size() != 1 || !da.count(g) || (da.at(g) != 1 && da.at(g) != -1))
        throw MapError("elimination: cancelled component is not a signed bijection");
      it = memo_[s].emplace(g, std::pair{a, da.at(g)}).first;
    }
    const auto& [a, e] = it->second;
    i64& slot = out[a];
    slot = add_checked(slot, mul_checked(c, e));
    if (slot == 0) out.erase(a);
  }
  return out;
}

SparseVec LocalReduction::to(const SparseVec& v_in) const {
  SparseVec v = v_in;
  for (int s = 0; s < static_cast<int>(steps_.size()); ++s) {
    const SparseVec corr = dk(s, phi_inv(s, filtered(v, [&](const Gen& g) { return in_b(s, g); })));
    add_into(v, corr, -1);
    v = filtered(v, [&](const Gen& g) { return !removed(s + 1, g); });
  }
  return v;
}

SparseVec LocalReduction::from(const SparseVec& r_in) const {
  SparseVec r = r_in;
  for (int s = static_cast<int>(steps_.size()) - 1; s >= 0; --s) {
    const SparseVec x = filtered(dk(s, r), [&](const Gen& g) { return in_b(s, g); });
    add_into(r, phi_inv(s, x), -1);
  }
  return r;
}

// ---------------------------------------------------------------------------
// R1 / R2

namespace {

// Identification of the surviving part of a reduced diagram D with the
// complex of D' = D minus the local crossings.
class Collapse {
 public:
  Collapse(const Frame& big, const Frame& small, std::vector<int> local, std::set<int> inner)
      : big_(big), small_(small), red_(big, local, inner), local_(std::move(local)) {
    const Diagram reduced = remove_crossings(big.diagram(), {local_.begin(), local_.end()}, red_.inner(), &amap_);
    if (!(reduced == small.diagram())) throw MapError("frames do not match the move");
    const unsigned all = (1u << local_.size()) - 1;
    if (local_.size() == 1) {
      surv_pattern_ = red_.o_pattern();
      o_label_ = red_.o_pattern() ? 0 : 1;
    } else {
      surv_pattern_ = red_.o_pattern() ^ all;
    }
  }

  Gen expand_vertex(std::uint64_t small_v) const {
    std::uint64_t v = 0;
    int k = 0;
    for (int c = 0; c < big_.diagram().size(); ++c) {
      const auto it = std::find(local_.begin(), local_.end(), c);
      if (it != local_.end()) {
        if ((surv_pattern_ >> (it - local_.begin())) & 1) v |= bit(c);
      } else {
        if ((small_v >> k) & 1) v |= bit(c);
        ++k;
      }
    }
    return {v, 0};
  }

  std::uint64_t compress_vertex(std::uint64_t v) const {
    std::uint64_t out = 0;
    int k = 0;
    for (int c = 0; c < big_.diagram().size(); ++c) {
      if (std::find(local_.begin(), local_.end(), c) != local_.end()) continue;
      if ((v >> c) & 1) out |= bit(k);
      ++k;
    }
    return out;
  }

  SparseVec iota(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [g, x] : v) {
      Gen h{compress_vertex(g.vertex), 0};
      const Circles& cs = small_.circles(h.vertex);
      const auto reps = big_.reps_avoiding(g.vertex, red_.inner());
      for (size_t k = 0; k < reps.size(); ++k)
        if (reps[k] >= 0 && ((g.xmask >> k) & 1)) h.xmask |= bit(cs.of_arc.at(amap_.at(reps[k])));
      const i64 s = psi(g.vertex, local_, big_.diagram().size());
      out.emplace(h, mul_checked(x, s));
    }
    return out;
  }

  SparseVec iota_inv(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [h, x] : v) {
      Gen g = expand_vertex(h.vertex);
      const auto reps = big_.reps_avoiding(g.vertex, red_.inner());
      for (size_t k = 0; k < reps.size(); ++k) {
        const int lab = reps[k] < 0 ? o_label_ : small_.label(h, amap_.at(reps[k]));
        if (lab) g.xmask |= bit(static_cast<int>(k));
      }
      const i64 s = psi(g.vertex, local_, big_.diagram().size());
      out.emplace(g, mul_checked(x, s));
    }
    return out;
  }

  const LocalReduction& reduction() const { return red_; }

 private:
  const Frame& big_;
  const Frame& small_;
  LocalReduction red_;
  std::vector<int> local_;
  std::map<int, int> amap_;
  unsigned surv_pattern_ = 0;
  int o_label_ = 0;
};

class RemovalMap : public ElementaryMap {
 public:
  RemovalMap(const Frame& big, const Frame& small, std::vector<int> local, std::set<int> inner)
      : c_(big, small, std::move(local), std::move(inner)) {}
  SparseVec operator()(const SparseVec& v) const override { return c_.iota(c_.reduction().to(v)); }

 private:
  Collapse c_;
};

class InsertionMap : public ElementaryMap {
 public:
  InsertionMap(const Frame& small, const Frame& big, std::vector<int> local, std::set<int> inner)
      : c_(big, small, std::move(local), std::move(inner)) {}
  SparseVec operator()(const SparseVec& v) const override { return c_.reduction().from(c_.iota_inv(v)); }

 private:
  Collapse c_;
};

struct RSite {
  std::vector<int> local;
  std::set<int> inner;
};

RSite r1_site(const Move& m) {
  if (m.crossings.size() != 1 || m.arcs.size() != 1) throw MapError("R1 site needs one crossing and one arc");
  return {{m.crossings[0]}, {m.arcs[0]}};
}

RSite r2_site(const Diagram& d, const Move& m) {
  if (m.crossings.size() != 2) throw MapError("R2 site needs two crossings");
  const int c1 = std::min(m.crossings[0], m.crossings[1]), c2 = std::max(m.crossings[0], m.crossings[1]);
  for (const auto& face : d.faces()) {
    if (face.size() != 2) continue;
    const int a = face[0].arc, b = face[1].arc;
    const ArcEnds& ea = d.ends(a);
    const ArcEnds& eb = d.ends(b);
    const std::set<int> ca{ea.tail.crossing, ea.head.crossing}, cb{eb.tail.crossing, eb.head.crossing};
    if (ca == std::set<int>{c1, c2} && cb == ca) return {{c1, c2}, {a, b}};
  }
  throw MapError("R2 site has no bigon");
}

// ---------------------------------------------------------------------------
// R3

class R3Map : public ElementaryMap {
 public:
  R3Map(const Frame& left, const Frame& right, const Move& m) : left_(left), right_(right) {
    if (m.crossings.size() != 3) throw MapError("R3 site needs three crossings");
    const R3Site sl = r3_site(left.diagram(), m.crossings[0], m.crossings[1], m.crossings[2], m.arcs);
    const std::vector<int> inner_ids(sl.inner.begin(), sl.inner.end());
    const R3Site sr = r3_site(right.diagram(), m.crossings[0], m.crossings[1], m.crossings[2], inner_ids);
    const int x = sl.lines_crossing[sl.top];
    if (sr.lines_crossing[sr.top] != x) throw MapError("R3: middle crossing moved");
    std::vector<int> ts;
    for (int c : m.crossings)
      if (c != x) ts.push_back(c);
    std::sort(ts.begin(), ts.end());
    local_ = {x, ts[0], ts[1]};
    const std::set<int> inner(sl.inner.begin(), sl.inner.end());
    inner_ = inner;
    l_ = std::make_unique<LocalReduction>(left, local_, inner, std::set<int>{x});
    r_ = std::make_unique<LocalReduction>(right, local_, inner, std::set<int>{x});
    if ((l_->o_pattern() & 1) != (r_->o_pattern() & 1)) throw MapError("R3: middle crossing bit differs");
    choose_identification();
  }

  SparseVec operator()(const SparseVec& v) const override { return r_->from(iota(l_->to(v), swap_, eps_)); }

 private:
  // The square at the non-turning smoothing of the middle crossing matches
  // up to swapping the two top crossings; the lone surviving vertex at the
  // turning smoothing goes to its counterpart.
  std::uint64_t permute(std::uint64_t v, bool swap) const {
    const int x = local_[0], a = local_[1], b = local_[2];
    const std::uint64_t ba = (v >> a) & 1, bb = (v >> b) & 1;
    v &= ~(bit(a) | bit(b));
    if (((v >> x) & 1) == (r_->o_pattern() & 1)) {
      const unsigned comp = r_->o_pattern() ^ 6u;
      return v | (std::uint64_t{(comp >> 1) & 1u} << a) | (std::uint64_t{(comp >> 2) & 1u} << b);
    }
    if (!swap) return v | (ba << a) | (bb << b);
    return v | (ba << b) | (bb << a);
  }

  // Returns false if the arc transport is not a bijection of circles.
  bool transport(const Gen& g, bool swap, Gen& out) const {
    out = {permute(g.vertex, swap), 0};
    const Circles& cl = left_.circles(g.vertex);
    const Circles& cr = right_.circles(out.vertex);
    if (cl.count != cr.count) return false;
    const auto reps = left_.reps_avoiding(g.vertex, inner_);
    std::uint64_t hit = 0;
    for (size_t k = 0; k < reps.size(); ++k) {
      if (reps[k] < 0) return false;
      const std::uint64_t t = bit(cr.of_arc.at(reps[k]));
      if (hit & t) return false;
      hit |= t;
      if ((g.xmask >> k) & 1) out.xmask |= t;
    }
    return true;
  }

  SparseVec iota(const SparseVec& v, bool swap, const std::array<int, 8>& eps) const {
    SparseVec out;
    const int n = left_.diagram().size();
    for (const auto& [g, x] : v) {
      Gen h;
      if (!transport(g, swap, h)) throw MapError("R3: circle transport failed");
      const i64 s = psi(g.vertex, local_, n) * psi(h.vertex, local_, n) * eps[l_->pattern(g.vertex)];
      i64& slot = out[h];
      slot = add_checked(slot, mul_checked(x, s));
      if (slot == 0) out.erase(h);
    }
    return out;
  }

  void choose_identification() {
    const int n = left_.diagram().size();
    const unsigned b = l_->o_pattern() & 1;
    std::vector<unsigned> pats;
    for (unsigned p = 0; p < 8; ++p) {
      if ((p & 1) != b || p == ((l_->o_pattern() ^ 6u) & 7u)) pats.push_back(p);
    }
    std::mt19937_64 rng(12345);
    std::vector<Gen> tests;
    std::uint64_t outer = 0;
    for (int c = 0; c < n; ++c)
      if (std::find(local_.begin(), local_.end(), c) == local_.end()) outer |= bit(c);
    for (unsigned p : pats) {
      std::uint64_t lv = 0;
      for (int k = 0; k < 3; ++k)
        if ((p >> k) & 1) lv |= bit(local_[k]);
      for (int t = 0; t < 4; ++t) {
        const std::uint64_t ov = t == 0 ? 0 : t == 1 ? outer : (rng() & outer);
        const std::uint64_t v = lv | ov;
        const int count = left_.circles(v).count;
        const std::uint64_t all = count == 64 ? ~std::uint64_t{0} : bit(count) - 1;
        for (std::uint64_t mask : {std::uint64_t{0}, rng() & all}) {
          const Gen g{v, mask};
          if (l_->survivor(g)) tests.push_back(g);
        }
      }
    }
    std::vector<SparseVec> dl;
    for (const Gen& g : tests) dl.push_back(l_->reduced_d({{g, 1}}));
    for (bool swap : {false, true}) {
      std::vector<Gen> images;
      bool ok = true;
      for (const Gen& g : tests) {
        Gen h;
        ok = ok && transport(g, swap, h) && r_->survivor(h);
        images.push_back(h);
      }
      if (!ok) continue;
      std::vector<SparseVec> dr;
      for (const Gen& h : images) dr.push_back(r_->reduced_d({{h, 1}}));
      for (unsigned e = 0; e < (1u << pats.size()); ++e) {
        std::array<int, 8> eps{};
        eps.fill(1);
        for (size_t k = 0; k < pats.size(); ++k) eps[pats[k]] = (e >> k) & 1 ? -1 : 1;
        bool good = true;
        for (size_t t = 0; t < tests.size() && good; ++t) {
          SparseVec lhs;
          try {
            lhs = iota(dl[t], swap, eps);
          } catch (const MapError&) {
            good = false;
            break;
          }
          const i64 s = psi(tests[t].vertex, local_, n) * psi(images[t].vertex, local_, n) *
                        eps[l_->pattern(tests[t].vertex)];
          good = lhs == scaled(dr[t], s);
        }
        if (good) {
          swap_ = swap;
          eps_ = eps;
          return;
        }
      }
    }
    throw MapError("R3: reduced complexes could not be matched");
  }

  const Frame& left_;
  const Frame& right_;
  std::vector<int> local_;
  std::set<int> inner_;
  std::unique_ptr<LocalReduction> l_, r_;
  bool swap_ = false;
  std::array<int, 8> eps_{};
};

// ---------------------------------------------------------------------------
// Saddle, birth, death

class PlanarMap : public ElementaryMap {
 public:
  PlanarMap(const Frame& before, const Frame& after, std::set<int> touched, int shift)
      : before_(before), after_(after), touched_(std::move(touched)), shift_(shift) {
    const auto ab = before.cube().used_arcs(), aa = after.cube().used_arcs();
    for (int a : touched_) {
      if (std::binary_search(ab.begin(), ab.end(), a)) in_before_.push_back(a);
      if (std::binary_search(aa.begin(), aa.end(), a)) in_after_.push_back(a);
    }
  }

  int q_shift() const override { return shift_; }

  SparseVec operator()(const SparseVec& v) const override {
    SparseVec out;
    for (const auto& [g, x] : v) {
      const Circles& cb = before_.circles(g.vertex);
      const Circles& ca = after_.circles(g.vertex);
      std::set<int> src, dst;
      for (int a : in_before_) src.insert(cb.of_arc[a]);
      for (int a : in_after_) dst.insert(ca.of_arc[a]);
      const auto reps = before_.reps_avoiding(g.vertex, touched_);
      std::uint64_t base = 0;
      for (int k = 0; k < cb.count; ++k) {
        if (src.count(k)) continue;
        if (reps[k] < 0) throw MapError("saddle: untouched circle without a free arc");
        if ((g.xmask >> k) & 1) base |= bit(ca.of_arc.at(reps[k]));
      }
      int xs = 0;
      for (int k : src) xs += (g.xmask >> k) & 1;
      const std::vector<int> d(dst.begin(), dst.end());
      auto emit = [&](std::uint64_t m, i64 c) {
        i64& slot = out[Gen{g.vertex, m}];
        slot = add_checked(slot, mul_checked(x, c));
        if (slot == 0) out.erase(Gen{g.vertex, m});
      };
      if (src.size() == 2 && dst.size() == 1) {
        if (xs == 2) continue;
        emit(base | (xs ? bit(d[0]) : 0), 1);
      } else if (src.size() == 1 && dst.size() == 2) {
        if (xs) {
          emit(base | bit(d[0]) | bit(d[1]), 1);
        } else {
          emit(base | bit(d[0]), 1);
          emit(base | bit(d[1]), 1);
        }
      } else if (src.empty() && dst.size() == 1) {
        emit(base, 1);
      } else if (src.size() == 1 && dst.empty()) {
        if (xs) emit(base, 1);
      } else {
        throw MapError("planar move changes circles in an unexpected way");
      }
    }
    return out;
  }

 private:
  const Frame& before_;
  const Frame& after_;
  std::set<int> touched_;
  int shift_;
  std::vector<int> in_before_, in_after_;
};

class RelabelMap : public ElementaryMap {
 public:
  RelabelMap(const Frame& before, const Frame& after, const Move& m) : before_(before), after_(after), m_(m) {
    if (!(relabel_move(before.diagram(), m.arc_map, m.order) == after.diagram())) throw MapError("relabel: frames do not match");
  }

  SparseVec operator()(const SparseVec& v) const override {
    SparseVec out;
    const int n = static_cast<int>(m_.order.size());
    for (const auto& [g, x] : v) {
      Gen h{0, 0};
      for (int k = 0; k < n; ++k)
        if ((g.vertex >> m_.order[k]) & 1) h.vertex |= bit(k);
      int inv = 0;
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = k1 + 1; k2 < n; ++k2)
          if (((h.vertex >> k1) & 1) && ((h.vertex >> k2) & 1) && m_.order[k1] > m_.order[k2]) ++inv;
      const Circles& cb = before_.circles(g.vertex);
      const Circles& ca = after_.circles(h.vertex);
      for (int k = 0; k < cb.count; ++k)
        if ((g.xmask >> k) & 1) h.xmask |= bit(ca.of_arc.at(m_.arc_map.at(cb.rep[k])));
      out.emplace(h, inv & 1 ? -x : x);
    }
    return out;
  }

 private:
  const Frame& before_;
  const Frame& after_;
  Move m_;
};

}  // namespace

std::unique_ptr<ElementaryMap> make_elementary_map(const Frame& before, const Move& m, const Frame& after) {
  if (!move_connects(before.diagram(), m, after.diagram()))
    throw MapError("move " + to_string(m.kind) + " does not connect the frames");
  switch (m.kind) {
    case MoveKind::R1Minus: {
      auto s = r1_site(m);
      return std::make_unique<RemovalMap>(before, after, s.local, s.inner);
    }
    case MoveKind::R1Plus: {
      auto s = r1_site(m);
      return std::make_unique<InsertionMap>(before, after, s.local, s.inner);
    }
    case MoveKind::R2Minus: {
      auto s = r2_site(before.diagram(), m);
      return std::make_unique<RemovalMap>(before, after, s.local, s.inner);
    }
    case MoveKind::R2Plus: {
      auto s = r2_site(after.diagram(), m);
      return std::make_unique<InsertionMap>(before, after, s.local, s.inner);
    }
    case MoveKind::R3: return std::make_unique<R3Map>(before, after, m);
    case MoveKind::Saddle: {
      std::set<int> touched{m.arcs[0], m.arcs[1]};
      if (m.arcs[0] == m.arcs[1]) touched.insert(m.new_arc ? m.new_arc : before.diagram().max_arc() + 1);
      return std::make_unique<PlanarMap>(before, after, touched, -1);
    }
    case MoveKind::Birth: {
      const int l = m.arcs.at(0) ? m.arcs[0] : before.diagram().max_arc() + 1;
      return std::make_unique<PlanarMap>(before, after, std::set<int>{l}, 1);
    }
    case MoveKind::Death: return std::make_unique<PlanarMap>(before, after, std::set<int>{m.arcs.at(0)}, 1);
    case MoveKind::Relabel: return std::make_unique<RelabelMap>(before, after, m);
  }
  throw MapError("unknown move");
}

SparseVec chain_defect(const ElementaryMap& f, const Frame& before, const Frame& after, const SparseVec& v) {
  SparseVec a = after.d(f(v));
  add_into(a, f(before.d(v)), -1);
  return a;
}

}  // namespace khoxotic
