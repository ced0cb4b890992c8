#include "doctest.h"

#include <random>

#include "khoxotic/cobordism.hpp"
#include "khoxotic/families.hpp"
#include "khoxotic/homology.hpp"
#include "khoxotic/movie.hpp"

using namespace khoxotic;

namespace {

std::vector<int> random_word(std::mt19937& rng, int strands, int len) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

// A few random generators spread over the cube.
std::vector<Gen> sample_gens(const Frame& f, std::mt19937_64& rng, int count) {
  std::vector<Gen> out;
  const int n = f.diagram().size();
  for (int t = 0; t < count; ++t) {
    const std::uint64_t v = n ? rng() & ((std::uint64_t{1} << n) - 1) : 0;
    const int c = f.circles(v).count;
    out.push_back({v, rng() & ((std::uint64_t{1} << c) - 1)});
  }
  return out;
}

void check_chain_map(const Diagram& a, const Move& m, const Diagram& b, std::mt19937_64& rng) {
  Frame fa(a), fb(b);
  auto f = make_elementary_map(fa, m, fb);
  for (const Gen& g : sample_gens(fa, rng, 12)) CHECK(chain_defect(*f, fa, fb, {{g, 1}}).empty());
}

Move insertion_of(const Move& m) {
  Move inv = m;
  inv.kind = m.kind == MoveKind::R1Minus ? MoveKind::R1Plus : MoveKind::R2Plus;
  return inv;
}

}  // namespace

TEST_CASE("birth, death and saddle on circles") {
  const Diagram empty;
  const Diagram u = parse_pd("O[1]");
  Frame fe(empty), fu(u);
  auto b = make_elementary_map(fe, {MoveKind::Birth, {}, {1}}, fu);
  CHECK((*b)({{Gen{0, 0}, 1}}) == SparseVec{{Gen{0, 0}, 1}});
  auto d = make_elementary_map(fu, {MoveKind::Death, {}, {1}}, fe);
  CHECK((*d)({{Gen{0, 1}, 1}}) == SparseVec{{Gen{0, 0}, 1}});
  CHECK((*d)({{Gen{0, 0}, 1}}).empty());

  const Diagram two = parse_pd("O[1]\nO[2]");
  Frame f2(two);
  auto merge = make_elementary_map(f2, {MoveKind::Saddle, {}, {1, 2}}, fu);
  CHECK((*merge)({{Gen{0, 3}, 1}}).empty());
  CHECK((*merge)({{Gen{0, 1}, 1}}) == SparseVec{{Gen{0, 1}, 1}});
  CHECK((*merge)({{Gen{0, 0}, 1}}) == SparseVec{{Gen{0, 0}, 1}});
  auto split = make_elementary_map(fu, {MoveKind::Saddle, {}, {1, 1}}, f2);
  CHECK((*split)({{Gen{0, 0}, 1}}) == SparseVec{{Gen{0, 1}, 1}, {Gen{0, 2}, 1}});
  CHECK((*split)({{Gen{0, 1}, 1}}) == SparseVec{{Gen{0, 3}, 1}});
}

TEST_CASE("R-move maps commute with the differential") {
  std::mt19937 rng(11);
  std::mt19937_64 grng(5);
  int r1 = 0, r2 = 0, r3 = 0;
  for (int t = 0; t < 30; ++t) {
    const int strands = 2 + t % 3;
    const Diagram d = braid_closure(strands, random_word(rng, strands, 3 + t % 5));
    for (const auto& list : {r1_sites(d), r2_sites(d), r3_sites(d)})
      for (const Move& m : list) {
        const Diagram e = apply_move(d, m);
        check_chain_map(d, m, e, grng);
        if (m.kind == MoveKind::R3) {
          ++r3;
          continue;
        }
        check_chain_map(e, insertion_of(m), d, grng);
        (m.kind == MoveKind::R1Minus ? r1 : r2)++;
      }
  }
  CHECK(r1 > 0);
  CHECK(r2 > 0);
  CHECK(r3 > 0);
}

TEST_CASE("saddle maps commute with the differential") {
  std::mt19937_64 grng(9);
  const Diagram d = braid_closure(3, {1, -2, 1, -2});
  for (const auto& [e, f] : saddle_sites(d)) {
    const Diagram s = saddle(d, e, f);
    check_chain_map(d, {MoveKind::Saddle, {}, {e, f}}, s, grng);
  }
}

namespace {

// Sign s with f = s * identity on the free part of homology; 0 if f is not.
int identity_sign(const Movie& movie, const KhHomology& kh) {
  MovieMap f(movie);
  int sign = 0;
  for (const auto& [key, h] : kh.groups()) {
    for (int k = 0; k < h.free_rank; ++k) {
      const SparseVec img = f(kh.lift_free(key.first, key.second, k), true);
      const auto c = kh.free_coords(key.first, key.second, img);
      for (int t = 0; t < h.free_rank; ++t) {
        if (t != k && c[t] != 0) return 0;
        if (t == k) {
          if (c[t] != 1 && c[t] != -1) return 0;
          const int s = c[t] > 0 ? 1 : -1;
          if (sign && s != sign) return 0;
          sign = s;
        }
      }
    }
  }
  return sign;
}

Movie there_and_back(const Diagram& d, const Move& m) {
  Movie movie = Movie::starting_at(d);
  movie.push(m);
  const Movie back = reverse_movie(movie);
  movie.append(back);
  return movie;
}

}  // namespace

TEST_CASE("forward and inverse R-moves give plus or minus the identity") {
  const std::vector<std::pair<int, std::vector<int>>> words = {
      {2, {1, 1, 1, -1}}, {3, {1, 2, 1}}, {3, {1, -2, 1, -2}}, {3, {2, 1, 2, -1}}, {2, {-1, -1, 1}},
      {3, {1, 1, 2, -1, 2}}, {4, {1, 2, 3, 1, 2}}, {3, {-1, 2, -1, 2, 2}}};
  int cases = 0;
  for (const auto& [n, w] : words) {
    const Diagram d = braid_closure(n, w);
    const KhHomology kh(d, Window::all());
    for (const auto& list : {r1_sites(d), r2_sites(d), r3_sites(d)})
      for (const Move& m : list) {
        CAPTURE(serialize_pd(d));
        CAPTURE(move_to_json(m));
        CHECK(identity_sign(there_and_back(d, m), kh) != 0);
        ++cases;
      }
  }
  CHECK(cases >= 10);
}
