#include <doctest.h>

#include <algorithm>
#include <set>

#include "chowrn/corpus.hpp"
#include "chowrn/error.hpp"
#include "chowrn/matroid.hpp"

using namespace chowrn;

namespace {

Subset S(std::initializer_list<int> e) {
  Subset s = 0;
  for (int x : e) s |= Subset{1} << (x - 1);
  return s;
}

bool satisfies_rank_axioms(int n, auto rank) {
  for (Subset a = 0; a <= full_set(n); ++a) {
    if (rank(a) < 0 || rank(a) > cardinality(a)) return false;
    for (int e = 0; e < n; ++e) {
      const Subset b = a | (Subset{1} << e);
      const int d = rank(b) - rank(a);
      if (d < 0 || d > 1) return false;
    }
    for (Subset b = 0; b <= full_set(n); ++b)
      if (rank(a | b) + rank(a & b) > rank(a) + rank(b)) return false;
  }
  return true;
}

// Flats by brute force: S is closed iff adding any outside element raises the rank.
std::vector<Subset> brute_force_flats(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    bool closed = true;
    for (int e = 0; e < m.size() && closed; ++e)
      if (!(s >> e & 1) && m.rank(s | (Subset{1} << e)) == m.rank(s)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("uniform matroids") {
  const auto u24 = Matroid::uniform(2, 4);
  CHECK(u24.rank(S({1, 2, 3})) == 2);
  CHECK(u24.circuits() == std::vector<Subset>{S({1, 2, 3}), S({1, 2, 4}), S({1, 3, 4}), S({2, 3, 4})});

  const auto u03 = Matroid::uniform(0, 3);
  for (Subset s = 0; s <= u03.ground(); ++s) {
    CHECK(u03.rank(s) == 0);
    CHECK(u03.nullity(s) == cardinality(s));
  }
  const auto u55 = Matroid::uniform(5, 5);
  for (Subset s = 0; s <= u55.ground(); ++s) CHECK(u55.rank(s) == cardinality(s));
  CHECK(Matroid::uniform(3, 3).flats().size() == 8);
}

TEST_CASE("from_bases and loops") {
  const std::vector<Subset> bases{S({1})};
  const auto m = Matroid::from_bases(2, bases);
  CHECK(m.rank(S({1})) == 1);
  CHECK(m.rank(S({2})) == 0);
  CHECK(m.rank(S({1, 2})) == 1);
  CHECK(m.loops() == S({2}));
  CHECK_FALSE(m.loopless());
  CHECK(m.flats() == std::vector<Subset>{S({2}), S({1, 2})});
  CHECK(m.circuits() == std::vector<Subset>{S({2})});
  CHECK(m.automorphisms().size() == 1);
}

TEST_CASE("M(K4) from its non-bases and from the graph agree") {
  const std::set<Subset> non_bases{S({1, 2, 5}), S({1, 4, 6}), S({2, 3, 6}), S({3, 4, 5})};
  std::vector<Subset> bases;
  for (Subset s = 0; s < 64; ++s)
    if (cardinality(s) == 3 && !non_bases.count(s)) bases.push_back(s);
  const auto from_bases = Matroid::from_bases(6, bases);
  const auto k4 = builtin("mk4");
  CHECK(from_bases == k4);

  std::vector<Subset> three_circuits;
  for (Subset c : k4.circuits())
    if (cardinality(c) == 3) three_circuits.push_back(c);
  CHECK(std::set<Subset>(three_circuits.begin(), three_circuits.end()) == non_bases);

  const auto by_rank = k4.flats_by_rank();
  CHECK(by_rank.at(2).size() == 7);
  CHECK(sorted(k4.flats()) == brute_force_flats(k4));
}

TEST_CASE("graphic matroids") {
  // A triangle with each edge doubled: parallel pairs are the only 2-element circuits.
  const std::vector<std::pair<int, int>> edges{{1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 1}, {3, 1}};
  const auto m = Matroid::graphic(3, edges);
  CHECK(m.rank() == 2);
  CHECK(m == builtin("m3"));

  const std::vector<std::pair<int, int>> with_loop{{1, 2}, {2, 2}};
  const auto l = Matroid::graphic(2, with_loop);
  CHECK(l.rank(S({2})) == 0);
  CHECK(l.loops() == S({2}));

  const std::vector<std::pair<int, int>> bad{{1, 5}};
  CHECK_THROWS_AS(Matroid::graphic(2, bad), Error);
}

TEST_CASE("direct sums") {
  const auto m = Matroid::direct_sum(Matroid::uniform(1, 1), Matroid::uniform(0, 1));
  CHECK(m.rank(S({1})) == 1);
  CHECK(m.rank(S({2})) == 0);
  CHECK(m.rank(S({1, 2})) == 1);
  CHECK(m.is_free_plus_loops());
  const auto big = Matroid::direct_sum(Matroid::uniform(2, 3), Matroid::uniform(2, 3));
  CHECK(big.size() == 6);
  CHECK(big.rank() == 4);
  CHECK_FALSE(Matroid::uniform(2, 3).is_free_plus_loops());
}

TEST_CASE("rank tables that violate the axioms are rejected") {
  // rank({1}) = 1, rank({2}) = 1, rank({1,2}) = 0 is not monotone.
  CHECK_THROWS_AS(Matroid::from_rank_table(2, {0, 1, 1, 0}, "bad"), Error);
  // Jump by two.
  CHECK_THROWS_AS(Matroid::from_rank_table(2, {0, 0, 0, 2}, "bad"), Error);
  CHECK_NOTHROW(Matroid::from_rank_table(2, {0, 1, 1, 1}, "u12"));
}

TEST_CASE("ground-set cap") {
  const int saved = max_ground_set();
  set_max_ground_set(4);
  CHECK_THROWS_AS(Matroid::uniform(2, 5), Error);
  set_max_ground_set(saved);
  CHECK_NOTHROW(Matroid::uniform(2, 5));
}

TEST_CASE("Higgs lift of M(K4)") {
  const auto k4 = builtin("mk4");
  for (Subset s = 0; s < 64; ++s) {
    CHECK(k4.higgs_rank(0, s) == 0);
    CHECK(k4.higgs_rank(1, s) == std::min(1, k4.rank(s)));
    CHECK(k4.higgs_rank(4, s) == std::min(cardinality(s), k4.rank(s) + 1));
    CHECK(k4.higgs_rank(3, s) == k4.rank(s));
    CHECK(k4.higgs_rank(6, s) == cardinality(s));
  }
  // S_1 = {S : rank_2(S) - rank_1(S) = 1} = {rank(S) >= 2}; S_4 = {nullity(S) >= 2}.
  for (Subset s = 0; s < 64; ++s) {
    CHECK((k4.higgs_rank(2, s) - k4.higgs_rank(1, s) == 1) == (k4.rank(s) >= 2));
    CHECK((k4.higgs_rank(5, s) - k4.higgs_rank(4, s) == 1) == (k4.nullity(s) >= 2));
  }
}

TEST_CASE("Higgs lifts are matroids and split every subset into rank and nullity steps") {
  for (const auto& m : corpus()) {
    const int n = m.size(), r = m.rank();
    for (int i = 0; i <= n; ++i)
      CHECK(satisfies_rank_axioms(n, [&](Subset s) { return m.higgs_rank(i, s); }));
    for (Subset s = 0; s <= m.ground(); ++s) {
      int below = 0, above = 0;
      for (int i = 0; i < n; ++i) {
        const int d = m.higgs_rank(i + 1, s) - m.higgs_rank(i, s);
        REQUIRE((d == 0 || d == 1));
        (i < r ? below : above) += d;
      }
      CHECK(below == m.rank(s));
      CHECK(above == m.nullity(s));
    }
  }
}

TEST_CASE("automorphisms") {
  CHECK(Matroid::uniform(2, 4).automorphisms().size() == 24);
  CHECK(Matroid::uniform(0, 3).automorphisms().size() == 6);

  const auto k4 = builtin("mk4");
  const auto aut = k4.automorphisms();
  CHECK(aut.size() == 24);
  // A few entries of the explicit list, e.g. (1 6)(3 5), (1 2 3 4)(5 6), (1 5 3 6)(2 4).
  const std::vector<Permutation> listed{{5, 1, 4, 3, 2, 0}, {1, 2, 3, 0, 5, 4}, {4, 3, 5, 1, 2, 0}};
  for (const auto& p : listed) CHECK(std::find(aut.begin(), aut.end(), p) != aut.end());
  CHECK(std::find(aut.begin(), aut.end(), Permutation{1, 0, 2, 3, 4, 5}) == aut.end());

  for (const auto& m : corpus()) {
    const auto flats = m.flats();
    const auto circuits = m.circuits();
    const std::set<Subset> flat_set(flats.begin(), flats.end()), circuit_set(circuits.begin(), circuits.end());
    for (const auto& sigma : m.automorphisms()) {
      for (Subset f : flats) CHECK(flat_set.count(permute(sigma, f)));
      for (Subset c : circuits) CHECK(circuit_set.count(permute(sigma, c)));
    }
  }
}

TEST_CASE("flats match brute force across the corpus") {
  for (const auto& m : corpus()) CHECK(sorted(m.flats()) == brute_force_flats(m));
}

TEST_CASE("subset helpers") {
  const std::vector<int> e{1, 3, 5};
  CHECK(subset_from_elements(e, 5) == S({1, 3, 5}));
  CHECK(elements_of(S({2, 4})) == std::vector<int>{2, 4});
  CHECK(format_subset(S({1, 2, 5})) == "{1,2,5}");
  const std::vector<int> out_of_range{6};
  CHECK_THROWS_AS(subset_from_elements(out_of_range, 5), Error);
}
