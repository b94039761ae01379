#include <doctest.h>

#include <algorithm>
#include <set>

#include "chowrn/corpus.hpp"
#include "chowrn/error.hpp"

using namespace chowrn;

namespace {

Subset S(std::initializer_list<int> e) {
  Subset s = 0;
  for (int x : e) s |= Subset{1} << (x - 1);
  return s;
}

// Isomorphism invariant used to spot duplicates: sorted multiset of (|S|, rank S) over all subsets.
std::vector<std::pair<int, int>> profile(const Matroid& m) {
  std::vector<std::pair<int, int>> out;
  for (Subset s = 0; s <= m.ground(); ++s) out.emplace_back(cardinality(s), m.rank(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || profile(a) != profile(b)) return false;
  Permutation p(a.size());
  for (int i = 0; i < a.size(); ++i) p[i] = i;
  do {
    bool same = true;
    for (Subset s = 0; s <= a.ground() && same; ++s) same = a.rank(s) == b.rank(permute(p, s));
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("numbers of matroids up to isomorphism") {
  const std::vector<std::size_t> expected{2, 4, 8, 17, 38};
  for (int n = 1; n <= 5; ++n) CHECK(all_matroids(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(all_matroids(7), Error);
}

TEST_CASE("the enumeration has no isomorphic duplicates") {
  for (int n = 1; n <= 4; ++n) {
    const auto ms = all_matroids(n);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(isomorphic(ms[i], ms[j]));
  }
}

TEST_CASE("corpus") {
  const auto c = corpus();
  CHECK(c.size() == 2 + 4 + 8 + 17 + 38 + 1);
  CHECK(c.back() == builtin("mk4"));
  std::set<std::string> labels;
  for (const auto& m : c) labels.insert(m.label());
  CHECK(labels.size() == c.size());
}

TEST_CASE("builtins") {
  for (const auto& name : builtin_names())
    if (name != "uniform:R:N") CHECK_NOTHROW(builtin(name));
  CHECK(builtin("uniform:2:4") == Matroid::uniform(2, 4));
  CHECK(builtin("uniform:2:4").label() == "U24");
  CHECK_THROWS_AS(builtin("uniform:5:3"), Error);
  CHECK_THROWS_AS(builtin("uniform:2"), Error);
  CHECK_THROWS_AS(builtin("uniform:a:b"), Error);
  CHECK_THROWS_AS(builtin("k5"), Error);

  const auto m1 = builtin("m1");
  CHECK(m1.size() == 4);
  CHECK(m1.rank() == 2);
  CHECK(m1.rank(S({1, 2})) == 1);
  const auto m2 = builtin("m2");
  CHECK(m2.rank(S({1, 2, 3})) == 2);
  CHECK(m2.rank(S({3, 4, 5})) == 2);
  CHECK(m2.bases().size() == 8);
  const auto m4 = builtin("m4");
  CHECK(m4.rank() == 4);
  CHECK(m4.rank(S({5, 6})) == 1);
}

TEST_CASE("the non-Fano matroid") {
  const auto f = fano_minus();
  CHECK(f.size() == 7);
  CHECK(f.rank() == 3);
  std::set<Subset> dependent;
  for (Subset s = 0; s <= f.ground(); ++s)
    if (cardinality(s) == 3 && f.rank(s) < 3) dependent.insert(s);
  CHECK(dependent == std::set<Subset>{S({1, 2, 3}), S({1, 4, 5}), S({1, 6, 7}), S({2, 4, 6}), S({2, 5, 7}),
                                      S({3, 4, 7})});
  CHECK(f.rank(S({3, 5, 6})) == 3);
  CHECK(f.loopless());
}

TEST_CASE("reference table") {
  const auto& rows = table1();
  CHECK(rows.size() == 59);
  std::set<std::string> labels;
  for (const auto& row : rows) {
    CHECK(row.hilbert.size() == static_cast<std::size_t>(row.matroid.size()));
    CHECK(row.hilbert.front() == 1);
    CHECK(row.hilbert.back() == 1);
    CHECK(row.label.find(',') == std::string::npos);
    CHECK(row.matroid.label() == row.label);
    labels.insert(row.label);
  }
  CHECK(labels.size() == rows.size());
  auto find = [&](const std::string& label) {
    return std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.label == label; });
  };
  REQUIRE(find("MK4") != rows.end());
  CHECK(find("MK4")->hilbert == std::vector<std::size_t>{1, 6, 14, 16, 8, 1});
  REQUIRE(find("F7-") != rows.end());
  CHECK(find("F7-")->hilbert == std::vector<std::size_t>{1, 7, 20, 30, 25, 11, 1});
  REQUIRE(find("U01+U13") != rows.end());
  CHECK(find("U01+U13")->hilbert == std::vector<std::size_t>{1, 4, 5, 1});
  REQUIRE(find("U35") != rows.end());
  CHECK(find("U35")->hilbert == std::vector<std::size_t>{1, 4, 6, 4, 1});
}
