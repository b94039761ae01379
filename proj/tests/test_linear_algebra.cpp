#include <doctest.h>

#include <random>

#include "chowrn/linear_algebra.hpp"

using namespace chowrn;

namespace {

IntegerRow row(std::initializer_list<long> v) {
  IntegerRow r;
  for (long x : v) r.push_back(x);
  return r;
}

// Rank over Q via exact rational Gaussian elimination, independent of both routines under test.
std::size_t rational_rank(const std::vector<IntegerRow>& rows) {
  using boost::multiprecision::cpp_rational;
  if (rows.empty()) return 0;
  std::vector<std::vector<cpp_rational>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const cpp_rational f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) {
        const cpp_rational t = f * a[rank][k];
        a[i][k] -= t;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("bareiss rank on small matrices") {
  CHECK(bareiss_rank({}) == 0);
  CHECK(bareiss_rank({row({0, 0, 0})}) == 0);
  CHECK(bareiss_rank({row({1, 2}), row({2, 4})}) == 1);
  CHECK(bareiss_rank({row({1, 2, 3}), row({4, 5, 6}), row({7, 8, 9})}) == 2);
  CHECK(bareiss_rank({row({0, 1}), row({1, 0})}) == 2);
}

TEST_CASE("make_primitive divides out the content and fixes the sign") {
  IntegerRow r = row({0, -4, 6, 10});
  CHECK(make_primitive(r) == -2);  // original = divisor * result
  CHECK(r == row({0, 2, -3, -5}));
  IntegerRow z = row({0, 0});
  make_primitive(z);
  CHECK(z == row({0, 0}));
}

TEST_CASE("echelon keeps the first independent vectors") {
  IntegerEchelon e(3);
  CHECK(e.insert(row({1, 1, 0})));
  CHECK(e.insert(row({0, 2, 2})));
  CHECK_FALSE(e.insert(row({3, 5, 2})));
  CHECK(e.contains(row({1, -1, -2})));
  CHECK_FALSE(e.contains(row({0, 0, 1})));
  CHECK(e.insert(row({0, 0, 1})));
  CHECK(e.rank() == 3);
  CHECK_FALSE(e.insert(row({7, 0, 0})));
}

TEST_CASE("echelon, Bareiss and rational elimination agree on random integer matrices") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = size(rng), cols = size(rng);
    std::vector<IntegerRow> m(rows, IntegerRow(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng) * (rng() % 3 == 0 ? 0 : 1);
    // Add dependent combinations so low-rank cases show up.
    if (rows > 2 && trial % 2 == 0)
      for (int k = 0; k < cols; ++k) m[rows - 1][k] = 2 * m[0][k] - 3 * m[1][k];

    IntegerEchelon e(cols);
    for (const auto& r : m) e.insert(r);
    const std::size_t expected = rational_rank(m);
    CHECK(bareiss_rank(m) == expected);
    CHECK(e.rank() == expected);
    for (const auto& r : m) CHECK(e.contains(r));
  }
}
