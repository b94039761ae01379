#include <doctest.h>

#include <random>
#include <set>

#include "chowrn/error.hpp"
#include "chowrn/rank_nullity.hpp"
#include "chowrn/uniform.hpp"

using namespace chowrn;

namespace {

Subset S(std::initializer_list<int> e) {
  Subset s = 0;
  for (int x : e) s |= Subset{1} << (x - 1);
  return s;
}

ZExponents exps(int n, std::initializer_list<std::pair<int, int>> factors) {
  ZExponents e(n, 0);
  for (auto [i, p] : factors) e[i - 1] += p;
  return e;
}

ZPolynomial Z(int n, int i) { return ZPolynomial::variable(n, i); }

// All exponent vectors of total degree d in n variables.
std::vector<ZExponents> all_monomials(int n, int d) {
  std::vector<ZExponents> out;
  ZExponents e(n, 0);
  auto step = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      e[i] = p;
      self(self, i + 1, left - p);
    }
  };
  if (n > 0) step(step, 0, d);
  return out;
}

ZPolynomial random_polynomial(int n, int d, std::mt19937& rng) {
  const auto monos = all_monomials(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  ZPolynomial p(n);
  for (int t = 0; t < 4; ++t) p.add_term(monos[pick(rng)], coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("z generators") {
  const auto ring = ChowRing::permutahedral(4);
  ChowElement expected(ring);
  for (int i = 1; i <= 4; ++i) expected += ChowElement::generator(ring, Subset{1} << (i - 1));
  CHECK(z_generator(4, 1) == expected);

  // z_l = y_{l,0} for l <= r and y_{r,l-r} beyond.
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& g : rn_generators(Matroid::uniform(r, n))) {
        const int l = g.rank < r ? g.rank : r + g.nullity;
        CHECK(g.element == z_generator(n, l));
      }

  for (int n = 1; n <= 6; ++n) {
    ChowElement rel(ChowRing::permutahedral(n));
    for (int l = 1; l <= n; ++l) rel += z_generator(n, l) * Integer(l);
    CHECK(normal_form(rel).is_zero());
  }
}

TEST_CASE("Z polynomial arithmetic and order") {
  const int n = 3;
  const auto p = Z(n, 1) + Z(n, 2) * Integer(2);
  auto q = p;
  q *= Integer(3);
  CHECK(q.to_string() == "3*Z1 + 6*Z2");
  CHECK((Z(n, 1) - Z(n, 1)).is_zero());
  CHECK(Z(n, 0) == ZPolynomial::monomial(n, ZExponents(n, 0)));
  CHECK(power(Z(n, 1) + Z(n, 2), 2).to_string() == "Z1^2 + 2*Z1*Z2 + Z2^2");
  CHECK((Z(n, 3) * Z(n, 3) - Z(n, 1) * Integer(5)).to_string() == "Z3^2 - 5*Z1");

  const ZOrder less;
  CHECK(less(exps(n, {{3, 1}}), exps(n, {{1, 1}})));           // Z1 > Z3
  CHECK(less(exps(n, {{1, 1}}), exps(n, {{3, 2}})));           // degree first
  CHECK(less(exps(n, {{2, 2}}), exps(n, {{1, 1}, {3, 1}})));   // Z1 Z3 > Z2^2
  CHECK((Z(n, 2) + Z(n, 1) * Z(n, 3)).leading_monomial() == exps(n, {{1, 1}, {3, 1}}));
  CHECK((Z(n, 2) * Integer(6) + Z(n, 3) * Integer(4)).content() == 2);
  CHECK_THROWS_AS(Z(3, 1) + Z(4, 1), Error);
  CHECK(format_z_monomial(exps(5, {{2, 1}, {5, 2}})) == "z2*z5^2");
  CHECK(format_z_monomial(ZExponents(5, 0)) == "1");
}

TEST_CASE("standard monomial basis B_5") {
  const auto b = standard_basis(5);
  std::vector<std::string> listed;
  for (const auto& level : b.by_degree)
    for (const auto& e : level) listed.push_back(format_z_monomial(e));
  CHECK(listed == std::vector<std::string>{"1", "z2", "z3", "z4", "z5", "z2*z4", "z2*z5", "z3^2", "z3*z5", "z4^2",
                                           "z5^2", "z2*z5^2", "z3^2*z5", "z4^3", "z5^3", "z5^4"});
  CHECK(b.size() == 16);
  CHECK(standard_basis(1).size() == 1);
  CHECK(is_standard(exps(5, {{3, 2}})));
  CHECK_FALSE(is_standard(exps(5, {{3, 3}})));
  CHECK_FALSE(is_standard(exps(5, {{1, 1}})));
  CHECK_FALSE(is_standard(exps(5, {{2, 1}, {3, 1}})));
}

TEST_CASE("standard basis counts are binomial") {
  for (int n = 1; n <= 12; ++n) {
    const auto b = standard_basis(n);
    const auto hf = uniform_hilbert(n);
    REQUIRE(b.by_degree.size() == static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      CHECK(Integer(b.by_degree[d].size()) == binomial(n - 1, d));
      CHECK(hf[d] == binomial(n - 1, d));
      for (const auto& e : b.by_degree[d]) CHECK(is_standard(e));
    }
  }
  CHECK_THROWS_AS(standard_basis(kMaxStandardBasis + 1), Error);
  CHECK_THROWS_AS(standard_basis(0), Error);
}

TEST_CASE("subset bijection") {
  CHECK(subset_bijection(5, S({1, 2})) == exps(5, {{3, 2}}));
  CHECK(subset_bijection(5, S({1, 3, 4})) == exps(5, {{2, 1}, {5, 2}}));
  CHECK(subset_bijection(5, 0) == ZExponents(5, 0));
  for (int n = 1; n <= 10; ++n) {
    const auto b = standard_basis(n);
    std::set<ZExponents> basis;
    for (const auto& level : b.by_degree) basis.insert(level.begin(), level.end());
    std::set<ZExponents> image;
    for (Subset s = 0; s < (Subset{1} << (n - 1)); ++s) {
      const auto e = subset_bijection(n, s);
      CHECK(z_degree(e) == cardinality(s));
      CHECK(subset_bijection_inverse(e) == s);
      image.insert(e);
    }
    CHECK(image == basis);
    for (const auto& e : basis) CHECK(subset_bijection(n, subset_bijection_inverse(e)) == e);
  }
}

TEST_CASE("Groebner generators") {
  for (int n = 1; n <= 6; ++n) {
    ZPolynomial expected(n);
    for (int i = 1; i <= n; ++i) expected += Z(n, i) * Integer(i);
    CHECK(groebner_generator(n, 0, 1) == expected);
  }
  for (int n = 2; n <= 7; ++n)
    for (int b = 1; b <= n; ++b)
      for (int a = 0; a < b; ++a) {
        const auto g = groebner_generator(n, a, b);
        const auto lt = groebner_leading_term(n, a, b);
        ZExponents expected(n, 0);
        if (a > 0) expected[a - 1] += 1;
        expected[b - 1] += b - a;
        CHECK(lt == expected);
        CHECK(g.leading_monomial() == expected);
        CHECK(g.leading_coefficient() == 1);
      }
  for (int n = 1; n <= 5; ++n)
    for (int b = 1; b <= n; ++b)
      for (int a = 0; a < b; ++a) CHECK(normal_form(substitute_z(groebner_generator(n, a, b))).is_zero());
}

TEST_CASE("Groebner reduction") {
  const int n = 5;
  for (const auto& level : standard_basis(n).by_degree)
    for (const auto& e : level) {
      const auto p = ZPolynomial::monomial(n, e, 3);
      const auto r = gb_reduce(p);
      CHECK(r.remainder == p);
      CHECK(r.multiplier == 1);
    }

  const auto z1z2 = Z(n, 1) * Z(n, 2);
  const auto r = gb_reduce(z1z2);
  for (const auto& [e, c] : r.remainder.terms()) CHECK(is_standard(e));
  CHECK(normal_form(substitute_z(r.remainder)) == normal_form(multiply(z_generator(n, 1), z_generator(n, 2))) *
                                                     r.multiplier);

  std::mt19937 rng(5);
  for (int m = 2; m <= 5; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      const int d = std::uniform_int_distribution<int>(1, m - 1)(rng);
      const auto p = random_polynomial(m, d, rng);
      const auto red = gb_reduce(p);
      for (const auto& [e, c] : red.remainder.terms()) CHECK(is_standard(e));
      CHECK(normal_form(substitute_z(red.remainder)) == normal_form(substitute_z(p)) * red.multiplier);
      const auto nf = gb_normal_form(p);
      CHECK(gb_normal_form(nf) == nf);
    }
}

TEST_CASE("every standard monomial is reached as a normal form") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 0; d < n; ++d) {
      std::set<ZExponents> support;
      for (const auto& e : all_monomials(n, d)) {
        const auto nf = gb_normal_form(ZPolynomial::monomial(n, e));
        for (const auto& [f, c] : nf.terms()) support.insert(f);
      }
      CHECK(Integer(support.size()) == binomial(n - 1, d));
    }
}

TEST_CASE("gb_check") {
  for (int n = 1; n <= 5; ++n) {
    const auto report = gb_check(n);
    CHECK(report.ok());
    CHECK(report.standard_matches_complement);
    CHECK(report.independent);
    CHECK(report.generators.size() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
  CHECK_THROWS_AS(gb_check(kMaxGBCheck + 1), Error);
}

TEST_CASE("invariant subspace ranks") {
  for (int d = 0; d < 5; ++d) CHECK(Integer(invariant_subspace_rank(5, d)) == binomial(4, d));
  CHECK(invariant_subspace_rank(6, 2) == 10);
  for (int n = 1; n <= 5; ++n) CHECK(invariant_subspace_rank(n, 0) == 1);
  CHECK_THROWS_AS(invariant_subspace_rank(kMaxInvariantRank + 1, 1), Error);
}
