#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chowrn/chow_ring.hpp"
#include "chowrn/integer.hpp"
#include "chowrn/matroid.hpp"

namespace chowrn {

// z_l = sum of x_S over all l-subsets of [n], in A^1(U_{n,n}).
ChowElement z_generator(int n, int l);

// Exponent vector (e_1, ..., e_n) of a monomial in Z_1, ..., Z_n; index 0 holds e_1.
using ZExponents = std::vector<int>;

int z_degree(const ZExponents& e);

// Graded order, ties broken lexicographically with Z_1 > Z_2 > ... > Z_n.
// Returns true when a precedes b, i.e. a is the smaller monomial.
struct ZOrder {
  bool operator()(const ZExponents& a, const ZExponents& b) const;
};

// Polynomial in Z_1..Z_n with integer coefficients; zero coefficients are never stored.
class ZPolynomial {
 public:
  explicit ZPolynomial(int n = 0) : n_(n) {}
  static ZPolynomial monomial(int n, const ZExponents& e, const Integer& c = 1);
  static ZPolynomial variable(int n, int i);  // Z_i, with Z_0 = 1

  int variables() const { return n_; }
  const std::map<ZExponents, Integer, ZOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ZExponents& e, const Integer& c);

  ZPolynomial& operator+=(const ZPolynomial& other);
  ZPolynomial& operator-=(const ZPolynomial& other);
  ZPolynomial& operator*=(const Integer& c);
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(ZPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  // Greatest monomial under ZOrder; requires a nonzero polynomial.
  const ZExponents& leading_monomial() const;
  const Integer& leading_coefficient() const;
  Integer content() const;
  std::string to_string() const;  // "3*Z1*Z2^2 - Z3"

 private:
  int n_;
  std::map<ZExponents, Integer, ZOrder> terms_;
};

ZPolynomial power(const ZPolynomial& p, int exponent);
std::string format_z_monomial(const ZExponents& e);  // "z2*z5^2", "1" for the unit

struct StandardMonomialBasis {
  int n = 0;
  // by_degree[d] lists the degree-d monomials, largest first.
  std::vector<std::vector<ZExponents>> by_degree;

  std::size_t size() const;
};

inline constexpr int kMaxStandardBasis = 16;

// z_{s_1}^{p_1} ... z_{s_l}^{p_l} with 1 <= p_i < s_i - s_{i-1}, s_0 = 0.
StandardMonomialBasis standard_basis(int n);
bool is_standard(const ZExponents& e);

// binom(n-1, d) for d = 0..n-1.
std::vector<Integer> uniform_hilbert(int n);

// Each maximal interval {a..b} of s (a subset of [n-1]) becomes the factor z_{b+1}^{b-a+1}.
ZExponents subset_bijection(int n, Subset s);
Subset subset_bijection_inverse(const ZExponents& e);

// Z_a * sum_{i=b}^{n} binom(i-a-1, b-a-1) (Z_i + ... + Z_n)^{b-a}, with Z_0 = 1.
ZPolynomial groebner_generator(int n, int a, int b);
// Z_a Z_b^{b-a} (Z_0 = 1).
ZExponents groebner_leading_term(int n, int a, int b);

struct GBReduction {
  ZPolynomial remainder;
  // multiplier * p == remainder modulo the ideal; it stays 1 when every leading coefficient is 1.
  Integer multiplier = 1;
};

GBReduction gb_reduce(const ZPolynomial& p);
// Remainder divided by its content (sign fixed by the leading coefficient); canonical up to scaling.
ZPolynomial gb_normal_form(const ZPolynomial& p);

// Z_i -> z_i, multiplied out in A*(U_{n,n}) (raw, not normal-formed).
ChowElement substitute_z(const ZPolynomial& p);

struct GBGeneratorCheck {
  int a = 0;
  int b = 0;
  bool leading_term_ok = false;  // leading monomial Z_a Z_b^{b-a} with coefficient 1
  bool vanishes = false;         // image under Z_i -> z_i normal-forms to 0
};

struct GBCheckReport {
  int n = 0;
  std::vector<GBGeneratorCheck> generators;
  std::vector<std::size_t> standard_counts;  // per degree
  bool standard_matches_complement = false;  // B_n is exactly the set of monomials avoiding every leading term
  bool independent = false;                  // substituted B_n is linearly independent in A*(U_{n,n})

  bool ok() const;
};

inline constexpr int kMaxGBCheck = 7;

GBCheckReport gb_check(int n);

inline constexpr int kMaxInvariantRank = 6;

// Dimension of the S_n-fixed part of A^d(U_{n,n}), from the transposition (1 2) and the n-cycle.
std::size_t invariant_subspace_rank(int n, int d);

}  // namespace chowrn
