#include "chowrn/uniform.hpp"

#include <algorithm>
#include <numeric>

#include "chowrn/error.hpp"
#include "chowrn/linear_algebra.hpp"

namespace chowrn {

ChowElement z_generator(int n, int l) {
  if (l < 1 || l > n) fail(ErrorKind::kOutOfRange, "z_l needs 1 <= l <= n");
  const auto ring = ChowRing::permutahedral(n);
  ChowElement z(ring);
  for (Subset s = 1; s <= full_set(n); ++s)
    if (cardinality(s) == l) z.add_term(ChainMonomial::single(s), 1);
  return z;
}

int z_degree(const ZExponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool ZOrder::operator()(const ZExponents& a, const ZExponents& b) const {
  const int da = z_degree(a), db = z_degree(b);
  if (da != db) return da < db;
  // Z_1 is the heaviest variable, so more Z_1 means larger.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ZPolynomial ZPolynomial::monomial(int n, const ZExponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n) fail(ErrorKind::kInvalidInput, "exponent vector has the wrong length");
  ZPolynomial p(n);
  p.add_term(e, c);
  return p;
}

ZPolynomial ZPolynomial::variable(int n, int i) {
  if (i < 0 || i > n) fail(ErrorKind::kOutOfRange, "Z_i needs 0 <= i <= n");
  ZExponents e(n, 0);
  if (i > 0) e[i - 1] = 1;
  return monomial(n, e);
}

void ZPolynomial::add_term(const ZExponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_) fail(ErrorKind::kInvalidInput, "exponent vector has the wrong length");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    fail(ErrorKind::kInvalidInput, "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
  if (other.n_ != n_) fail(ErrorKind::kContextMismatch, "polynomials in different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& other) {
  if (other.n_ != n_) fail(ErrorKind::kContextMismatch, "polynomials in different variable sets");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const Integer& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  if (a.n_ != b.n_) fail(ErrorKind::kContextMismatch, "polynomials in different variable sets");
  ZPolynomial out(a.n_);
  ZExponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

const ZExponents& ZPolynomial::leading_monomial() const {
  if (terms_.empty()) fail(ErrorKind::kInvalidInput, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Integer& ZPolynomial::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorKind::kInvalidInput, "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Integer ZPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return abs(g);
}

std::string format_z_monomial(const ZExponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "z" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ZPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = format_z_monomial(e);
    for (auto& ch : mono)
      if (ch == 'z') ch = 'Z';
    if (mono == "1") {
      out += chowrn::to_string(magnitude);
    } else {
      if (magnitude != 1) out += chowrn::to_string(magnitude) + "*";
      out += mono;
    }
  }
  return out;
}

ZPolynomial power(const ZPolynomial& p, int exponent) {
  if (exponent < 0) fail(ErrorKind::kOutOfRange, "negative power");
  ZPolynomial out = ZPolynomial::monomial(p.variables(), ZExponents(p.variables(), 0));
  for (int i = 0; i < exponent; ++i) out = out * p;
  return out;
}

std::size_t StandardMonomialBasis::size() const {
  std::size_t total = 0;
  for (const auto& level : by_degree) total += level.size();
  return total;
}

bool is_standard(const ZExponents& e) {
  int previous = 0;
  for (int s = 1; s <= static_cast<int>(e.size()); ++s) {
    if (e[s - 1] == 0) continue;
    if (e[s - 1] >= s - previous) return false;
    previous = s;
  }
  return true;
}

StandardMonomialBasis standard_basis(int n) {
  if (n < 1 || n > kMaxStandardBasis)
    fail(ErrorKind::kSizeCap, "standard basis needs 1 <= n <= " + std::to_string(kMaxStandardBasis));
  StandardMonomialBasis basis{n, std::vector<std::vector<ZExponents>>(n)};
  ZExponents e(n, 0);
  auto walk = [&](auto&& self, int previous, int degree) -> void {
    basis.by_degree[degree].push_back(e);
    for (int s = previous + 1; s <= n; ++s) {
      for (int p = 1; p < s - previous; ++p) {
        e[s - 1] = p;
        self(self, s, degree + p);
      }
      e[s - 1] = 0;
    }
  };
  walk(walk, 0, 0);
  for (auto& level : basis.by_degree) std::sort(level.begin(), level.end(), [](auto& a, auto& b) { return ZOrder{}(b, a); });
  return basis;
}

std::vector<Integer> uniform_hilbert(int n) {
  if (n < 1) fail(ErrorKind::kOutOfRange, "n must be positive");
  std::vector<Integer> out;
  for (int d = 0; d <= n - 1; ++d) out.push_back(binomial(n - 1, d));
  return out;
}

ZExponents subset_bijection(int n, Subset s) {
  if (n < 1 || n > 31) fail(ErrorKind::kOutOfRange, "n out of range");
  if (s & ~full_set(n - 1)) fail(ErrorKind::kInvalidInput, "subset must lie in [n-1]");
  ZExponents e(n, 0);
  int run = 0;
  for (int k = 1; k <= n; ++k) {
    if (k <= n - 1 && ((s >> (k - 1)) & 1)) {
      ++run;
    } else if (run > 0) {
      e[k - 1] = run;  // interval ends at k-1, factor z_k^run
      run = 0;
    }
  }
  return e;
}

Subset subset_bijection_inverse(const ZExponents& e) {
  if (!is_standard(e)) fail(ErrorKind::kInvalidInput, "monomial " + format_z_monomial(e) + " is not standard");
  Subset s = 0;
  for (int k = 1; k <= static_cast<int>(e.size()); ++k)
    for (int j = k - e[k - 1]; j <= k - 1; ++j) s |= Subset{1} << (j - 1);
  return s;
}

namespace {

void check_pair(int n, int a, int b) {
  if (!(0 <= a && a < b && b <= n)) fail(ErrorKind::kOutOfRange, "Groebner generator needs 0 <= a < b <= n");
}

}  // namespace

ZPolynomial groebner_generator(int n, int a, int b) {
  check_pair(n, a, b);
  ZPolynomial sum(n);
  ZPolynomial tail(n);  // Z_i + ... + Z_n, built from the top down
  std::vector<ZPolynomial> tails(n + 2, ZPolynomial(n));
  for (int i = n; i >= 1; --i) {
    tail += ZPolynomial::variable(n, i);
    tails[i] = tail;
  }
  for (int i = b; i <= n; ++i) {
    ZPolynomial term = power(tails[i], b - a);
    term *= binomial(i - a - 1, b - a - 1);
    sum += term;
  }
  return ZPolynomial::variable(n, a) * sum;
}

ZExponents groebner_leading_term(int n, int a, int b) {
  check_pair(n, a, b);
  ZExponents e(n, 0);
  if (a > 0) e[a - 1] = 1;
  e[b - 1] += b - a;
  return e;
}

namespace {

// First (a, b) whose leading term divides e, scanning a then b.
bool find_divisor(const ZExponents& e, int& a_out, int& b_out) {
  const int n = static_cast<int>(e.size());
  for (int a = 0; a < n; ++a) {
    if (a > 0 && e[a - 1] == 0) continue;
    for (int b = a + 1; b <= n; ++b) {
      if (e[b - 1] >= b - a) {
        a_out = a;
        b_out = b;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

GBReduction gb_reduce(const ZPolynomial& p) {
  const int n = p.variables();
  std::map<std::pair<int, int>, ZPolynomial> generators;
  GBReduction out{ZPolynomial(n), 1};
  ZPolynomial work = p;
  while (!work.is_zero()) {
    // Largest term first; reducing it only introduces smaller terms.
    const ZExponents lead = work.leading_monomial();
    const Integer c = work.leading_coefficient();
    int a = 0, b = 0;
    if (!find_divisor(lead, a, b)) {
      out.remainder.add_term(lead, c);
      work.add_term(lead, -c);
      continue;
    }
    auto it = generators.find({a, b});
    if (it == generators.end()) it = generators.emplace(std::pair{a, b}, groebner_generator(n, a, b)).first;
    const ZPolynomial& g = it->second;
    const ZExponents lt = groebner_leading_term(n, a, b);
    ZExponents quotient(n);
    for (int i = 0; i < n; ++i) quotient[i] = lead[i] - lt[i];
    const Integer lc = g.leading_coefficient();
    const Integer common = gcd(lc, c);
    const Integer scale = lc / common;  // multiply work and remainder through to stay integral
    if (scale != 1) {
      work *= scale;
      out.remainder *= scale;
      out.multiplier *= scale;
    }
    ZPolynomial shift = ZPolynomial::monomial(n, quotient, c * scale / lc) * g;
    work -= shift;
  }
  return out;
}

ZPolynomial gb_normal_form(const ZPolynomial& p) {
  ZPolynomial r = gb_reduce(p).remainder;
  if (r.is_zero()) return r;
  Integer g = r.content();
  if (r.leading_coefficient() < 0) g = -g;
  if (g != 1) {
    ZPolynomial scaled(r.variables());
    for (const auto& [e, c] : r.terms()) scaled.add_term(e, c / g);
    r = scaled;
  }
  return r;
}

ChowElement substitute_z(const ZPolynomial& p) {
  const int n = p.variables();
  const auto ring = ChowRing::permutahedral(n);
  std::vector<ChowElement> z;
  for (int l = 1; l <= n; ++l) z.push_back(z_generator(n, l));
  ChowElement out(ring);
  for (const auto& [e, c] : p.terms()) {
    if (z_degree(e) > ring->top_degree()) continue;
    ChowElement term = ChowElement::unit(ring);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) term = multiply(term, power(z[i], e[i]));
    out += term * c;
  }
  return out;
}

bool GBCheckReport::ok() const {
  if (!standard_matches_complement || !independent) return false;
  for (const auto& g : generators)
    if (!g.leading_term_ok || !g.vanishes) return false;
  for (std::size_t d = 0; d < standard_counts.size(); ++d)
    if (standard_counts[d] != binomial(n - 1, static_cast<long>(d))) return false;
  return true;
}

GBCheckReport gb_check(int n) {
  if (n < 1 || n > kMaxGBCheck) fail(ErrorKind::kSizeCap, "gb-check needs 1 <= n <= " + std::to_string(kMaxGBCheck));
  GBCheckReport report;
  report.n = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const ZPolynomial g = groebner_generator(n, a, b);
      GBGeneratorCheck check{a, b};
      check.leading_term_ok = g.leading_monomial() == groebner_leading_term(n, a, b) && g.leading_coefficient() == 1;
      check.vanishes = normal_form(substitute_z(g)).is_zero();
      report.generators.push_back(check);
    }
  }

  const auto basis = standard_basis(n);
  for (const auto& level : basis.by_degree) report.standard_counts.push_back(level.size());

  // Every monomial of degree <= n-1 is standard exactly when no leading term divides it.
  report.standard_matches_complement = true;
  ZExponents e(n, 0);
  std::size_t standard_seen = 0;
  auto walk = [&](auto&& self, int index, int remaining) -> void {
    if (index == n) {
      int a = 0, b = 0;
      const bool divisible = find_divisor(e, a, b);
      if (divisible == is_standard(e)) report.standard_matches_complement = false;
      if (!divisible) ++standard_seen;
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      e[index] = p;
      self(self, index + 1, remaining - p);
    }
    e[index] = 0;
  };
  walk(walk, 0, n);  // degree n is included: nothing there may be standard
  if (standard_seen != basis.size()) report.standard_matches_complement = false;

  report.independent = true;
  for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
    std::vector<ChowElement> images;
    for (const auto& m : basis.by_degree[d]) images.push_back(substitute_z(ZPolynomial::monomial(n, m)));
    if (graded_rank(images, static_cast<int>(d)) != images.size()) report.independent = false;
  }
  return report;
}

std::size_t invariant_subspace_rank(int n, int d) {
  if (n < 1 || n > kMaxInvariantRank)
    fail(ErrorKind::kSizeCap, "invariant_subspace_rank needs 1 <= n <= " + std::to_string(kMaxInvariantRank));
  const auto ring = ChowRing::permutahedral(n);
  if (d < 0 || d > ring->top_degree()) fail(ErrorKind::kOutOfRange, "degree outside 0..n-1");
  const auto& basis = ring->fy_basis(d);
  const std::size_t dim = basis.size();

  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  if (n >= 2) std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;

  // The group permutes FY monomials, so each generator acts by a permutation matrix; stack (sigma - id).
  std::vector<IntegerRow> rows;
  for (const Permutation* sigma : {&swap, &cycle}) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto image = basis.find(basis.monomials[j].relabeled(*sigma));
      if (!image) fail(ErrorKind::kInvalidInput, "relabeling left the FY basis");
      if (*image == j) continue;
      IntegerRow row(dim);
      row[*image] = 1;
      row[j] = -1;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return dim;
  return dim - bareiss_rank(std::move(rows));
}

}  // namespace chowrn
