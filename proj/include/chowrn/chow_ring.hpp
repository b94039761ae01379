#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chowrn/integer.hpp"
#include "chowrn/matroid.hpp"

namespace chowrn {

// Chow-ring computations are restricted to ground sets of at most this size.
inline constexpr int kMaxChowGroundSet = 12;

// x_{S_1}^{p_1} ... x_{S_t}^{p_t} over a strictly nested chain S_1 < ... < S_t.
// The empty chain is the unit monomial.
class ChainMonomial {
 public:
  ChainMonomial() = default;

  // Builds a monomial from (subset, power) factors in any order; nullopt if the subsets do not form a chain.
  // Repeated subsets have their powers added.
  static std::optional<ChainMonomial> from_factors(std::span<const std::pair<Subset, int>> factors);
  static ChainMonomial single(Subset s, int power = 1);

  int length() const { return length_; }
  Subset set(int i) const { return sets_[i]; }
  int power(int i) const { return powers_[i]; }
  int degree() const;
  bool is_unit() const { return length_ == 0; }

  // Product with x_s^power; nullopt when s is incomparable with some member of the chain.
  std::optional<ChainMonomial> times(Subset s, int power = 1) const;
  std::optional<ChainMonomial> times(const ChainMonomial& other) const;
  // Removes `amount` from the power at position i, dropping the factor if it reaches zero.
  ChainMonomial lowered(int i, int amount) const;
  ChainMonomial relabeled(const Permutation& sigma) const;

  // Canonical order: chain length, then subsets lexicographically by mask, then powers.
  std::strong_ordering operator<=>(const ChainMonomial& other) const;
  bool operator==(const ChainMonomial& other) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  std::array<std::uint16_t, kMaxChowGroundSet> sets_{};
  std::array<std::uint8_t, kMaxChowGroundSet> powers_{};
  std::uint8_t length_ = 0;
};

struct ChainMonomialHash {
  std::size_t operator()(const ChainMonomial& m) const { return m.hash(); }
};

// A sparse coordinate vector over an FY basis: (index, coefficient) pairs sorted by index.
using Coordinates = std::vector<std::pair<std::uint32_t, Integer>>;

enum class RingKind { kPermutahedral, kMatroid };

class ChowRing;

struct FYBasisIndex {
  int degree = 0;
  std::vector<ChainMonomial> monomials;  // canonical order
  std::unordered_map<ChainMonomial, std::uint32_t, ChainMonomialHash> index;

  std::size_t size() const { return monomials.size(); }
  std::optional<std::uint32_t> find(const ChainMonomial& m) const;
};

// Ring context: A*(U_{n,n}) or A*(M) for a loopless matroid M, in the Feichtner-Yuzvinsky presentation.
// Logically immutable; the FY basis tables and the normal-form memo are filled lazily under a lock.
class ChowRing : public std::enable_shared_from_this<ChowRing> {
 public:
  static std::shared_ptr<const ChowRing> permutahedral(int n);
  static std::shared_ptr<const ChowRing> of_matroid(const Matroid& m);

  RingKind kind() const { return kind_; }
  int size() const { return n_; }
  int top_degree() const { return top_degree_; }
  const std::optional<Matroid>& matroid() const { return matroid_; }

  // Admissible subsets (nonempty flats), sorted by mask.
  const std::vector<Subset>& generators() const { return generators_; }
  bool is_generator(Subset s) const { return s < admissible_.size() && admissible_[s]; }
  // Cardinality in the permutahedral case, matroid rank otherwise.
  int level(Subset s) const;

  // True iff every exponent is strictly below the corresponding rank gap.
  bool is_fy_monomial(const ChainMonomial& m) const;
  const FYBasisIndex& fy_basis(int degree) const;

  // Coordinates of a single monomial in the FY basis of its degree (empty above the top degree).
  Coordinates normal_form(const ChainMonomial& m) const;

  // Degree of the FY top monomial x_E^{top} under A^{top} = Z (each maximal flag monomial has degree 1).
  const Integer& top_monomial_degree() const;

  bool same_as(const ChowRing& other) const;
  std::size_t cached_normal_forms() const;
  void clear_cache() const;

 private:
  ChowRing(RingKind kind, int n, std::optional<Matroid> matroid, std::vector<Subset> generators);
  Coordinates reduce(const ChainMonomial& m) const;
  void build_fy_basis(int degree, FYBasisIndex& out) const;

  RingKind kind_;
  int n_;
  int top_degree_;
  std::optional<Matroid> matroid_;
  std::vector<Subset> generators_;
  std::vector<bool> admissible_;
  // supersets_[s] lists generators strictly containing generator s.
  std::vector<std::vector<Subset>> supersets_;

  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<FYBasisIndex>> fy_;
  mutable std::unordered_map<ChainMonomial, Coordinates, ChainMonomialHash> memo_;
  mutable std::optional<Integer> top_degree_value_;
};

using RingPtr = std::shared_ptr<const ChowRing>;

// A finite Z-combination of chain monomials in a fixed ring. Zero coefficients are never stored.
class ChowElement {
 public:
  explicit ChowElement(RingPtr ring) : ring_(std::move(ring)) {}
  static ChowElement unit(RingPtr ring);
  static ChowElement generator(RingPtr ring, Subset s);
  static ChowElement from_coordinates(RingPtr ring, int degree, const Coordinates& coords);

  const RingPtr& ring() const { return ring_; }
  const std::map<ChainMonomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Degree of the terms; nullopt for the zero element. Throws if inhomogeneous.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Integer coefficient(const ChainMonomial& m) const;

  void add_term(const ChainMonomial& m, const Integer& c);
  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  ChowElement& operator*=(const Integer& c);
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const Integer& c) { return a *= c; }
  ChowElement operator-() const;

  ChowElement relabeled(const Permutation& sigma) const;
  bool operator==(const ChowElement& other) const { return terms_ == other.terms_; }

 private:
  RingPtr ring_;
  std::map<ChainMonomial, Integer> terms_;
};

// Raw product: distributes, annihilates non-chains, no rewriting.
ChowElement multiply(const ChowElement& a, const ChowElement& b);
ChowElement power(const ChowElement& a, int exponent);

// FY coordinates of a homogeneous element in degree d (dense, length fy_basis(d).size()).
std::vector<Integer> coordinates(const ChowElement& a, int degree);
// The unique representative supported on FY monomials.
ChowElement normal_form(const ChowElement& a);
// Integer value in A^{top} = Z; requires top degree (the zero element maps to 0).
Integer degree_map(const ChowElement& a);
// Kills monomials with a non-flat subset and moves the rest into the matroid ring.
ChowElement pullback(const ChowElement& a, const RingPtr& matroid_ring);
// Exact rank of the span of homogeneous degree-d elements.
std::size_t graded_rank(std::span<const ChowElement> elements, int degree);

// Multiplication by a fixed degree-1 (or any homogeneous) element as a sparse map A^d -> A^{d+e}.
class MultiplicationMap {
 public:
  MultiplicationMap(const ChowElement& factor, int source_degree);
  int source_degree() const { return source_degree_; }
  int target_degree() const { return target_degree_; }
  std::vector<Integer> apply(std::span<const Integer> source) const;

 private:
  int source_degree_;
  int target_degree_;
  std::size_t target_dim_;
  std::vector<Coordinates> columns_;  // image of each source basis monomial
};

}  // namespace chowrn
