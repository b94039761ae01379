#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chowrn {

// A subset of the ground set [n]; element e (1-based) is bit e-1.
using Subset = std::uint32_t;

inline int cardinality(Subset s) { return __builtin_popcount(s); }
inline Subset full_set(int n) { return n == 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline bool comparable(Subset a, Subset b) { return is_subset(a, b) || is_subset(b, a); }

// 1-based element lists <-> masks.
Subset subset_from_elements(std::span<const int> elements, int n);
std::vector<int> elements_of(Subset s);
std::string format_subset(Subset s);  // "{1,2,5}"

// Upper bound on the ground-set size accepted by every constructor. Defaults to 12.
int max_ground_set();
void set_max_ground_set(int n);

// A permutation of [n] stored 0-based: image[i] is where element i+1 goes, minus one.
using Permutation = std::vector<int>;
Subset permute(const Permutation& sigma, Subset s);

// A matroid on [n] given by its full rank table. Immutable after construction.
class Matroid {
 public:
  static Matroid uniform(int r, int n);
  static Matroid from_bases(int n, std::span<const Subset> bases);
  static Matroid graphic(int vertices, std::span<const std::pair<int, int>> edges);
  static Matroid direct_sum(const Matroid& a, const Matroid& b);
  // Validates the rank axioms on every subset.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> ranks, std::string label);

  int size() const { return n_; }
  int rank() const { return ranks_.back(); }
  int rank(Subset s) const { return ranks_[s]; }
  int nullity(Subset s) const { return cardinality(s) - ranks_[s]; }
  Subset ground() const { return full_set(n_); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }
  Subset loops() const { return closure(0); }
  bool loopless() const { return loops() == 0; }

  // All flats, sorted by rank and then by mask.
  std::vector<Subset> flats() const;
  std::vector<std::vector<Subset>> flats_by_rank() const;
  // Minimal dependent sets in ascending mask order.
  std::vector<Subset> circuits() const;
  std::vector<Subset> bases() const;

  // Rank of s in the i-th matroid of the full Higgs lift (M_0 = U_{0,n}, M_rank = M, M_n = U_{n,n}).
  int higgs_rank(int i, Subset s) const;
  Matroid higgs_lift(int i) const;

  // All rank-preserving permutations in lexicographic order; refuses n > 8.
  std::vector<Permutation> automorphisms() const;

  // True iff M is U_{r,r} + U_{0,n-r} up to relabeling (only coloops and loops).
  bool is_free_plus_loops() const;

  bool operator==(const Matroid& other) const { return n_ == other.n_ && ranks_ == other.ranks_; }

 private:
  Matroid(int n, std::vector<std::uint8_t> ranks, std::string label);

  int n_ = 0;
  std::vector<std::uint8_t> ranks_;
  std::string label_;
};

}  // namespace chowrn
