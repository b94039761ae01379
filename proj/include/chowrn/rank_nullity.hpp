#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chowrn/chow_ring.hpp"
#include "chowrn/linear_algebra.hpp"
#include "chowrn/matroid.hpp"

namespace chowrn {

// y_{i,j}: sum of x_S over nonempty S with rank i and nullity j, in A*(U_{n,n}).
struct RNGenerator {
  int rank = 0;
  int nullity = 0;
  ChowElement element;
};

// Nonzero generators ordered by (rank, nullity).
std::vector<RNGenerator> rn_generators(const Matroid& m);

struct RelationCensus {
  // (i, j) with i + j <= n and y_{i,j} = 0, ordered by (i, j).
  std::vector<std::pair<int, int>> vanishing;
  // The same set predicted by y_{0,0} = 0 and i + j > max{|F| : F a rank-i flat}.
  std::vector<std::pair<int, int>> predicted_vanishing;
  std::size_t generator_count = 0;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  bool free_plus_loops = false;  // M = U_{r,r} + U_{0,n-r} with 1 <= r <= n-1
  bool weighted_relation_holds = false;  // sum (i+j) y_{i,j} normal-forms to 0

  bool consistent() const {
    return vanishing == predicted_vanishing && rank == expected_rank && weighted_relation_holds;
  }
};

RelationCensus degree1_relation_census(const Matroid& m);

// The graded pieces R^d(M) as spans inside FY coordinates of A^d(U_{n,n}).
// Degree d+1 is spanned by products of the degree-d basis with every generator; bases keep the first
// independent vectors in generation order, so results are reproducible.
class RankNullityRing {
 public:
  explicit RankNullityRing(const Matroid& m);

  const Matroid& matroid() const { return matroid_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<RNGenerator>& generators() const { return generators_; }
  int top_degree() const { return ring_->top_degree(); }

  // Basis vectors (FY coordinates) of R^d.
  const std::vector<IntegerRow>& basis(int degree);
  std::size_t rank(int degree) { return basis(degree).size(); }
  std::vector<std::size_t> hilbert_function();

  // Whether a homogeneous element of A^d(U_{n,n}) lies in the Q-span of R^d.
  bool contains(const ChowElement& element);

  // Multiplication by a degree-1 element of A^1(U_{n,n}) is injective from R^q to R^{q+1}.
  bool multiplication_injective(const ChowElement& ell, int q);

 private:
  void extend_to(int degree);

  Matroid matroid_;
  RingPtr ring_;
  std::vector<RNGenerator> generators_;
  std::vector<std::vector<IntegerRow>> bases_;
  std::vector<std::unique_ptr<IntegerEchelon>> echelons_;
};

// Practical size bound for the Hilbert driver.
inline constexpr int kMaxHilbertGroundSet = 8;

std::vector<std::size_t> rn_hilbert(const Matroid& m);

// degree_map of prod_{k=1}^{n-1} (sum_{i+j=k} y_{i,j}); equals n!.
Integer top_degree_witness(const Matroid& m);

// sum (i+j)(n-i-j) y_{i,j}
ChowElement lefschetz_element(const Matroid& m);
// Injectivity of multiplication by ell from R^q to R^{q+1} whenever q + 1 <= n/2.
bool lefschetz_check(const Matroid& m);
bool lefschetz_check(const Matroid& m, const ChowElement& ell);

// Every tautological Chern class c_k(S_M), c_k(Q_M) lies in R^k(M).
bool chern_membership_check(const Matroid& m);

}  // namespace chowrn
