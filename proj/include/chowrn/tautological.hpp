#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "chowrn/chow_ring.hpp"
#include "chowrn/integer.hpp"
#include "chowrn/matroid.hpp"

namespace chowrn {

// Tautological subbundle S_M or quotient bundle Q_M.
enum class ChernSide { kSub, kQuot };

// (-1)^k binom(l_1, p_1) binom(l_2 - p~_1, p_2) ... binom(l_t - p~_{t-1}, p_t), k = sum p_i.
// The levels are ranks for S_M and nullities for Q_M.
Integer chern_coefficient(std::span<const int> levels, std::span<const int> powers);

// c_k as the explicit chain sum over the whole Boolean lattice; raw, not normal-formed.
ChowElement chern_closed_form(const Matroid& m, ChernSide side, int k);

// c_k extracted from prod_i (1 - t sum_S (rank_{i+1}(S) - rank_i(S)) x_S) over the full Higgs lift.
ChowElement chern_product_oracle(const Matroid& m, ChernSide side, int k);
// All coefficients c_0, c_1, ... of the same product (index = degree).
std::vector<ChowElement> chern_product_polynomial(const Matroid& m, ChernSide side);

// A monomial y_{i_1,j_1}^{p_1} ... in the rank-nullity symbols, factors as {i, j, p}.
using YMonomial = std::vector<std::array<int, 3>>;
using YPolynomial = std::map<YMonomial, Integer>;

// c_k written in the y-symbols; sums over chains (0,0) < (r_1,n_1) < ... <= (rank, n - rank).
YPolynomial chern_y_expansion(const Matroid& m, ChernSide side, int k);
// Replaces each y_{i,j} by its x-expansion and multiplies out (raw).
ChowElement substitute_y(const YPolynomial& p, const Matroid& m);

// ch_k(M) in A^k(M) as the flat-chain sum; requires a loopless matroid and 0 <= k <= rank - 1.
ChowElement ch_class(const Matroid& m, int k);
// The same class obtained by pulling c_k(S_M) back to A*(M).
ChowElement ch_class_by_pullback(const Matroid& m, int k);

// Chains of nonempty proper flats F_1 < ... < F_length, in canonical order.
std::vector<std::vector<Subset>> proper_flat_chains(const Matroid& m, int length);

// Integer weights on the cones of the Bergman fan of a fixed dimension (chains of nonempty proper flats).
struct MinkowskiWeight {
  Matroid matroid;
  int dimension = 0;
  std::map<std::vector<Subset>, Integer> weights;
};

MinkowskiWeight bergman_class(const Matroid& m);
// csm_{rank-1-k}(M) = ch_k(M) capped with the Bergman class; refuses matroids with loops.
MinkowskiWeight csm_weights(const Matroid& m, int k);
// Balancing at every codimension-one cone, tested by exact rational membership in Z^n / Z(1,...,1).
bool balancing_check(const MinkowskiWeight& w);

}  // namespace chowrn
