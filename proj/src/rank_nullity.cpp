#include "chowrn/rank_nullity.hpp"

#include <algorithm>

#include "chowrn/error.hpp"
#include "chowrn/tautological.hpp"

namespace chowrn {

std::vector<RNGenerator> rn_generators(const Matroid& m) {
  const auto ring = ChowRing::permutahedral(m.size());
  std::map<std::pair<int, int>, ChowElement> sums;
  for (Subset s = 1; s <= m.ground(); ++s) {
    auto [it, inserted] = sums.try_emplace({m.rank(s), m.nullity(s)}, ring);
    it->second.add_term(ChainMonomial::single(s), 1);
  }
  std::vector<RNGenerator> out;
  for (auto& [key, element] : sums) out.push_back({key.first, key.second, std::move(element)});
  return out;
}

RelationCensus degree1_relation_census(const Matroid& m) {
  const int n = m.size();
  const auto gens = rn_generators(m);
  RelationCensus census;

  std::vector<std::vector<bool>> present(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& g : gens) present[g.rank][g.nullity] = true;

  // Largest flat size per rank; levels without flats stay at -1 so every (i, j) there vanishes.
  std::vector<int> largest_flat(n + 1, -1);
  for (Subset f : m.flats()) largest_flat[m.rank(f)] = std::max(largest_flat[m.rank(f)], cardinality(f));

  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      if (!present[i][j]) census.vanishing.emplace_back(i, j);
      if ((i == 0 && j == 0) || i + j > largest_flat[i]) census.predicted_vanishing.emplace_back(i, j);
    }
  }

  census.generator_count = gens.size();
  std::vector<ChowElement> elements;
  for (const auto& g : gens) elements.push_back(g.element);
  census.rank = graded_rank(elements, 1);
  census.free_plus_loops = m.is_free_plus_loops() && m.rank() >= 1 && m.rank() <= n - 1;
  const std::size_t lost = census.free_plus_loops ? 2 : 1;
  census.expected_rank = census.generator_count >= lost ? census.generator_count - lost : 0;

  ChowElement weighted(ChowRing::permutahedral(n));
  for (const auto& g : gens) weighted += g.element * Integer(g.rank + g.nullity);
  census.weighted_relation_holds = normal_form(weighted).is_zero();
  return census;
}

RankNullityRing::RankNullityRing(const Matroid& m)
    : matroid_(m), ring_(ChowRing::permutahedral(m.size())), generators_(rn_generators(m)) {
  bases_.push_back({IntegerRow{Integer(1)}});
  echelons_.push_back(std::make_unique<IntegerEchelon>(1));
  echelons_.back()->insert(bases_.back().front());
}

void RankNullityRing::extend_to(int degree) {
  while (static_cast<int>(bases_.size()) <= degree) {
    const int source = static_cast<int>(bases_.size()) - 1;
    const int target = source + 1;
    const std::size_t dim = ring_->fy_basis(target).size();
    auto echelon = std::make_unique<IntegerEchelon>(dim);
    std::vector<IntegerRow> basis;
    std::vector<MultiplicationMap> maps;
    maps.reserve(generators_.size());
    for (const auto& g : generators_) maps.emplace_back(g.element, source);
    for (const auto& v : bases_[source]) {
      for (const auto& map : maps) {
        if (echelon->rank() == dim) break;
        IntegerRow w = map.apply(v);
        if (echelon->insert(w)) basis.push_back(std::move(w));
      }
    }
    bases_.push_back(std::move(basis));
    echelons_.push_back(std::move(echelon));
  }
}

const std::vector<IntegerRow>& RankNullityRing::basis(int degree) {
  if (degree < 0 || degree > top_degree())
    fail(ErrorKind::kOutOfRange, "degree outside 0.." + std::to_string(top_degree()));
  extend_to(degree);
  return bases_[degree];
}

std::vector<std::size_t> RankNullityRing::hilbert_function() {
  std::vector<std::size_t> out;
  for (int d = 0; d <= top_degree(); ++d) out.push_back(rank(d));
  return out;
}

bool RankNullityRing::contains(const ChowElement& element) {
  const auto d = element.degree();
  if (!d || *d > top_degree()) return true;
  extend_to(*d);
  return echelons_[*d]->contains(coordinates(element, *d));
}

bool RankNullityRing::multiplication_injective(const ChowElement& ell, int q) {
  if (ell.degree().value_or(1) != 1) fail(ErrorKind::kInvalidInput, "Lefschetz element must have degree 1");
  if (q + 1 > top_degree()) return true;
  const auto& source = basis(q);
  if (ell.is_zero()) return source.empty();
  MultiplicationMap map(ell, q);
  IntegerEchelon image(ring_->fy_basis(q + 1).size());
  for (const auto& v : source) image.insert(map.apply(v));
  return image.rank() == source.size();
}

std::vector<std::size_t> rn_hilbert(const Matroid& m) {
  if (m.size() > kMaxHilbertGroundSet)
    fail(ErrorKind::kSizeCap, "Hilbert functions are limited to n <= " + std::to_string(kMaxHilbertGroundSet));
  RankNullityRing ring(m);
  return ring.hilbert_function();
}

Integer top_degree_witness(const Matroid& m) {
  const int n = m.size();
  const auto ring = ChowRing::permutahedral(n);
  const auto gens = rn_generators(m);
  ChowElement f = ChowElement::unit(ring);
  for (int k = 1; k <= n - 1; ++k) {
    ChowElement level(ring);
    for (const auto& g : gens)
      if (g.rank + g.nullity == k) level += g.element;
    f = multiply(f, level);
  }
  return degree_map(f);
}

ChowElement lefschetz_element(const Matroid& m) {
  const int n = m.size();
  ChowElement ell(ChowRing::permutahedral(n));
  for (const auto& g : rn_generators(m)) {
    const int size = g.rank + g.nullity;
    ell += g.element * Integer(size * (n - size));
  }
  return ell;
}

bool lefschetz_check(const Matroid& m, const ChowElement& ell) {
  if (m.size() > kMaxHilbertGroundSet - 1) fail(ErrorKind::kSizeCap, "Lefschetz check is limited to n <= 7");
  RankNullityRing ring(m);
  for (int q = 0; q + 1 <= m.size() / 2; ++q)
    if (!ring.multiplication_injective(ell, q)) return false;
  return true;
}

bool lefschetz_check(const Matroid& m) { return lefschetz_check(m, lefschetz_element(m)); }

bool chern_membership_check(const Matroid& m) {
  RankNullityRing ring(m);
  for (ChernSide side : {ChernSide::kSub, ChernSide::kQuot})
    for (int k = 0; k <= m.size(); ++k)
      if (!ring.contains(chern_closed_form(m, side, k))) return false;
  return true;
}

}  // namespace chowrn
