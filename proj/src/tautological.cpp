#include "chowrn/tautological.hpp"

#include <algorithm>

#include "chowrn/error.hpp"
#include "chowrn/linear_algebra.hpp"
#include "chowrn/rank_nullity.hpp"

namespace chowrn {

namespace {

int side_level(const Matroid& m, ChernSide side, Subset s) {
  return side == ChernSide::kSub ? m.rank(s) : m.nullity(s);
}

void check_k(const Matroid& m, int k) {
  if (k < 0 || k > m.size()) fail(ErrorKind::kOutOfRange, "Chern degree must lie in 0..n");
}

// Walks chains below `limit` drawn from `admissible` (all subsets when empty), with exponents whose running
// binomial factor is nonzero, and emits (monomial, coefficient) for total exponent k.
template <typename Level, typename Emit>
void walk_chains(Subset ground, int k, const std::vector<Subset>* admissible, Level&& level, Emit&& emit) {
  std::vector<std::pair<Subset, int>> chain;
  auto step = [&](auto&& self, Subset below, int used, const Integer& coeff) -> void {
    if (used == k) {
      const Integer signed_coeff = (k % 2 == 0) ? coeff : Integer(-coeff);
      emit(*ChainMonomial::from_factors(chain), signed_coeff);
      return;
    }
    auto visit = [&](Subset s) {
      const int l = level(s);
      for (int p = 1; used + p <= k; ++p) {
        const Integer b = binomial(l - used, p);
        if (b == 0) break;
        chain.emplace_back(s, p);
        self(self, s, used + p, coeff * b);
        chain.pop_back();
      }
    };
    if (admissible) {
      for (Subset s : *admissible)
        if (s != below && is_subset(below, s)) visit(s);
    } else {
      const Subset free = ground & ~below;
      // Nonempty subsets of the complement, ascending.
      for (Subset add = free & -free; add; add = (add - free) & free) visit(below | add);
    }
  };
  step(step, 0, 0, Integer(1));
}

}  // namespace

Integer chern_coefficient(std::span<const int> levels, std::span<const int> powers) {
  if (levels.size() != powers.size()) fail(ErrorKind::kInvalidInput, "levels and powers differ in length");
  Integer c = 1;
  int used = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    c *= binomial(levels[i] - used, powers[i]);
    used += powers[i];
  }
  return used % 2 == 0 ? c : Integer(-c);
}

ChowElement chern_closed_form(const Matroid& m, ChernSide side, int k) {
  check_k(m, k);
  ChowElement out(ChowRing::permutahedral(m.size()));
  walk_chains(m.ground(), k, nullptr, [&](Subset s) { return side_level(m, side, s); },
              [&](const ChainMonomial& mono, const Integer& c) { out.add_term(mono, c); });
  return out;
}

std::vector<ChowElement> chern_product_polynomial(const Matroid& m, ChernSide side) {
  const auto ring = ChowRing::permutahedral(m.size());
  const int r = m.rank();
  const int first = side == ChernSide::kSub ? 0 : r;
  const int last = side == ChernSide::kSub ? r : m.size();  // exclusive
  std::vector<ChowElement> coeffs{ChowElement::unit(ring)};
  for (int i = first; i < last; ++i) {
    ChowElement factor(ring);
    for (Subset s = 1; s <= m.ground(); ++s) {
      const int jump = m.higgs_rank(i + 1, s) - m.higgs_rank(i, s);
      if (jump != 0) factor.add_term(ChainMonomial::single(s), jump);
    }
    coeffs.emplace_back(ring);
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] -= multiply(factor, coeffs[j - 1]);
  }
  return coeffs;
}

ChowElement chern_product_oracle(const Matroid& m, ChernSide side, int k) {
  check_k(m, k);
  auto coeffs = chern_product_polynomial(m, side);
  if (static_cast<std::size_t>(k) >= coeffs.size()) return ChowElement(ChowRing::permutahedral(m.size()));
  return coeffs[k];
}

YPolynomial chern_y_expansion(const Matroid& m, ChernSide side, int k) {
  check_k(m, k);
  const int r = m.rank();
  const int max_nullity = m.size() - r;
  YPolynomial out;
  YMonomial current;
  // (a, b) < (c, d) coordinatewise and distinct.
  auto step = [&](auto&& self, int a, int b, int used, const Integer& coeff) -> void {
    if (used == k) {
      out[current] += (k % 2 == 0) ? coeff : Integer(-coeff);
      return;
    }
    for (int c = a; c <= r; ++c) {
      for (int d = b; d <= max_nullity; ++d) {
        if (c == a && d == b) continue;
        const int l = side == ChernSide::kSub ? c : d;
        for (int p = 1; used + p <= k; ++p) {
          const Integer bin = binomial(l - used, p);
          if (bin == 0) break;
          current.push_back({c, d, p});
          self(self, c, d, used + p, coeff * bin);
          current.pop_back();
        }
      }
    }
  };
  step(step, 0, 0, 0, Integer(1));
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

ChowElement substitute_y(const YPolynomial& p, const Matroid& m) {
  const auto ring = ChowRing::permutahedral(m.size());
  std::map<std::pair<int, int>, ChowElement> y;
  for (auto& g : rn_generators(m)) y.emplace(std::pair{g.rank, g.nullity}, g.element);
  ChowElement out(ring);
  for (const auto& [mono, c] : p) {
    ChowElement term = ChowElement::unit(ring);
    for (const auto& [i, j, e] : mono) {
      auto it = y.find({i, j});
      if (it == y.end()) {
        term = ChowElement(ring);
        break;
      }
      term = multiply(term, power(it->second, e));
    }
    out += term * c;
  }
  return out;
}

ChowElement ch_class(const Matroid& m, int k) {
  const auto ring = ChowRing::of_matroid(m);
  if (k < 0 || k > m.rank() - 1) fail(ErrorKind::kOutOfRange, "ch_k needs 0 <= k <= rank - 1");
  ChowElement out(ring);
  walk_chains(m.ground(), k, &ring->generators(), [&](Subset s) { return m.rank(s); },
              [&](const ChainMonomial& mono, const Integer& c) { out.add_term(mono, c); });
  return out;
}

ChowElement ch_class_by_pullback(const Matroid& m, int k) {
  const auto ring = ChowRing::of_matroid(m);
  if (k < 0 || k > m.rank() - 1) fail(ErrorKind::kOutOfRange, "ch_k needs 0 <= k <= rank - 1");
  return pullback(chern_closed_form(m, ChernSide::kSub, k), ring);
}

std::vector<std::vector<Subset>> proper_flat_chains(const Matroid& m, int length) {
  std::vector<Subset> proper;
  for (Subset f : m.flats())
    if (f != 0 && f != m.ground() && f != m.loops()) proper.push_back(f);
  std::sort(proper.begin(), proper.end());
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> chain;
  auto step = [&](auto&& self, Subset below) -> void {
    if (static_cast<int>(chain.size()) == length) {
      out.push_back(chain);
      return;
    }
    for (Subset f : proper) {
      if (f == below || !is_subset(below, f)) continue;
      chain.push_back(f);
      self(self, f);
      chain.pop_back();
    }
  };
  if (length >= 0) step(step, 0);
  std::sort(out.begin(), out.end());
  return out;
}

MinkowskiWeight bergman_class(const Matroid& m) {
  if (!m.loopless()) fail(ErrorKind::kUnsupported, "the Bergman fan is defined for loopless matroids");
  MinkowskiWeight w{m, m.rank() - 1, {}};
  for (auto& chain : proper_flat_chains(m, m.rank() - 1)) w.weights.emplace(chain, 1);
  return w;
}

MinkowskiWeight csm_weights(const Matroid& m, int k) {
  if (!m.loopless()) fail(ErrorKind::kUnsupported, "csm weights are defined for loopless matroids");
  const auto ring = ChowRing::of_matroid(m);
  const ChowElement ch = normal_form(ch_class(m, k));
  const int dim = m.rank() - 1 - k;
  MinkowskiWeight w{m, dim, {}};
  for (auto& chain : proper_flat_chains(m, dim)) {
    ChowElement cone = ChowElement::unit(ring);
    for (Subset f : chain) cone = multiply(cone, ChowElement::generator(ring, f));
    w.weights.emplace(chain, degree_map(multiply(ch, cone)));
  }
  return w;
}

bool balancing_check(const MinkowskiWeight& w) {
  const Matroid& m = w.matroid;
  if (w.dimension < 1) fail(ErrorKind::kOutOfRange, "balancing needs cones of dimension >= 1");
  const int n = m.size();
  auto indicator = [n](Subset s) {
    IntegerRow v(n);
    for (int e = 0; e < n; ++e) v[e] = (s >> e) & 1;
    return v;
  };
  for (const auto& tau : proper_flat_chains(m, w.dimension - 1)) {
    IntegerRow sum(n);
    for (const auto& [sigma, weight] : w.weights) {
      if (weight == 0) continue;
      // sigma must contain tau and have exactly one extra flat.
      Subset extra = 0;
      std::size_t matched = 0;
      for (Subset f : sigma) {
        if (std::find(tau.begin(), tau.end(), f) != tau.end()) {
          ++matched;
        } else {
          extra = f;
        }
      }
      if (matched != tau.size()) continue;
      for (int e = 0; e < n; ++e)
        if ((extra >> e) & 1) sum[e] += weight;
    }
    IntegerEchelon span(n);
    span.insert(indicator(m.ground()));
    for (Subset f : tau) span.insert(indicator(f));
    if (!span.contains(sum)) return false;
  }
  return true;
}

}  // namespace chowrn
