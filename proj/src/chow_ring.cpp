#include "chowrn/chow_ring.hpp"

#include <algorithm>
#include <sstream>

#include "chowrn/error.hpp"
#include "chowrn/linear_algebra.hpp"

namespace chowrn {

// ---------------------------------------------------------------------------------------------
// ChainMonomial

std::optional<ChainMonomial> ChainMonomial::from_factors(std::span<const std::pair<Subset, int>> factors) {
  ChainMonomial m;
  for (auto [s, p] : factors) {
    if (p < 0) fail(ErrorKind::kInvalidInput, "negative exponent");
    if (s == 0) fail(ErrorKind::kInvalidInput, "x_S requires a nonempty subset");
    if (p == 0) continue;
    auto next = m.times(s, p);
    if (!next) return std::nullopt;
    m = *next;
  }
  return m;
}

ChainMonomial ChainMonomial::single(Subset s, int power) {
  ChainMonomial m;
  if (power <= 0) return m;
  return *m.times(s, power);
}

int ChainMonomial::degree() const {
  int d = 0;
  for (int i = 0; i < length_; ++i) d += powers_[i];
  return d;
}

std::optional<ChainMonomial> ChainMonomial::times(Subset s, int power) const {
  if (power == 0) return *this;
  if (s >= (Subset{1} << kMaxChowGroundSet)) fail(ErrorKind::kSizeCap, "subset exceeds the Chow engine ground-set cap");
  int pos = length_;
  for (int i = 0; i < length_; ++i) {
    const Subset t = sets_[i];
    if (t == s) {
      ChainMonomial out = *this;
      out.powers_[i] = static_cast<std::uint8_t>(out.powers_[i] + power);
      return out;
    }
    if (is_subset(s, t)) {
      if (pos == length_) pos = i;
    } else if (!is_subset(t, s)) {
      return std::nullopt;
    }
  }
  ChainMonomial out;
  int k = 0;
  for (int i = 0; i < length_; ++i) {
    if (i == pos) {
      out.sets_[k] = static_cast<std::uint16_t>(s);
      out.powers_[k++] = static_cast<std::uint8_t>(power);
    }
    out.sets_[k] = sets_[i];
    out.powers_[k++] = powers_[i];
  }
  if (pos == length_) {
    out.sets_[k] = static_cast<std::uint16_t>(s);
    out.powers_[k++] = static_cast<std::uint8_t>(power);
  }
  out.length_ = static_cast<std::uint8_t>(k);
  return out;
}

std::optional<ChainMonomial> ChainMonomial::times(const ChainMonomial& other) const {
  std::optional<ChainMonomial> out = *this;
  for (int i = 0; i < other.length_ && out; ++i) out = out->times(other.sets_[i], other.powers_[i]);
  return out;
}

ChainMonomial ChainMonomial::lowered(int i, int amount) const {
  ChainMonomial out = *this;
  if (powers_[i] > amount) {
    out.powers_[i] = static_cast<std::uint8_t>(powers_[i] - amount);
    return out;
  }
  for (int k = i; k + 1 < length_; ++k) {
    out.sets_[k] = sets_[k + 1];
    out.powers_[k] = powers_[k + 1];
  }
  out.sets_[length_ - 1] = 0;
  out.powers_[length_ - 1] = 0;
  out.length_ = static_cast<std::uint8_t>(length_ - 1);
  return out;
}

ChainMonomial ChainMonomial::relabeled(const Permutation& sigma) const {
  ChainMonomial out = *this;
  for (int i = 0; i < length_; ++i) out.sets_[i] = static_cast<std::uint16_t>(permute(sigma, sets_[i]));
  return out;
}

std::strong_ordering ChainMonomial::operator<=>(const ChainMonomial& other) const {
  if (auto c = length_ <=> other.length_; c != 0) return c;
  for (int i = 0; i < length_; ++i)
    if (auto c = sets_[i] <=> other.sets_[i]; c != 0) return c;
  for (int i = 0; i < length_; ++i)
    if (auto c = powers_[i] <=> other.powers_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool ChainMonomial::operator==(const ChainMonomial& other) const {
  if (length_ != other.length_) return false;
  for (int i = 0; i < length_; ++i)
    if (sets_[i] != other.sets_[i] || powers_[i] != other.powers_[i]) return false;
  return true;
}

std::size_t ChainMonomial::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ length_;
  for (int i = 0; i < length_; ++i) {
    h = (h ^ sets_[i]) * 1099511628211ull;
    h = (h ^ powers_[i]) * 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string ChainMonomial::to_string() const {
  if (length_ == 0) return "1";
  std::ostringstream os;
  for (int i = 0; i < length_; ++i) {
    if (i) os << '*';
    os << "x" << format_subset(sets_[i]);
    if (powers_[i] != 1) os << '^' << int(powers_[i]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------------------------
// ChowRing

std::optional<std::uint32_t> FYBasisIndex::find(const ChainMonomial& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ChowRing::ChowRing(RingKind kind, int n, std::optional<Matroid> matroid, std::vector<Subset> generators)
    : kind_(kind), n_(n), matroid_(std::move(matroid)), generators_(std::move(generators)) {
  top_degree_ = kind_ == RingKind::kPermutahedral ? n_ - 1 : matroid_->rank() - 1;
  const std::size_t universe = std::size_t{1} << n_;
  admissible_.assign(universe, false);
  for (Subset s : generators_) admissible_[s] = true;
  supersets_.assign(universe, {});
  for (Subset s = 0; s < universe; ++s) {
    if (s != 0 && !admissible_[s]) continue;
    for (Subset t : generators_)
      if (t != s && is_subset(s, t)) supersets_[s].push_back(t);
  }
  fy_.resize(static_cast<std::size_t>(std::max(top_degree_, 0)) + 1);
}

std::shared_ptr<const ChowRing> ChowRing::permutahedral(int n) {
  if (n < 1 || n > kMaxChowGroundSet)
    fail(ErrorKind::kSizeCap, "permutahedral ring needs 1 <= n <= " + std::to_string(kMaxChowGroundSet));
  // One shared context per n so that normal-form memos are reused across callers.
  static std::mutex registry_mutex;
  static std::map<int, std::shared_ptr<const ChowRing>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[n];
  if (!slot) {
    std::vector<Subset> gens;
    for (Subset s = 1; s <= full_set(n); ++s) gens.push_back(s);
    slot = std::shared_ptr<const ChowRing>(new ChowRing(RingKind::kPermutahedral, n, std::nullopt, std::move(gens)));
  }
  return slot;
}

std::shared_ptr<const ChowRing> ChowRing::of_matroid(const Matroid& m) {
  if (m.size() > kMaxChowGroundSet) fail(ErrorKind::kSizeCap, "matroid too large for the Chow engine");
  if (!m.loopless()) fail(ErrorKind::kUnsupported, "the Chow ring of a matroid is defined here for loopless matroids");
  std::vector<Subset> gens;
  for (Subset f : m.flats())
    if (f != 0) gens.push_back(f);
  std::sort(gens.begin(), gens.end());
  return std::shared_ptr<const ChowRing>(new ChowRing(RingKind::kMatroid, m.size(), m, std::move(gens)));
}

int ChowRing::level(Subset s) const {
  return kind_ == RingKind::kPermutahedral ? cardinality(s) : matroid_->rank(s);
}

bool ChowRing::is_fy_monomial(const ChainMonomial& m) const {
  int previous = 0;
  for (int i = 0; i < m.length(); ++i) {
    if (!is_generator(m.set(i))) return false;
    const int l = level(m.set(i));
    if (m.power(i) >= l - previous) return false;
    previous = l;
  }
  return true;
}

void ChowRing::build_fy_basis(int degree, FYBasisIndex& out) const {
  out.degree = degree;
  std::vector<std::pair<Subset, int>> stack;
  auto walk = [&](auto&& self, Subset below, int below_level, int remaining) -> void {
    if (remaining == 0) {
      out.monomials.push_back(*ChainMonomial::from_factors(stack));
      return;
    }
    for (Subset s : supersets_[below]) {
      const int gap = level(s) - below_level;
      for (int p = 1; p < gap && p <= remaining; ++p) {
        stack.emplace_back(s, p);
        self(self, s, level(s), remaining - p);
        stack.pop_back();
      }
    }
  };
  walk(walk, 0, 0, degree);
  std::sort(out.monomials.begin(), out.monomials.end());
  out.index.reserve(out.monomials.size());
  for (std::uint32_t i = 0; i < out.monomials.size(); ++i) out.index.emplace(out.monomials[i], i);
}

const FYBasisIndex& ChowRing::fy_basis(int degree) const {
  if (degree < 0 || degree > top_degree_)
    fail(ErrorKind::kOutOfRange, "degree " + std::to_string(degree) + " outside 0.." + std::to_string(top_degree_));
  std::lock_guard lock(mutex_);
  auto& slot = fy_[degree];
  if (!slot) {
    slot = std::make_unique<FYBasisIndex>();
    build_fy_basis(degree, *slot);
  }
  return *slot;
}

Coordinates ChowRing::normal_form(const ChainMonomial& m) const {
  const int d = m.degree();
  if (d > top_degree_) return {};
  for (int i = 0; i < m.length(); ++i)
    if (!is_generator(m.set(i)))
      fail(ErrorKind::kContextMismatch, "monomial " + m.to_string() + " uses a non-admissible subset");
  if (is_fy_monomial(m)) return {{*fy_basis(d).find(m), Integer(1)}};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
  }
  Coordinates result = reduce(m);
  std::lock_guard lock(mutex_);
  memo_.emplace(m, result);
  return result;
}

// Rewrites one non-FY monomial. With S = S_i the lowest chain member whose exponent reaches the rank gap
// g = level(S_i) - level(S_{i-1}), the relation x_{S_{i-1}} (sum_{H >= S_i} x_H)^g = 0 (x_{empty} = 1)
// holds in the ring; multiplying it by the rest of the monomial expresses m through monomials whose
// exponent mass sits on strictly larger subsets, so sum_i p_i |S_i| strictly increases and recursion ends.
Coordinates ChowRing::reduce(const ChainMonomial& m) const {
  int i = 0;
  int previous = 0;
  int gap = 0;
  for (; i < m.length(); ++i) {
    gap = level(m.set(i)) - previous;
    if (m.power(i) >= gap) break;
    previous = level(m.set(i));
  }
  const Subset pivot = m.set(i);
  const ChainMonomial rest = m.lowered(i, gap);

  std::unordered_map<ChainMonomial, Integer, ChainMonomialHash> expansion{{rest, Integer(1)}};
  for (int step = 0; step < gap; ++step) {
    std::unordered_map<ChainMonomial, Integer, ChainMonomialHash> next;
    next.reserve(expansion.size() * 4);
    for (const auto& [mono, c] : expansion) {
      if (auto r = mono.times(pivot)) next[*r] += c;
      for (Subset h : supersets_[pivot])
        if (auto r = mono.times(h)) next[*r] += c;
    }
    expansion = std::move(next);
  }
  expansion.erase(m);

  std::vector<std::pair<std::uint32_t, Integer>> collected;
  for (const auto& [mono, c] : expansion) {
    if (c == 0) continue;
    for (auto& [idx, v] : normal_form(mono)) collected.emplace_back(idx, -c * v);
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Coordinates out;
  for (auto& [idx, v] : collected) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += v;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(idx, std::move(v));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

const Integer& ChowRing::top_monomial_degree() const {
  {
    std::lock_guard lock(mutex_);
    if (top_degree_value_) return *top_degree_value_;
  }
  // A maximal flag of proper nonempty admissible subsets: greedily close up one element at a time.
  ChainMonomial flag;
  Subset current = 0;
  for (int step = 0; step < top_degree_; ++step) {
    Subset next = 0;
    for (int e = 0; e < n_ && !next; ++e) {
      if (current >> e & 1) continue;
      const Subset candidate = current | (Subset{1} << e);
      next = kind_ == RingKind::kPermutahedral ? candidate : matroid_->closure(candidate);
    }
    current = next;
    flag = *flag.times(current);
  }
  const Coordinates c = normal_form(flag);
  if (c.size() != 1 || (c[0].second != 1 && c[0].second != -1))
    fail(ErrorKind::kInvalidInput, "top-degree normal form of a maximal flag is not a unit");
  std::lock_guard lock(mutex_);
  top_degree_value_ = c[0].second;  // 1 / (+-1)
  return *top_degree_value_;
}

bool ChowRing::same_as(const ChowRing& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || n_ != other.n_) return false;
  return kind_ == RingKind::kPermutahedral || *matroid_ == *other.matroid_;
}

std::size_t ChowRing::cached_normal_forms() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void ChowRing::clear_cache() const {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

// ---------------------------------------------------------------------------------------------
// ChowElement

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a->same_as(*b)) fail(ErrorKind::kContextMismatch, "elements live in different Chow rings");
}

}  // namespace

ChowElement ChowElement::unit(RingPtr ring) {
  ChowElement e(std::move(ring));
  e.add_term(ChainMonomial{}, 1);
  return e;
}

ChowElement ChowElement::generator(RingPtr ring, Subset s) {
  if (!ring->is_generator(s)) fail(ErrorKind::kContextMismatch, "x" + format_subset(s) + " is not a generator");
  ChowElement e(std::move(ring));
  e.add_term(ChainMonomial::single(s), 1);
  return e;
}

ChowElement ChowElement::from_coordinates(RingPtr ring, int degree, const Coordinates& coords) {
  ChowElement e(ring);
  if (coords.empty()) return e;
  const auto& basis = ring->fy_basis(degree);
  for (const auto& [idx, c] : coords) e.add_term(basis.monomials[idx], c);
  return e;
}

std::optional<int> ChowElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) fail(ErrorKind::kInvalidInput, "element is not homogeneous");
  return d;
}

bool ChowElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Integer ChowElement::coefficient(const ChainMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ChowElement::add_term(const ChainMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ChowElement& ChowElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ChowElement ChowElement::operator-() const {
  ChowElement out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

ChowElement ChowElement::relabeled(const Permutation& sigma) const {
  ChowElement out(ring_);
  for (const auto& [m, c] : terms_) out.add_term(m.relabeled(sigma), c);
  return out;
}

ChowElement multiply(const ChowElement& a, const ChowElement& b) {
  require_same_ring(a.ring(), b.ring());
  ChowElement out(a.ring());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto m = ma.times(mb)) out.add_term(*m, ca * cb);
  return out;
}

ChowElement power(const ChowElement& a, int exponent) {
  if (exponent < 0) fail(ErrorKind::kOutOfRange, "negative power");
  ChowElement out = ChowElement::unit(a.ring());
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

std::vector<Integer> coordinates(const ChowElement& a, int degree) {
  const auto& ring = *a.ring();
  if (degree < 0) fail(ErrorKind::kOutOfRange, "negative degree");
  if (degree > ring.top_degree()) {
    for (const auto& [m, c] : a.terms())
      if (m.degree() != degree) fail(ErrorKind::kInvalidInput, "element is not homogeneous of the requested degree");
    return {};
  }
  std::vector<Integer> out(ring.fy_basis(degree).size());
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != degree) fail(ErrorKind::kInvalidInput, "element is not homogeneous of the requested degree");
    for (const auto& [idx, v] : ring.normal_form(m)) out[idx] += c * v;
  }
  return out;
}

ChowElement normal_form(const ChowElement& a) {
  const auto d = a.degree();
  if (!d || *d > a.ring()->top_degree()) return ChowElement(a.ring());
  const auto dense = coordinates(a, *d);
  Coordinates sparse;
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) sparse.emplace_back(i, dense[i]);
  return ChowElement::from_coordinates(a.ring(), *d, sparse);
}

Integer degree_map(const ChowElement& a) {
  const auto& ring = *a.ring();
  const auto d = a.degree();
  if (!d) return 0;
  if (*d != ring.top_degree())
    fail(ErrorKind::kOutOfRange, "degree_map needs an element of degree " + std::to_string(ring.top_degree()));
  const auto c = coordinates(a, *d);
  return c.at(0) * ring.top_monomial_degree();
}

ChowElement pullback(const ChowElement& a, const RingPtr& matroid_ring) {
  if (matroid_ring->kind() != RingKind::kMatroid || a.ring()->kind() != RingKind::kPermutahedral)
    fail(ErrorKind::kContextMismatch, "pullback maps the permutahedral ring to a matroid ring");
  if (a.ring()->size() != matroid_ring->size()) fail(ErrorKind::kContextMismatch, "ground sets differ");
  ChowElement out(matroid_ring);
  for (const auto& [m, c] : a.terms()) {
    bool flats_only = true;
    for (int i = 0; i < m.length() && flats_only; ++i) flats_only = matroid_ring->is_generator(m.set(i));
    if (flats_only) out.add_term(m, c);
  }
  return out;
}

std::size_t graded_rank(std::span<const ChowElement> elements, int degree) {
  if (elements.empty()) return 0;
  std::vector<IntegerRow> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) {
    require_same_ring(elements.front().ring(), e.ring());
    rows.push_back(coordinates(e, degree));
  }
  if (rows.front().empty()) return 0;
  return bareiss_rank(std::move(rows));
}

// ---------------------------------------------------------------------------------------------
// MultiplicationMap

MultiplicationMap::MultiplicationMap(const ChowElement& factor, int source_degree)
    : source_degree_(source_degree) {
  const auto& ring = *factor.ring();
  const auto e = factor.degree();
  target_degree_ = source_degree + e.value_or(0);
  const auto& source = ring.fy_basis(source_degree);
  target_dim_ = target_degree_ <= ring.top_degree() ? ring.fy_basis(target_degree_).size() : 0;
  columns_.resize(source.size());
  if (!e || target_dim_ == 0) return;
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::vector<std::pair<std::uint32_t, Integer>> collected;
    for (const auto& [m, c] : factor.terms()) {
      auto prod = source.monomials[j].times(m);
      if (!prod) continue;
      for (auto& [idx, v] : ring.normal_form(*prod)) collected.emplace_back(idx, c * v);
    }
    std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Coordinates& col = columns_[j];
    for (auto& [idx, v] : collected) {
      if (!col.empty() && col.back().first == idx) {
        col.back().second += v;
      } else {
        if (!col.empty() && col.back().second == 0) col.pop_back();
        col.emplace_back(idx, std::move(v));
      }
    }
    if (!col.empty() && col.back().second == 0) col.pop_back();
  }
}

std::vector<Integer> MultiplicationMap::apply(std::span<const Integer> source) const {
  if (source.size() != columns_.size()) fail(ErrorKind::kInvalidInput, "MultiplicationMap: wrong source dimension");
  std::vector<Integer> out(target_dim_);
  for (std::size_t j = 0; j < source.size(); ++j) {
    if (source[j] == 0) continue;
    for (const auto& [idx, v] : columns_[j]) out[idx] += source[j] * v;
  }
  return out;
}

}  // namespace chowrn
