#include "chowrn/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

#include "chowrn/error.hpp"

namespace chowrn {

namespace {

std::atomic<int> g_max_ground_set{12};

void check_size(int n) {
  if (n < 1) fail(ErrorKind::kInvalidInput, "ground set must have at least one element");
  if (n > max_ground_set())
    fail(ErrorKind::kSizeCap, "ground set of size " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(max_ground_set()));
}

// Checks normalization, unit increase and submodularity (monotonicity follows from unit increase).
void validate_rank_axioms(int n, const std::vector<std::uint8_t>& ranks) {
  const Subset full = full_set(n);
  if (ranks[0] != 0) fail(ErrorKind::kInvalidInput, "rank of the empty set must be 0");
  for (Subset s = 0; s <= full; ++s) {
    for (int e = 0; e < n; ++e) {
      const Subset bit = Subset{1} << e;
      if (s & bit) continue;
      const int d = ranks[s | bit] - ranks[s];
      if (d != 0 && d != 1) fail(ErrorKind::kInvalidInput, "rank increase not in {0,1} at " + format_subset(s));
    }
  }
  // Local submodularity r(S+a) + r(S+b) >= r(S+a+b) + r(S) is equivalent to full submodularity.
  for (Subset s = 0; s <= full; ++s) {
    for (int a = 0; a < n; ++a) {
      const Subset ba = Subset{1} << a;
      if (s & ba) continue;
      for (int b = a + 1; b < n; ++b) {
        const Subset bb = Subset{1} << b;
        if (s & bb) continue;
        if (ranks[s | ba] + ranks[s | bb] < ranks[s | ba | bb] + ranks[s])
          fail(ErrorKind::kInvalidInput, "rank function is not submodular at " + format_subset(s));
      }
    }
  }
}

}  // namespace

int max_ground_set() { return g_max_ground_set.load(); }

void set_max_ground_set(int n) {
  if (n < 1 || n > 24) fail(ErrorKind::kOutOfRange, "ground-set cap must lie in 1..24");
  g_max_ground_set.store(n);
}

Subset subset_from_elements(std::span<const int> elements, int n) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > n) fail(ErrorKind::kInvalidInput, "element " + std::to_string(e) + " outside [1.." + std::to_string(n) + "]");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int e = 0; s; ++e, s >>= 1)
    if (s & 1) out.push_back(e + 1);
  return out;
}

std::string format_subset(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

Subset permute(const Permutation& sigma, Subset s) {
  Subset out = 0;
  for (int e = 0; s; ++e, s >>= 1)
    if (s & 1) out |= Subset{1} << sigma[e];
  return out;
}

Matroid::Matroid(int n, std::vector<std::uint8_t> ranks, std::string label)
    : n_(n), ranks_(std::move(ranks)), label_(std::move(label)) {}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> ranks, std::string label) {
  check_size(n);
  if (ranks.size() != (std::size_t{1} << n)) fail(ErrorKind::kInvalidInput, "rank table has wrong length");
  validate_rank_axioms(n, ranks);
  return Matroid(n, std::move(ranks), std::move(label));
}

Matroid Matroid::uniform(int r, int n) {
  check_size(n);
  if (r < 0 || r > n) fail(ErrorKind::kInvalidInput, "uniform matroid needs 0 <= r <= n");
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = static_cast<std::uint8_t>(std::min(cardinality(s), r));
  return Matroid(n, std::move(ranks), "U_{" + std::to_string(r) + "," + std::to_string(n) + "}");
}

Matroid Matroid::from_bases(int n, std::span<const Subset> bases) {
  check_size(n);
  if (bases.empty()) fail(ErrorKind::kInvalidInput, "a matroid needs at least one basis");
  const Subset full = full_set(n);
  const int r = cardinality(bases.front());
  std::set<Subset> basis_set;
  for (Subset b : bases) {
    if (b & ~full) fail(ErrorKind::kInvalidInput, "basis " + format_subset(b) + " leaves the ground set");
    if (cardinality(b) != r) fail(ErrorKind::kInvalidInput, "bases must all have the same cardinality");
    basis_set.insert(b);
  }
  // Basis exchange: for B1, B2 and x in B1\B2 there is y in B2\B1 with B1-x+y a basis.
  for (Subset b1 : basis_set) {
    for (Subset b2 : basis_set) {
      for (Subset xs = b1 & ~b2; xs; xs &= xs - 1) {
        const Subset x = xs & -xs;
        bool found = false;
        for (Subset ys = b2 & ~b1; ys && !found; ys &= ys - 1) {
          const Subset y = ys & -ys;
          found = basis_set.count((b1 & ~x) | y) != 0;
        }
        if (!found)
          fail(ErrorKind::kInvalidInput,
               "basis exchange fails for " + format_subset(b1) + " and " + format_subset(b2));
      }
    }
  }
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Subset s = 0; s <= full; ++s) {
    int best = 0;
    for (Subset b : basis_set) best = std::max(best, cardinality(s & b));
    ranks[s] = static_cast<std::uint8_t>(best);
  }
  validate_rank_axioms(n, ranks);
  return Matroid(n, std::move(ranks), "bases(n=" + std::to_string(n) + ")");
}

Matroid Matroid::graphic(int vertices, std::span<const std::pair<int, int>> edges) {
  const int n = static_cast<int>(edges.size());
  check_size(n);
  if (vertices < 1) fail(ErrorKind::kInvalidInput, "graph needs at least one vertex");
  for (auto [u, v] : edges)
    if (u < 1 || u > vertices || v < 1 || v > vertices)
      fail(ErrorKind::kInvalidInput, "edge endpoint out of range 1.." + std::to_string(vertices));
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset s = 0; s < ranks.size(); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    int merges = 0;
    for (int e = 0; e < n; ++e) {
      if (!(s >> e & 1)) continue;
      const int a = find(edges[e].first - 1), b = find(edges[e].second - 1);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
    ranks[s] = static_cast<std::uint8_t>(merges);
  }
  return Matroid(n, std::move(ranks), "graphic(v=" + std::to_string(vertices) + ")");
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.n_ + b.n_;
  check_size(n);
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  const Subset low = full_set(a.n_);
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = static_cast<std::uint8_t>(a.ranks_[s & low] + b.ranks_[s >> a.n_]);
  return Matroid(n, std::move(ranks), a.label_ + " + " + b.label_);
}

Subset Matroid::closure(Subset s) const {
  Subset out = s;
  const int rs = ranks_[s];
  for (int e = 0; e < n_; ++e) {
    const Subset bit = Subset{1} << e;
    if (!(s & bit) && ranks_[s | bit] == rs) out |= bit;
  }
  return out;
}

std::vector<std::vector<Subset>> Matroid::flats_by_rank() const {
  std::vector<std::vector<Subset>> out(rank() + 1);
  for (Subset s = 0; s <= ground(); ++s)
    if (is_flat(s)) out[ranks_[s]].push_back(s);
  return out;
}

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  for (const auto& level : flats_by_rank()) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  for (Subset s = 1; s <= ground(); ++s) {
    if (nullity(s) != 1) continue;
    // A circuit has nullity 1 and becomes independent after removing any one element.
    bool minimal = true;
    for (Subset es = s; es && minimal; es &= es - 1) minimal = nullity(s & ~(es & -es)) == 0;
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Subset> Matroid::bases() const {
  std::vector<Subset> out;
  for (Subset s = 0; s <= ground(); ++s)
    if (cardinality(s) == rank() && ranks_[s] == rank()) out.push_back(s);
  return out;
}

int Matroid::higgs_rank(int i, Subset s) const {
  if (i < 0 || i > n_) fail(ErrorKind::kOutOfRange, "Higgs lift index must lie in 0..n");
  const int r = rank();
  if (i <= r) return std::min(i, static_cast<int>(ranks_[s]));
  return std::min(cardinality(s), ranks_[s] + i - r);
}

Matroid Matroid::higgs_lift(int i) const {
  std::vector<std::uint8_t> ranks(ranks_.size());
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = static_cast<std::uint8_t>(higgs_rank(i, s));
  return Matroid(n_, std::move(ranks), label_ + " lift " + std::to_string(i));
}

bool Matroid::is_free_plus_loops() const {
  // Every element is a loop or a coloop iff rank is additive over singletons.
  int singleton_total = 0;
  for (int e = 0; e < n_; ++e) singleton_total += ranks_[Subset{1} << e];
  return singleton_total == rank();
}

std::vector<Permutation> Matroid::automorphisms() const {
  if (n_ > 8) fail(ErrorKind::kSizeCap, "automorphism search is limited to n <= 8");
  std::vector<Permutation> out;
  Permutation sigma(n_, -1);
  std::vector<bool> used(n_, false);
  const Subset full = ground();

  // Extend sigma one element at a time, pruning on singleton and pair ranks.
  auto extend = [&](auto&& self, int e) -> void {
    if (e == n_) {
      for (Subset s = 0; s <= full; ++s)
        if (ranks_[permute(sigma, s)] != ranks_[s]) return;
      out.push_back(sigma);
      return;
    }
    const Subset be = Subset{1} << e;
    for (int img = 0; img < n_; ++img) {
      if (used[img]) continue;
      const Subset bi = Subset{1} << img;
      if (ranks_[bi] != ranks_[be]) continue;
      bool ok = true;
      for (int f = 0; f < e && ok; ++f)
        ok = ranks_[bi | (Subset{1} << sigma[f])] == ranks_[be | (Subset{1} << f)];
      if (!ok) continue;
      sigma[e] = img;
      used[img] = true;
      self(self, e + 1);
      used[img] = false;
    }
    sigma[e] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace chowrn
