#include "chowrn/linear_algebra.hpp"

#include <algorithm>

#include "chowrn/error.hpp"

namespace chowrn {

std::size_t bareiss_rank(std::vector<IntegerRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) fail(ErrorKind::kInvalidInput, "bareiss_rank: ragged matrix");

  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Integer& p = rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer factor = rows[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        rows[r][k] = (p * rows[r][k] - factor * rows[rank][k]) / previous;  // exact by Sylvester's identity
      }
      rows[r][c] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

Integer make_primitive(IntegerRow& row) {
  Integer g = 0;
  const Integer* lead = nullptr;
  for (const auto& v : row) {
    if (v == 0) continue;
    if (!lead) lead = &v;
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (!lead) return 0;
  if (*lead < 0) g = -g;
  if (g != 1)
    for (auto& v : row) v /= g;
  return g;
}

IntegerRow IntegerEchelon::reduce(std::span<const Integer> v) const {
  if (v.size() != dimension_) fail(ErrorKind::kInvalidInput, "IntegerEchelon: vector has wrong dimension");
  IntegerRow w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (w[c] == 0) continue;
    const Integer a = rows_[i][c];
    const Integer b = w[c];
    // Entries left of the pivot still need the scale factor a.
    for (std::size_t k = 0; k < c; ++k)
      if (w[k] != 0) w[k] *= a;
    for (std::size_t k = c; k < dimension_; ++k)
      if (w[k] != 0 || rows_[i][k] != 0) w[k] = a * w[k] - b * rows_[i][k];
    make_primitive(w);
  }
  return w;
}

bool IntegerEchelon::insert(std::span<const Integer> v) {
  IntegerRow w = reduce(v);
  auto lead = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(w));
  return true;
}

bool IntegerEchelon::contains(std::span<const Integer> v) const {
  IntegerRow w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace chowrn
