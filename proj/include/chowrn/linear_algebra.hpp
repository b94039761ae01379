#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chowrn/integer.hpp"

namespace chowrn {

using IntegerRow = std::vector<Integer>;

// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination. Rows may have any common length.
std::size_t bareiss_rank(std::vector<IntegerRow> rows);

// Incrementally grown row-echelon basis over Z. Rows are kept primitive (content 1).
// insert() keeps a vector only if it is independent of the rows already present, so the retained rows are
// the first independent vectors in insertion order.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  bool insert(std::span<const Integer> v);
  bool contains(std::span<const Integer> v) const;

 private:
  IntegerRow reduce(std::span<const Integer> v) const;

  std::size_t dimension_;
  std::vector<IntegerRow> rows_;        // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// Divides a row by the gcd of its entries, signed so the leading entry becomes positive; returns that divisor.
Integer make_primitive(IntegerRow& row);

}  // namespace chowrn
