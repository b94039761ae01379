#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chowrn/matroid.hpp"

namespace chowrn {

// Named matroids: "uniform:R:N", "mk4", "m1".."m4", "fano_minus". Throws kInvalidInput on unknown names.
Matroid builtin(const std::string& name);
std::vector<std::string> builtin_names();

// The non-Fano matroid: rank 3 on [7]; dependent triples are six of the seven Fano lines
// {1,2,3} {1,4,5} {1,6,7} {2,4,6} {2,5,7} {3,4,7}; the seventh line {3,5,6} is a basis.
Matroid fano_minus();

struct Table1Row {
  std::string label;  // ASCII, comma-free, e.g. "U01+U13", "MK4", "F7-"
  Matroid matroid;
  std::vector<std::size_t> hilbert;
};

// Every row of the Hilbert-function table with its reference values. U_{r,n} rows appear once per r.
const std::vector<Table1Row>& table1();

// All matroids on [n] up to isomorphism, sorted by rank and then by canonical basis list.
std::vector<Matroid> all_matroids(int n);

// The test corpus: all matroids on 1..5 elements up to isomorphism, then M(K4).
std::vector<Matroid> corpus();

}  // namespace chowrn
