#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qstar/algebra/polynomial.hpp"

namespace qstar::algebra {

/// Sparse rational vector as (index, value) pairs with strictly increasing
/// indices and no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally built row echelon form over Q, stored fraction-free: every
/// row is a primitive integer vector whose first entry (the pivot) is
/// positive. Elimination uses cross-multiplication followed by division by
/// the row content, so no rational arithmetic happens inside.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the row space; returns true when v was independent.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;

  /// Basis of the right kernel {x : r . x = 0 for every row r}, one vector
  /// per free column, scaled to primitive integers.
  std::vector<SparseVector> kernel() const;

  /// True when every stored row is orthogonal to v.
  bool annihilates(const SparseVector& v) const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

  static IntRow to_integer(const SparseVector& v);
  IntRow reduced(IntRow v) const;

  std::size_t columns_;
  std::map<std::size_t, IntRow> rows_;
};

}  // namespace qstar::algebra
