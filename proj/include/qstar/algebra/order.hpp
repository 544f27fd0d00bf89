#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qstar/algebra/polynomial.hpp"

namespace qstar::algebra {

enum class Direction { LargerIsGreater, LargerIsSmaller };

/// Compare by total degree, larger degree greater.
struct TotalDegree {};

/// Compare by sum of w(v) * exponent(v); `weights` is indexed by canonical
/// variable number.
struct WeightVector {
  std::vector<std::int64_t> weights;
  Direction direction = Direction::LargerIsGreater;
};

/// Compare by the total degree in a subset of the variables.
struct RestrictedDegree {
  std::vector<Variable> variables;
  Direction direction = Direction::LargerIsGreater;
};

/// Lexicographic comparison on the listed variables only, most significant
/// first; a larger exponent is greater. Unlisted variables are ignored.
struct RestrictedLex {
  std::vector<Variable> priority;
};

using OrderLayer = std::variant<TotalDegree, WeightVector, RestrictedDegree, RestrictedLex>;

/// A monomial order built as a stack of refining layers. Monomials that tie
/// on every layer are compared reverse-lexicographically on the canonical
/// variable numbering (the last differing variable decides; smaller exponent
/// is greater).
class MonomialOrder {
 public:
  MonomialOrder(int n, std::vector<OrderLayer> layers, std::string name = "custom");

  /// Graded reverse lexicographic order on S_n.
  static MonomialOrder grevlex(int n);

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<OrderLayer>& layers() const { return layers_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Index into p.terms() of the leading term; p must be nonzero.
  std::size_t leading_index(const Polynomial& p) const;
  const Term& leading_term(const Polynomial& p) const { return p.terms()[leading_index(p)]; }
  const Monomial& leading_monomial(const Polynomial& p) const {
    return leading_term(p).monomial;
  }

  /// Terms of p sorted descending under this order.
  std::vector<Term> sorted_terms(const Polynomial& p) const;

 private:
  struct Row {
    std::vector<std::pair<int, std::int64_t>> entries;
  };

  int n_;
  std::vector<OrderLayer> layers_;
  std::string name_;
  std::vector<Row> rows_;
};

}  // namespace qstar::algebra
