#include "qstar/algebra/linear.hpp"

#include <algorithm>

#include "qstar/error.hpp"

namespace qstar::algebra {

namespace {

using IntEntries = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntEntries& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [i, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [i, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

/// a * v - b * r, where a = r[pivot], b = v[pivot]; clears v at the pivot.
IntEntries eliminate(const IntEntries& v, const IntEntries& r, const mpz_class& a,
                     const mpz_class& b) {
  IntEntries out;
  out.reserve(v.size() + r.size());
  auto p = v.begin();
  auto q = r.begin();
  while (p != v.end() || q != r.end()) {
    if (q == r.end() || (p != v.end() && p->first < q->first)) {
      out.emplace_back(p->first, a * p->second);
      ++p;
    } else if (p == v.end() || q->first < p->first) {
      out.emplace_back(q->first, -b * q->second);
      ++q;
    } else {
      mpz_class c = a * p->second - b * q->second;
      if (c != 0) out.emplace_back(p->first, std::move(c));
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

IntegerEchelon::IntRow IntegerEchelon::to_integer(const SparseVector& v) {
  mpz_class l = 1;
  for (const auto& [i, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) {
    if (q == 0) continue;
    mpz_class num = q.get_num() * (l / q.get_den());
    out.emplace_back(i, std::move(num));
  }
  return out;
}

IntegerEchelon::IntRow IntegerEchelon::reduced(IntRow v) const {
  // Rows start at their pivot, so eliminating in increasing column order
  // never reintroduces an entry at an already-cleared pivot.
  std::size_t cursor = 0;
  while (cursor < v.size()) {
    const std::size_t col = v[cursor].first;
    auto it = rows_.find(col);
    if (it == rows_.end()) {
      ++cursor;
      continue;
    }
    const mpz_class b = v[cursor].second;
    v = eliminate(v, it->second, it->second.front().second, b);
    make_primitive(v);
    cursor = 0;
    while (cursor < v.size() && v[cursor].first <= col) ++cursor;
  }
  return v;
}

bool IntegerEchelon::insert(const SparseVector& v) {
  for (const auto& [i, q] : v) {
    if (i >= columns_) throw Error("vector index exceeds echelon width");
  }
  IntRow r = reduced(to_integer(v));
  if (r.empty()) return false;
  make_primitive(r);
  const std::size_t pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool IntegerEchelon::contains(const SparseVector& v) const {
  return reduced(to_integer(v)).empty();
}

bool IntegerEchelon::annihilates(const SparseVector& v) const {
  for (const auto& [pivot, row] : rows_) {
    Rational s = 0;
    auto p = row.begin();
    auto q = v.begin();
    while (p != row.end() && q != v.end()) {
      if (p->first < q->first) {
        ++p;
      } else if (q->first < p->first) {
        ++q;
      } else {
        s += Rational(p->second) * q->second;
        ++p;
        ++q;
      }
    }
    if (s != 0) return false;
  }
  return true;
}

std::vector<SparseVector> IntegerEchelon::kernel() const {
  // Back-substitute to reduced form: clear every pivot column from the rows
  // above it.
  std::map<std::size_t, IntRow> full = rows_;
  for (auto it = full.rbegin(); it != full.rend(); ++it) {
    const std::size_t pivot = it->first;
    const IntRow& prow = it->second;
    for (auto& [other_pivot, row] : full) {
      if (other_pivot >= pivot) break;
      auto pos = std::lower_bound(row.begin(), row.end(), pivot,
                                  [](const auto& e, std::size_t c) { return e.first < c; });
      if (pos == row.end() || pos->first != pivot) continue;
      const mpz_class b = pos->second;
      row = eliminate(row, prow, prow.front().second, b);
      make_primitive(row);
    }
  }

  std::vector<SparseVector> basis;
  for (std::size_t free_col = 0; free_col < columns_; ++free_col) {
    if (full.count(free_col) != 0) continue;
    // x_free = 1, x_pivot = -row[free] / row[pivot].
    SparseVector vec;
    for (const auto& [pivot, row] : full) {
      auto pos = std::lower_bound(row.begin(), row.end(), free_col,
                                  [](const auto& e, std::size_t c) { return e.first < c; });
      if (pos == row.end() || pos->first != free_col) continue;
      vec.emplace_back(pivot, Rational(-pos->second, row.front().second));
    }
    vec.emplace_back(free_col, Rational(1));
    std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    mpz_class l = 1;
    for (auto& [i, q] : vec) {
      q.canonicalize();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (auto& [i, q] : vec) q *= l;
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace qstar::algebra
