#include "qstar/algebra/order.hpp"

#include <algorithm>
#include <array>

#include "qstar/error.hpp"

namespace qstar::algebra {

namespace {

std::int64_t signed_weight(std::int64_t w, Direction d) {
  return d == Direction::LargerIsGreater ? w : -w;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

MonomialOrder::MonomialOrder(int n, std::vector<OrderLayer> layers, std::string name)
    : n_(n), layers_(std::move(layers)), name_(std::move(name)) {
  check_ring_size(n);
  const int nv = variable_count(n);
  auto check_var = [&](const Variable& v) {
    if (v.n() != n) throw Error("order layer mentions a variable from another ring");
  };
  for (const auto& layer : layers_) {
    std::visit(Overloaded{
                   [&](const TotalDegree&) {
                     Row row;
                     for (int i = 0; i < nv; ++i) row.entries.emplace_back(i, 1);
                     rows_.push_back(std::move(row));
                   },
                   [&](const WeightVector& w) {
                     if (static_cast<int>(w.weights.size()) != nv) {
                       throw Error("weight vector has wrong length");
                     }
                     Row row;
                     for (int i = 0; i < nv; ++i) {
                       const auto wi = w.weights[static_cast<std::size_t>(i)];
                       if (wi != 0) row.entries.emplace_back(i, signed_weight(wi, w.direction));
                     }
                     rows_.push_back(std::move(row));
                   },
                   [&](const RestrictedDegree& r) {
                     Row row;
                     for (const auto& v : r.variables) {
                       check_var(v);
                       row.entries.emplace_back(v.index(), signed_weight(1, r.direction));
                     }
                     rows_.push_back(std::move(row));
                   },
                   [&](const RestrictedLex& r) {
                     for (const auto& v : r.priority) {
                       check_var(v);
                       rows_.push_back(Row{{{v.index(), 1}}});
                     }
                   },
               },
               layer);
  }
}

MonomialOrder MonomialOrder::grevlex(int n) { return MonomialOrder(n, {TotalDegree{}}, "grevlex"); }

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.n() != n_ || b.n() != n_) {
    throw Error("monomial ring n=" + std::to_string(a.n() != n_ ? a.n() : b.n()) +
                " does not match order ring n=" + std::to_string(n_));
  }
  if (a == b) return std::strong_ordering::equal;
  const int nv = variable_count(n_);
  std::array<int, kMaxVariables> diff{};
  for (int i = 0; i < nv; ++i) {
    diff[static_cast<std::size_t>(i)] = a.exponent(i) - b.exponent(i);
  }
  for (const auto& row : rows_) {
    std::int64_t s = 0;
    for (const auto& [i, w] : row.entries) s += w * diff[static_cast<std::size_t>(i)];
    if (s != 0) return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  for (int i = nv - 1; i >= 0; --i) {
    const int d = diff[static_cast<std::size_t>(i)];
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialOrder::leading_index(const Polynomial& p) const {
  if (p.is_zero()) throw Error("zero polynomial has no leading term");
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (greater(p.terms()[i].monomial, p.terms()[best].monomial)) best = i;
  }
  return best;
}

std::vector<Term> MonomialOrder::sorted_terms(const Polynomial& p) const {
  std::vector<Term> out = p.terms();
  std::sort(out.begin(), out.end(),
            [this](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });
  return out;
}

}  // namespace qstar::algebra
