#include "qstar/algebra/monomial.hpp"

#include <algorithm>
#include <string_view>

#include "qstar/error.hpp"

namespace qstar::algebra {

void check_ring_size(int n) {
  if (n < 1 || n > kMaxN) {
    throw Error("ring size n=" + std::to_string(n) + " outside supported range 1.." +
                std::to_string(kMaxN));
  }
}

Variable Variable::y(int i, int n) {
  check_ring_size(n);
  if (i < 1 || i > n) throw Error("y index " + std::to_string(i) + " out of range");
  return Variable(VarKind::Y, i, 0, n);
}

Variable Variable::x(int i, int j, int n) {
  check_ring_size(n);
  if (i < 1 || j > n || i >= j) {
    throw Error("x[" + std::to_string(i) + "," + std::to_string(j) +
                "] is not a canonical Plucker variable for n=" + std::to_string(n));
  }
  return Variable(VarKind::X, i, j, n);
}

SignedVariable signed_x(int a, int b, int n) {
  if (a == b) throw Error("x[" + std::to_string(a) + "," + std::to_string(a) + "] is zero");
  if (a < b) return {Variable::x(a, b, n), 1};
  return {Variable::x(b, a, n), -1};
}

int Variable::index() const {
  if (kind_ == VarKind::Y) return x_variable_count(n_) + a_ - 1;
  return (a_ - 1) * n_ - (a_ - 1) * a_ / 2 + (b_ - a_ - 1);
}

Variable Variable::from_index(int index, int n) {
  check_ring_size(n);
  if (index < 0 || index >= algebra::variable_count(n)) {
    throw Error("variable index " + std::to_string(index) + " out of range");
  }
  const int nx = x_variable_count(n);
  if (index >= nx) return Variable::y(index - nx + 1, n);
  for (int i = 1; i < n; ++i) {
    const int row = n - i;
    if (index < row) return Variable::x(i, i + 1 + index, n);
    index -= row;
  }
  throw Error("unreachable variable index");
}

std::string Variable::to_string() const {
  if (kind_ == VarKind::Y) return "y[" + std::to_string(a_) + "]";
  return "x[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
}

Monomial::Monomial(int n) {
  check_ring_size(n);
  n_ = static_cast<std::uint8_t>(n);
}

Monomial Monomial::of(const Variable& v, int power) {
  Monomial m(v.n());
  if (power < 0 || power > 255) throw Error("exponent out of range");
  m.exp_[static_cast<std::size_t>(v.index())] = static_cast<std::uint8_t>(power);
  (v.kind() == VarKind::X ? m.xdeg_ : m.ydeg_) = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::from_exponents(int n, const std::vector<int>& exponents) {
  Monomial m(n);
  if (static_cast<int>(exponents.size()) != algebra::variable_count(n)) {
    throw Error("exponent vector has wrong length");
  }
  const int nx = x_variable_count(n);
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i) {
    const int e = exponents[static_cast<std::size_t>(i)];
    if (e < 0 || e > 255) throw Error("exponent out of range");
    m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    (i < nx ? m.xdeg_ : m.ydeg_) += static_cast<std::uint16_t>(e);
  }
  return m;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < variable_count(); ++i) {
    if (exp_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
  }
  return out;
}

void Monomial::check_same_ring(const Monomial& other) const {
  if (n_ != other.n_) {
    throw Error("monomials from different rings (n=" + std::to_string(n_) + " vs n=" +
                std::to_string(other.n_) + ")");
  }
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ring(other);
  if (xdeg_ > other.xdeg_ || ydeg_ > other.ydeg_) return false;
  for (int i = 0; i < variable_count(); ++i) {
    if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_ring(other);
  for (int i = 0; i < variable_count(); ++i) {
    if (exp_[static_cast<std::size_t>(i)] != 0 && other.exp_[static_cast<std::size_t>(i)] != 0) {
      return false;
    }
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e <= 1; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_ring(other);
  Monomial out = *this;
  for (int i = 0; i < variable_count(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    const int e = exp_[k] + other.exp_[k];
    if (e > 255) throw Error("exponent overflow in monomial product");
    out.exp_[k] = static_cast<std::uint8_t>(e);
  }
  out.xdeg_ = static_cast<std::uint16_t>(xdeg_ + other.xdeg_);
  out.ydeg_ = static_cast<std::uint16_t>(ydeg_ + other.ydeg_);
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial division is not exact");
  Monomial out = *this;
  for (int i = 0; i < variable_count(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.exp_[k] = static_cast<std::uint8_t>(exp_[k] - divisor.exp_[k]);
  }
  out.xdeg_ = static_cast<std::uint16_t>(xdeg_ - divisor.xdeg_);
  out.ydeg_ = static_cast<std::uint16_t>(ydeg_ - divisor.ydeg_);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ring(other);
  Monomial out(n_);
  const int nx = x_variable_count(n_);
  for (int i = 0; i < variable_count(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.exp_[k] = std::max(exp_[k], other.exp_[k]);
    (i < nx ? out.xdeg_ : out.ydeg_) += out.exp_[k];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_ring(other);
  Monomial out(n_);
  const int nx = x_variable_count(n_);
  for (int i = 0; i < variable_count(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.exp_[k] = std::min(exp_[k], other.exp_[k]);
    (i < nx ? out.xdeg_ : out.ydeg_) += out.exp_[k];
  }
  return out;
}

std::strong_ordering Monomial::ambient_compare(const Monomial& other) const {
  check_same_ring(other);
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (int i = 0; i < variable_count(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (exp_[k] != other.exp_[k]) return exp_[k] <=> other.exp_[k];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::string_view bytes(reinterpret_cast<const char*>(exp_.data()),
                         static_cast<std::size_t>(variable_count()));
  return std::hash<std::string_view>{}(bytes) ^ (static_cast<std::size_t>(n_) << 56);
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < variable_count(); ++i) {
    const int e = exp_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += Variable::from_index(i, n_).to_string();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

void distribute(int first, int last, int degree, std::vector<int>& exps,
                std::vector<std::vector<int>>& out) {
  if (first == last) {
    if (degree == 0) out.push_back(exps);
    return;
  }
  if (first + 1 == last) {
    exps[static_cast<std::size_t>(first)] = degree;
    out.push_back(exps);
    exps[static_cast<std::size_t>(first)] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    exps[static_cast<std::size_t>(first)] = e;
    distribute(first + 1, last, degree - e, exps, out);
  }
  exps[static_cast<std::size_t>(first)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_bidegree(int n, int dx, int dy) {
  check_ring_size(n);
  if (dx < 0 || dy < 0) return {};
  const int nx = x_variable_count(n);
  const int nv = variable_count(n);
  std::vector<int> exps(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<int>> xs;
  std::vector<std::vector<int>> ys;
  distribute(0, nx, dx, exps, xs);
  distribute(nx, nv, dy, exps, ys);
  std::vector<Monomial> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& xe : xs) {
    for (const auto& ye : ys) {
      std::vector<int> e(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i) {
        const auto k = static_cast<std::size_t>(i);
        e[k] = i < nx ? xe[k] : ye[k];
      }
      out.push_back(Monomial::from_exponents(n, e));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.ambient_compare(b) > 0; });
  return out;
}

}  // namespace qstar::algebra
