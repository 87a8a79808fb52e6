#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace rcorona {

namespace detail {

// Neumaier-compensated sum for floating point, plain sum otherwise.
template <class T>
class Accumulator {
 public:
  void add(const T& v) {
    if constexpr (std::is_floating_point_v<T>) {
      const T t = sum_ + v;
      if (std::abs(sum_) >= std::abs(v))
        comp_ += (sum_ - t) + v;
      else
        comp_ += (v - t) + sum_;
      sum_ = t;
    } else {
      sum_ += v;
    }
  }
  T value() const {
    if constexpr (std::is_floating_point_v<T>)
      return sum_ + comp_;
    else
      return sum_;
  }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace detail

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  /// c0 + c1 x
  static Polynomial linear(T c0, T c1) { return Polynomial({c0, c1}); }
  static Polynomial constant(T c0) { return Polynomial({c0}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }
  T leading() const { return c_.empty() ? T{} : c_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long long>(k)));
    return Polynomial(std::move(d));
  }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
      if constexpr (std::is_same_v<T, boost::rational<long long>>)
        out.push_back(boost::rational_cast<U>(c));
      else
        out.push_back(static_cast<U>(c));
    }
    return Polynomial<U>(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
      detail::Accumulator<T> acc;
      const std::size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
      const std::size_t hi = std::min(k, a.c_.size() - 1);
      for (std::size_t i = lo; i <= hi; ++i) acc.add(a.c_[i] * b.c_[k - i]);
      out[k] = acc.value();
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> out(p.c_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using Rational = boost::rational<long long>;
using RealPolynomial = Polynomial<double>;
using ExactPolynomial = Polynomial<Rational>;

/// Long division a = q*b + r with deg r < deg b. Remainder coefficients whose
/// magnitude falls below `zero_tol` times the largest coefficient of `a` are
/// dropped.
std::pair<RealPolynomial, RealPolynomial> divide(const RealPolynomial& a, const RealPolynomial& b,
                                                 double zero_tol = 0.0);

/// Sturm chain p, p', -rem(p, p'), ... terminated at the last nonzero member.
/// When p has repeated roots the last member is gcd(p, p') up to scale.
class SturmChain {
 public:
  explicit SturmChain(const RealPolynomial& p);

  const std::vector<RealPolynomial>& members() const noexcept { return chain_; }
  int sign_variations(double x) const;
  /// Distinct real roots in (a, b].
  int count(double a, double b) const { return sign_variations(a) - sign_variations(b); }

 private:
  std::vector<RealPolynomial> chain_;
};

struct RootWindow {
  double lo = -1.0;
  double hi = 3.0;
};

/// Real roots of a degree 1..4 polynomial in the closed window, repeated by
/// multiplicity and sorted. Uses Sturm isolation on the square-free part,
/// bisection, and a Newton polish; multiplicities come from the gcd with the
/// derivative. Roots outside the window are not reported.
std::vector<double> real_roots(const RealPolynomial& q, RootWindow window = {});

/// real_roots, but throws NumericError unless exactly deg(q) roots are found.
/// Used for factors whose roots are eigenvalues of a symmetric matrix.
std::vector<double> all_real_roots(const RealPolynomial& q, RootWindow window = {});

}  // namespace rcorona
