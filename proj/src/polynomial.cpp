#include "rcorona/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rcorona/error.hpp"

namespace rcorona {

namespace {

// Remainders below this fraction of the dividend's scale are treated as an
// exact zero when building Sturm chains; this is what detects repeated roots.
constexpr double kChainZeroTol = 1e-10;

// Roots closer than this are taken as the same root when matching against gcd(p, p').
constexpr double kMultiplicityMatchTol = 1e-6;

double max_abs_coefficient(const RealPolynomial& p) {
  double m = 0.0;
  for (double c : p.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

RealPolynomial normalized(const RealPolynomial& p) {
  const double s = max_abs_coefficient(p);
  return s == 0.0 ? p : (1.0 / s) * p;
}

// Roots in (lo, hi] of a square-free polynomial, each simple.
class SimpleRootFinder {
 public:
  explicit SimpleRootFinder(const RealPolynomial& s) : poly_(s), chain_(s) {}

  std::vector<double> find(double lo, double hi) {
    std::vector<double> out;
    isolate(lo, hi, chain_.sign_variations(lo), chain_.sign_variations(hi), 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void isolate(double a, double b, int va, int vb, int depth, std::vector<double>& out) const {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      out.push_back(refine(a, b));
      return;
    }
    const double mid = 0.5 * (a + b);
    if (depth > 200 || mid <= a || mid >= b) {
      // numerically inseparable; cannot happen for a square-free input of this size
      for (int k = 0; k < count; ++k) out.push_back(mid);
      return;
    }
    const int vm = chain_.sign_variations(mid);
    isolate(a, mid, va, vm, depth + 1, out);
    isolate(mid, b, vm, vb, depth + 1, out);
  }

  // Exactly one root in (a, b]; halve by Sturm counts, then polish with Newton.
  double refine(double a, double b) const {
    if (poly_(b) == 0.0) return b;
    int va = chain_.sign_variations(a);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b || b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b)))
        break;
      const int vm = chain_.sign_variations(mid);
      if (va - vm >= 1) {
        b = mid;
      } else {
        a = mid;
        va = vm;
      }
    }
    double x = 0.5 * (a + b);
    const auto deriv = poly_.derivative();
    const double width = b - a;
    for (int it = 0; it < 3; ++it) {
      const double fx = poly_(x);
      const double dfx = deriv(x);
      if (fx == 0.0 || dfx == 0.0) break;
      const double next = x - fx / dfx;
      if (std::abs(next - x) > width + 1e-15 || std::abs(poly_(next)) > std::abs(fx)) break;
      x = next;
    }
    return x;
  }

  RealPolynomial poly_;
  SturmChain chain_;
};

}  // namespace

std::pair<RealPolynomial, RealPolynomial> divide(const RealPolynomial& a, const RealPolynomial& b, double zero_tol) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RealPolynomial{}, a};
  std::vector<double> rem(a.coefficients());
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<double> quot(rem.size() - db, 0.0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const double f = rem[k] / bc[db];
    quot[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= f * bc[i];
    rem[k] = 0.0;
  }
  rem.resize(db);
  const double cutoff = zero_tol * max_abs_coefficient(a);
  for (auto& c : rem)
    if (std::abs(c) <= cutoff) c = 0.0;
  return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

SturmChain::SturmChain(const RealPolynomial& p) {
  if (p.is_zero()) throw InputError("Sturm chain of the zero polynomial");
  chain_.push_back(normalized(p));
  auto d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(normalized(d));
  while (chain_.back().degree() > 0) {
    auto rem = divide(chain_[chain_.size() - 2], chain_.back(), kChainZeroTol).second;
    if (rem.is_zero()) break;
    chain_.push_back(normalized(-1.0 * rem));
  }
}

int SturmChain::sign_variations(double x) const {
  int variations = 0;
  int last = 0;
  for (const auto& member : chain_) {
    const double v = member(x);
    const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++variations;
    last = sign;
  }
  return variations;
}

std::vector<double> real_roots(const RealPolynomial& q, RootWindow window) {
  if (q.degree() < 1 || q.degree() > 4)
    throw InputError("real_roots: degree must be 1..4, got " + std::to_string(q.degree()));
  const double lo = window.lo - 1e-9 * (1.0 + std::abs(window.lo));
  const double hi = window.hi + 1e-9 * (1.0 + std::abs(window.hi));

  const auto p = normalized(q);
  const SturmChain chain(p);
  const auto& gcd = chain.members().back();
  const bool repeated = chain.members().size() > 1 && gcd.degree() >= 1;
  const auto square_free = repeated ? divide(p, gcd).first : p;

  auto distinct = SimpleRootFinder(square_free).find(lo, hi);
  if (!repeated) return distinct;

  // a root of multiplicity k in p has multiplicity k-1 in gcd(p, p')
  const auto inner = real_roots(gcd, window);
  std::vector<double> out;
  for (double x : distinct) {
    const auto extra = std::count_if(inner.begin(), inner.end(),
                                     [&](double y) { return std::abs(y - x) <= kMultiplicityMatchTol; });
    out.insert(out.end(), static_cast<std::size_t>(extra) + 1, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> all_real_roots(const RealPolynomial& q, RootWindow window) {
  auto roots = real_roots(q, window);
  if (static_cast<int>(roots.size()) != q.degree())
    throw NumericError("expected " + std::to_string(q.degree()) + " real roots in [" + std::to_string(window.lo) +
                       ", " + std::to_string(window.hi) + "], found " + std::to_string(roots.size()));
  return roots;
}

}  // namespace rcorona
