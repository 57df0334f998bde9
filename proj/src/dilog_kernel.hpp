#pragma once

// Precision-generic dilogarithm kernel shared by the double and 50-digit paths.
//
// Li2 is evaluated through the Bernoulli series in u = -log(1-w),
//   Li2(w) = u - u^2/4 + sum_{k>=1} B_{2k} u^{2k+1} / (2k+1)!,
// after mapping z to a w with |u| <= 1.3 via reflection (z -> 1-z) or
// inversion (z -> 1/z). The series converges for |u| < 2 pi.

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/log1p.hpp>
#include <boost/math/constants/constants.hpp>

#include <limits>
#include <vector>

namespace bloch::detail {

template <class Real>
constexpr int bernoulli_terms() {
  // |u|/(2 pi) <= 0.21, so each term gains ~1.36 digits.
  return std::numeric_limits<Real>::digits10 <= 17 ? 15 : 45;
}

template <class Real>
const std::vector<Real>& li2_series_coefficients() {
  static const std::vector<Real> coeffs = [] {
    std::vector<Real> c;
    for (int k = 1; k <= bernoulli_terms<Real>(); ++k) {
      c.push_back(boost::math::bernoulli_b2n<Real>(k) /
                  boost::math::factorial<Real>(static_cast<unsigned>(2 * k + 1)));
    }
    return c;
  }();
  return coeffs;
}

template <class Real, class Complex>
Complex li2_bernoulli_series(const Complex& u) {
  const auto& c = li2_series_coefficients<Real>();
  const Complex u2 = u * u;
  Complex acc(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * u2 + Complex(*it);
  return u * (Complex(Real(1)) - u / Real(4) + u2 * acc);
}

// log(1 - z), keeping relative accuracy when |z| is small.
template <class Real, class Complex>
Complex log_one_minus_small(const Complex& z) {
  using std::atan2;
  using std::log;
  const Real x = -z.real();
  const Real y = -z.imag();
  if (x * x + y * y > Real(0.25)) return log(Complex(Real(1)) - z);
  return Complex(boost::math::log1p(x * (2 + x) + y * y) / 2, atan2(y, 1 + x));
}

// Principal Li2 for z off the cut [1,inf). On (-inf,0] the result is the
// (continuous) real value; on (1,inf) only the real part is meaningful.
template <class Real, class Complex>
Complex li2_principal(const Complex& z) {
  using std::log;
  const Real pi2_6 = boost::math::constants::pi_sqr<Real>() / 6;
  const Real rz = z.real();
  const Real iz = z.imag();
  if (rz == 0 && iz == 0) return Complex(Real(0));
  const Real nz = rz * rz + iz * iz;
  const Complex one(Real(1));
  if (rz <= Real(0.5)) {
    if (nz <= Real(1)) return li2_bernoulli_series<Real>(Complex(-log_one_minus_small<Real>(z)));
    const Complex u = -log_one_minus_small<Real>(Complex(one / z));
    const Complex lz = log(-z);
    return -li2_bernoulli_series<Real>(u) - lz * lz / Real(2) - Complex(pi2_6);
  }
  if (nz <= 2 * rz) {
    // reflection: Li2(z) = -Li2(1-z) + pi^2/6 - log z log(1-z)
    const Complex u = -log(z);
    return -li2_bernoulli_series<Real>(u) + u * log(one - z) + Complex(pi2_6);
  }
  // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
  const Complex u = -log_one_minus_small<Real>(Complex(one / z));
  const Complex lz = log(-z);
  return -li2_bernoulli_series<Real>(u) - lz * lz / Real(2) - Complex(pi2_6);
}

enum class BoundaryKind { none, negative_axis, beyond_one };

struct CutData {
  double re;
  double im;
  BoundaryKind kind;
  int sign;  // +1 above, -1 below
};

template <class Real, class Complex>
Complex principal_log_on(const CutData& d) {
  using std::log;
  const Real pi = boost::math::constants::pi<Real>();
  switch (d.kind) {
    case BoundaryKind::negative_axis:
      return Complex(log(Real(-d.re)), d.sign * pi);
    case BoundaryKind::beyond_one:
      return Complex(log(Real(d.re)), Real(0));
    case BoundaryKind::none:
      break;
  }
  return log(Complex(Real(d.re), Real(d.im)));
}

template <class Real, class Complex>
Complex log_one_minus_on(const CutData& d) {
  using std::log;
  const Real pi = boost::math::constants::pi<Real>();
  switch (d.kind) {
    case BoundaryKind::negative_axis:
      return Complex(log(Real(1) - Real(d.re)), Real(0));
    case BoundaryKind::beyond_one:
      // 1 - (x +- 0i) = (1-x) -+ 0i
      return Complex(log(Real(d.re) - Real(1)), -d.sign * pi);
    case BoundaryKind::none:
      break;
  }
  return log_one_minus_small<Real>(Complex(Real(d.re), Real(d.im)));
}

template <class Real, class Complex>
Complex li2_on(const CutData& d) {
  using std::log;
  const Real pi = boost::math::constants::pi<Real>();
  switch (d.kind) {
    case BoundaryKind::negative_axis:
      return Complex(li2_principal<Real>(Complex(Real(d.re), Real(0))).real(), Real(0));
    case BoundaryKind::beyond_one: {
      const Real x(d.re);
      const Real re = li2_principal<Real>(Complex(x, Real(0))).real();
      return Complex(re, d.sign * pi * log(x));
    }
    case BoundaryKind::none:
      break;
  }
  return li2_principal<Real>(Complex(Real(d.re), Real(d.im)));
}

}  // namespace bloch::detail
