#include "bloch/rogers.hpp"

#include <cmath>

#include "bloch/multiprecision.hpp"

namespace bloch {
namespace {

template <class Real>
Real reduce_into(Real re, Real period, Real lower) {
  // [lower, lower + period)
  using std::floor;
  Real r = re - period * floor((re - lower) / period);
  if (r >= lower + period) r -= period;
  if (r < lower) r += period;
  return r;
}

double canonical_real(double re) { return reduce_into(re, z2_period, -0.5 * z2_period - canonical_seam); }

struct DoubleOps {
  using real = double;
  using complex = cplx;
  static complex log(const CutPoint& p) { return principal_log(p); }
  static complex log1m(const CutPoint& p) { return log_one_minus(p); }
  static complex li2(const CutPoint& p) { return bloch::li2(p); }
  static real pi() { return bloch::pi; }
};

struct MpOps {
  using real = mp::real;
  using complex = mp::complex;
  static complex log(const CutPoint& p) { return mp::principal_log(p); }
  static complex log1m(const CutPoint& p) { return mp::log_one_minus(p); }
  static complex li2(const CutPoint& p) { return mp::li2(p); }
  static real pi() { return boost::math::constants::pi<real>(); }
};

template <class Ops>
typename Ops::complex l_bar(const FlattenedNumber& f) {
  using R = typename Ops::real;
  using C = typename Ops::complex;
  const R two_pi = 2 * Ops::pi();
  const C a = Ops::log(f.base()) + C(R(0), two_pi * R(f.p()));
  const C b = Ops::log1m(f.base()) + C(R(0), two_pi * R(f.q()));
  return Ops::li2(f.base()) + a * b / R(2) - C(Ops::pi() * Ops::pi() / R(6));
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

CmodZ2::CmodZ2(cplx v) : value_(canonical_real(v.real()), v.imag()) {}

double CmodZ2::magnitude() const noexcept {
  return std::hypot(wrapped_distance(value_.real(), z2_period), value_.imag());
}

CmodZ2 operator*(Index k, const CmodZ2& a) {
  return CmodZ2(static_cast<double>(k) * a.value_);
}

double wrapped_distance(double re, double period) noexcept {
  return std::fabs(re - period * std::nearbyint(re / period));
}

bool approx_equal(const CmodZ2& a, const CmodZ2& b, double tol) {
  return std::fabs(a.imag() - b.imag()) <= tol &&
         wrapped_distance(a.real() - b.real(), z2_period) <= tol;
}

cplx reduce_mod_transfer(const CmodZ2& v) {
  // (lower, lower + period] == -[-lower - period, -lower)
  const double lower = -0.5 * transfer_period + canonical_seam;
  const double r = -reduce_into(-v.real(), transfer_period, -lower - transfer_period);
  return {r + 0.0, v.imag()};
}

cplx rogers_l_bar(const FlattenedNumber& f, Precision precision) {
  if (precision == Precision::high) return mp::to_double(l_bar<MpOps>(f));
  return l_bar<DoubleOps>(f);
}

CmodZ2 rogers_l_hat(const FlattenedNumber& f, Precision precision) {
  const WeightedGenerator one{1, f};
  return rogers_l_hat_sum(std::span(&one, 1), precision);
}

CmodZ2 rogers_l_hat_sum(std::span<const WeightedGenerator> terms, Precision precision) {
  if (precision == Precision::high) {
    const mp::real pi = MpOps::pi();
    const mp::real period = 4 * pi * pi;
    mp::real re = 0;
    mp::real im = 0;
    for (const auto& t : terms) {
      const mp::complex v = l_bar<MpOps>(t.gen);
      re += mp::real(t.coeff) * reduce_into<mp::real>(v.real(), period, -period / 2);
      im += mp::real(t.coeff) * v.imag();
    }
    re = reduce_into<mp::real>(re, period, -period / 2 - mp::real(canonical_seam));
    return CmodZ2(cplx(static_cast<double>(re), static_cast<double>(im)));
  }
  CompensatedSum re;
  CompensatedSum im;
  for (const auto& t : terms) {
    const cplx v = l_bar<DoubleOps>(t.gen);
    re.add(static_cast<double>(t.coeff) * canonical_real(v.real()));
    im.add(static_cast<double>(t.coeff) * v.imag());
  }
  return CmodZ2(cplx(re.value(), im.value()));
}

}  // namespace bloch
