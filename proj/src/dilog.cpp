#include "bloch/dilog.hpp"

#include <cmath>
#include <string>

#include "bloch/errors.hpp"
#include "bloch/multiprecision.hpp"
#include "dilog_kernel.hpp"

namespace bloch {
namespace {

detail::CutData cut_data(const CutPoint& p) {
  const cplx z = p.z();
  detail::CutData d{z.real(), z.imag(), detail::BoundaryKind::none, 0};
  if (p.on_boundary()) {
    d.kind = z.real() < 0 ? detail::BoundaryKind::negative_axis : detail::BoundaryKind::beyond_one;
    d.sign = p.side() == Side::above ? 1 : -1;
    d.im = 0.0;
  }
  return d;
}

std::string describe(cplx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

bool on_cut(cplx z) noexcept {
  return z.imag() == 0.0 && (z.real() <= 0.0 || z.real() >= 1.0);
}

CutPoint::CutPoint(cplx z, Side side) : z_(z.real() + 0.0, z.imag() + 0.0), side_(side) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("non-finite point " + describe(z));
  }
  if (z == cplx(0.0) || z == cplx(1.0)) {
    throw DomainError("point " + describe(z) + " is a branch point");
  }
  if (side == Side::interior) {
    if (on_cut(z)) {
      throw DomainError("point " + describe(z) + " lies on a cut; give side above or below");
    }
  } else {
    if (!on_cut(z)) {
      throw DomainError("side tag on " + describe(z) + " which is not on a cut");
    }
    z_ = cplx(z.real(), 0.0);
  }
}

CutPoint CutPoint::at(cplx z) { return CutPoint(z, on_cut(z) ? Side::above : Side::interior); }

CutPoint CutPoint::one_minus() const {
  const cplx w(1.0 - z_.real(), side_ == Side::interior ? -z_.imag() : 0.0);
  switch (side_) {
    case Side::above:
      return CutPoint(w, Side::below);
    case Side::below:
      return CutPoint(w, Side::above);
    case Side::interior:
      break;
  }
  return CutPoint(w, Side::interior);
}

double principal_arg(cplx z) noexcept {
  const double a = std::atan2(z.imag(), z.real());
  return a == -pi ? pi : a;
}

cplx principal_log(const CutPoint& p) {
  return detail::principal_log_on<double, cplx>(cut_data(p));
}

double arg(const CutPoint& p) { return principal_log(p).imag(); }

cplx log_one_minus(const CutPoint& p) {
  return detail::log_one_minus_on<double, cplx>(cut_data(p));
}

cplx li2(const CutPoint& p) { return detail::li2_on<double, cplx>(cut_data(p)); }

cplx li2(cplx z) {
  if (z == cplx(0.0)) return 0.0;
  if (z == cplx(1.0)) return pi_sq / 6;
  return li2(CutPoint::at(z));
}

double li2(double x) {
  if (x > 1.0) throw DomainError("real li2 requires x <= 1");
  if (x == 1.0) return pi_sq / 6;
  return detail::li2_principal<double>(cplx(x, 0.0)).real();
}

namespace mp {

complex principal_log(const CutPoint& p) {
  return detail::principal_log_on<real, complex>(cut_data(p));
}
complex log_one_minus(const CutPoint& p) {
  return detail::log_one_minus_on<real, complex>(cut_data(p));
}
complex li2(const CutPoint& p) { return detail::li2_on<real, complex>(cut_data(p)); }

}  // namespace mp

// --- continuation ---------------------------------------------------------

RogersContinuation::RogersContinuation(cplx start) : z_(start) {
  const CutPoint p(start, Side::interior);
  log_z_ = principal_log(p);
  log_1mz_ = log_one_minus(p);
  li2_ = bloch::li2(p);
}

cplx RogersContinuation::rogers() const noexcept {
  return li2_ + 0.5 * log_z_ * log_1mz_ - pi_sq / 6;
}

void RogersContinuation::advance(cplx next) {
  const cplx two_pi_i(0.0, 2 * pi);
  const cplx dz = next - z_;
  const cplx mid = z_ + 0.5 * dz;

  // Logs: unique sheet closest to the tracked value.
  const cplx lz = std::log(next);
  const cplx l1 = std::log(1.0 - next);
  const cplx log_z = lz + two_pi_i * std::round((log_z_ - lz).imag() / (2 * pi));
  const cplx log_1mz = l1 + two_pi_i * std::round((log_1mz_ - l1).imag() / (2 * pi));

  // d Li2 = -log(1-z) dz / z, midpoint prediction.
  const cplx predicted = li2_ - 0.5 * (log_1mz_ + log_1mz) * dz / mid;
  const cplx li2p = detail::li2_principal<double>(next);
  double best = INFINITY;
  cplx best_value = li2_;
  long best_n = li2_log_sheet_;
  long best_m = li2_const_sheet_;
  for (long n = li2_log_sheet_ - 2; n <= li2_log_sheet_ + 2; ++n) {
    const cplx base = li2p + two_pi_i * static_cast<double>(n) * lz;
    const long m = std::lround((predicted - base).real() / (4 * pi_sq));
    const cplx value = base + 4 * pi_sq * static_cast<double>(m);
    const double dist = std::abs(value - predicted);
    if (dist < best) {
      best = dist;
      best_value = value;
      best_n = n;
      best_m = m;
    }
  }
  li2_log_sheet_ = best_n;
  li2_const_sheet_ = best_m;
  li2_ = best_value;
  z_ = next;
  log_z_ = log_z;
  log_1mz_ = log_1mz;
}

void RogersContinuation::follow(std::span<const cplx> path) {
  for (const cplx z : path) advance(z);
}

}  // namespace bloch
