#include "bloch/cover.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <compare>
#include <string>

#include "bloch/errors.hpp"

namespace bloch {
namespace {

// IEEE totalOrder as a signed integer key.
std::int64_t order_key(double v) {
  const auto bits = std::bit_cast<std::int64_t>(v);
  return bits < 0 ? bits ^ std::numeric_limits<std::int64_t>::max() : bits;
}

bool close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

FlattenedNumber::FlattenedNumber(const CutPoint& base, Index p, Index q)
    : base_(base), p_(p), q_(q) {
  if (base_.side() == Side::below) {
    // (x-0i; 2p, 2q) ~ (x+0i; 2p-2, 2q) for x < 0, ~ (x+0i; 2p, 2q-2) for x > 1
    base_ = CutPoint(base_.z(), Side::above);
    if (base_.z().real() < 0) {
      --p_;
    } else {
      --q_;
    }
  }
}

std::strong_ordering compare(const FlattenedNumber& a, const FlattenedNumber& b) {
  if (auto c = order_key(a.z().real()) <=> order_key(b.z().real()); c != 0) return c;
  if (auto c = order_key(a.z().imag()) <=> order_key(b.z().imag()); c != 0) return c;
  if (auto c = static_cast<int>(a.side()) <=> static_cast<int>(b.side()); c != 0) return c;
  if (auto c = a.p() <=> b.p(); c != 0) return c;
  return a.q() <=> b.q();
}

FlattenedNumber canonicalize(cplx z, Side side, Index p, Index q) {
  return FlattenedNumber(CutPoint(z, side), p, q);
}

cplx log_param_l(const FlattenedNumber& f) {
  return principal_log(f.base()) + cplx(0.0, 2 * pi * static_cast<double>(f.p()));
}

cplx log_param_m(const FlattenedNumber& f) {
  return -log_one_minus(f.base()) + cplx(0.0, 2 * pi * static_cast<double>(f.q()));
}

std::array<cplx, 5> five_term_cross_ratios(cplx x, cplx y) {
  return {x, y, y / x, (1.0 - 1.0 / x) / (1.0 - 1.0 / y), (1.0 - x) / (1.0 - y)};
}

FlattenedFT make_flattened_ft(cplx x, cplx y, Index p0, Index p1, Index q0, Index q1, Index q2) {
  if (x == y) throw DomainError("five-term relation needs x != y");
  const auto z = five_term_cross_ratios(x, y);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!(z[k].imag() > 0)) {
      throw DomainError("(x, y) not in FT+: cross-ratio " + std::to_string(k) +
                        " has Im <= 0; indices would need adjusting");
    }
  }
  return FlattenedFT{{
      FlattenedNumber(z[0], Side::interior, p0, q0),
      FlattenedNumber(z[1], Side::interior, p1, q1),
      FlattenedNumber(z[2], Side::interior, p1 - p0, q2),
      FlattenedNumber(z[3], Side::interior, p1 - p0 + q1 - q0, q2 - q1),
      FlattenedNumber(z[4], Side::interior, q1 - q0, q2 - q1 - p0),
  }};
}

bool is_flattened_ft(const std::array<FlattenedNumber, 5>& t, double tol) {
  const cplx x = t[0].z();
  const cplx y = t[1].z();
  if (close(x, y, tol)) return false;
  const auto expect = five_term_cross_ratios(x, y);
  for (std::size_t k = 2; k < 5; ++k) {
    if (!std::isfinite(std::abs(expect[k])) || !close(t[k].z(), expect[k], tol)) return false;
  }
  std::array<cplx, 5> l{};
  std::array<cplx, 5> m{};
  for (std::size_t k = 0; k < 5; ++k) {
    l[k] = log_param_l(t[k]);
    m[k] = log_param_m(t[k]);
  }
  return close(l[2], l[1] - l[0], tol) && close(l[3], l[1] - l[0] + m[1] - m[0], tol) &&
         close(l[4], m[1] - m[0], tol) && close(m[3], m[2] - m[1], tol) &&
         close(m[4], m[2] - m[1] - l[0], tol);
}

}  // namespace bloch
