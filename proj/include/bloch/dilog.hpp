#pragma once

// Principal branches of Log, Log(1-z) and the dilogarithm on the closed cut
// plane, i.e. C minus (-inf,0] u [1,inf) together with the boundary points x+0i
// and x-0i for x on either cut.

#include <complex>
#include <numbers>
#include <span>

namespace bloch {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi_sq = std::numbers::pi * std::numbers::pi;

enum class Side { interior, above, below };

enum class Precision { standard, high };

// A point of the closed cut plane. Points on (-inf,0) or (1,inf) must carry
// an explicit side; interior points never sit on a cut. 0 and 1 are excluded.
class CutPoint {
 public:
  CutPoint(cplx z, Side side);

  // Real points on a cut are read as z+0i.
  static CutPoint at(cplx z);

  cplx z() const noexcept { return z_; }
  Side side() const noexcept { return side_; }
  bool on_boundary() const noexcept { return side_ != Side::interior; }

  // 1 - z. Approaching from above becomes approaching from below.
  CutPoint one_minus() const;

  friend bool operator==(const CutPoint&, const CutPoint&) = default;

 private:
  cplx z_;
  Side side_;
};

bool on_cut(cplx z) noexcept;

// Arg in (-pi, pi]; -0.0 imaginary parts do not produce -pi.
double principal_arg(cplx z) noexcept;

cplx principal_log(const CutPoint& p);
double arg(const CutPoint& p);
cplx log_one_minus(const CutPoint& p);
cplx li2(const CutPoint& p);

// Li2 of an arbitrary complex number; real points on (1,inf) are read as x+0i.
cplx li2(cplx z);

// Real dilogarithm for x <= 1.
double li2(double x);

// Analytic continuation of Log z, Log(1-z), Li2 and the Rogers function
// L = Li2 + 1/2 log z log(1-z) - pi^2/6 along a path of small steps, starting
// from the principal branches. Each step picks the branch nearest the
// first-order prediction, so steps must be short compared with the distance
// to 0 and 1.
class RogersContinuation {
 public:
  explicit RogersContinuation(cplx start);

  void advance(cplx next);
  void follow(std::span<const cplx> path);

  cplx position() const noexcept { return z_; }
  cplx log_z() const noexcept { return log_z_; }
  cplx log_one_minus_z() const noexcept { return log_1mz_; }
  cplx li2() const noexcept { return li2_; }
  cplx rogers() const noexcept;

 private:
  cplx z_;
  cplx log_z_;
  cplx log_1mz_;
  cplx li2_;
  long li2_log_sheet_ = 0;  // Li2 = Li2_principal + 2 pi i n Log_principal z + 4 pi^2 m
  long li2_const_sheet_ = 0;
};

}  // namespace bloch
