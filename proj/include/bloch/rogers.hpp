#pragma once

// The lifted Rogers dilogarithm and arithmetic in C / Z(2) = C / 4 pi^2 Z.

#include <span>

#include "bloch/cover.hpp"

namespace bloch {

inline constexpr double z2_period = 4 * pi_sq;        // generator of Z(2) = (2 pi i)^2 Z
inline constexpr double transfer_period = 2 * pi_sq;  // coarser period once kappa is killed

// Values within this distance of -2 pi^2 are represented there rather than near +2 pi^2.
inline constexpr double canonical_seam = 1e-9;

// An element of C / 4 pi^2 Z. Only the real part is reduced; the imaginary
// part (which carries volume) is never touched.
// Canonical real part lies in [-2 pi^2 - seam, 2 pi^2 - seam).
class CmodZ2 {
 public:
  CmodZ2() = default;
  explicit CmodZ2(cplx v);

  cplx value() const noexcept { return value_; }
  double real() const noexcept { return value_.real(); }
  double imag() const noexcept { return value_.imag(); }

  // Distance from the class to 0.
  double magnitude() const noexcept;

  CmodZ2& operator+=(const CmodZ2& o) { return *this = CmodZ2(value_ + o.value_); }
  CmodZ2& operator-=(const CmodZ2& o) { return *this = CmodZ2(value_ - o.value_); }
  friend CmodZ2 operator+(CmodZ2 a, const CmodZ2& b) { return a += b; }
  friend CmodZ2 operator-(CmodZ2 a, const CmodZ2& b) { return a -= b; }
  friend CmodZ2 operator-(const CmodZ2& a) { return CmodZ2(-a.value_); }
  friend CmodZ2 operator*(Index k, const CmodZ2& a);

 private:
  cplx value_{};
};

// |re - nearest multiple of period|
double wrapped_distance(double re, double period) noexcept;

bool approx_equal(const CmodZ2& a, const CmodZ2& b, double tol = default_tol);

// Image in C / 2 pi^2 Z; real part in (-pi^2 + seam, pi^2 + seam].
cplx reduce_mod_transfer(const CmodZ2& v);

// Li2(z) + 1/2 (Log z + 2 pi i p)(Log(1-z) + 2 pi i q) - pi^2/6, unreduced.
cplx rogers_l_bar(const FlattenedNumber& f, Precision precision = Precision::standard);

CmodZ2 rogers_l_hat(const FlattenedNumber& f, Precision precision = Precision::standard);

struct WeightedGenerator {
  Index coeff;
  FlattenedNumber gen;
};

// sum coeff * L(gen), accumulated with compensated summation (or at 50 digits
// for Precision::high) and reduced once at the end.
CmodZ2 rogers_l_hat_sum(std::span<const WeightedGenerator> terms,
                        Precision precision = Precision::standard);

}  // namespace bloch
