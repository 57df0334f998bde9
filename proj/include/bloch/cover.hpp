#pragma once

// Points (z; 2p, 2q) of the universal abelian cover of C \ {0,1}, and the
// flattened five-term set.

#include <array>
#include <compare>
#include <cstdint>

#include "bloch/dilog.hpp"

namespace bloch {

using Index = std::int64_t;

inline constexpr double default_tol = 1e-9;

// The generator [z; 2p, 2q]. p and q are stored as the half-indices, so the
// displayed label is (z; 2*p(), 2*q()). Always canonical: a point below a
// cut is rewritten to the equivalent point above it.
class FlattenedNumber {
 public:
  FlattenedNumber(const CutPoint& base, Index p, Index q);
  FlattenedNumber(cplx z, Side side, Index p, Index q) : FlattenedNumber(CutPoint(z, side), p, q) {}

  const CutPoint& base() const noexcept { return base_; }
  cplx z() const noexcept { return base_.z(); }
  Side side() const noexcept { return base_.side(); }
  Index p() const noexcept { return p_; }
  Index q() const noexcept { return q_; }

  friend bool operator==(const FlattenedNumber&, const FlattenedNumber&) = default;

 private:
  CutPoint base_;
  Index p_;
  Index q_;
};

// Total order on generators (exact on the bit values of z). Used for merging.
std::strong_ordering compare(const FlattenedNumber& a, const FlattenedNumber& b);

FlattenedNumber canonicalize(cplx z, Side side, Index p, Index q);

// Log z + 2 pi i p
cplx log_param_l(const FlattenedNumber& f);
// -Log(1-z) + 2 pi i q
cplx log_param_m(const FlattenedNumber& f);

struct FlattenedFT {
  std::array<FlattenedNumber, 5> entries;
};

// Builds the flattened five-term tuple over FT+ from x = z0, y = z1 and the
// free indices. Throws DomainError unless all five cross-ratios have Im > 0.
FlattenedFT make_flattened_ft(cplx x, cplx y, Index p0, Index p1, Index q0, Index q1, Index q2);

// Projected five-term equations and the five linear log-parameter identities
//   l2 = l1 - l0,  l3 = l1 - l0 + m1 - m0,  l4 = m1 - m0,
//   m3 = m2 - m1,  m4 = m2 - m1 - l0,
// which hold on the whole flattened component.
bool is_flattened_ft(const std::array<FlattenedNumber, 5>& t, double tol = default_tol);
inline bool is_flattened_ft(const FlattenedFT& t, double tol = default_tol) {
  return is_flattened_ft(t.entries, tol);
}

// The five cross-ratios (x, y, y/x, (1-1/x)/(1-1/y), (1-x)/(1-y)).
std::array<cplx, 5> five_term_cross_ratios(cplx x, cplx y);

}  // namespace bloch
