#pragma once

// nu-hat into C wedge_Z C, and a floating-point necessary condition for an
// element there to vanish.
//
// C wedge_Z C has torsion and Q-linear structure that floating point cannot
// see, so vanishing cannot be decided numerically. wedge_necessary_zero()
// returns false only when the element is certainly nonzero; a pass is only a
// necessary condition unless WedgeCheck::exact is set.

#include <vector>

#include "bloch/prebloch.hpp"

namespace bloch {

struct WedgeTerm {
  Index coeff;
  cplx a;
  cplx b;
};

// Normal form: no a == b terms, each pair ordered so a < b lexicographically
// on (Re, Im), like terms merged, zero coefficients dropped.
class WedgeExpr {
 public:
  WedgeExpr() = default;

  void add(Index coeff, cplx a, cplx b);

  const std::vector<WedgeTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::vector<WedgeTerm> terms_;
};

WedgeExpr nu_hat(const FormalSum& s);

// sum coeff * (Re a Im b - Im a Re b); the only R-bilinear alternating form on C.
double real_pairing(const WedgeExpr& w);

struct WedgeCheck {
  bool passed;          // necessary condition for zero holds
  bool exact;           // vanished symbolically (after exact or 2 pi i-merged cancellation)
  double pairing;       // real pairing of the input
  std::size_t residual_terms;  // terms left after merging
};

WedgeCheck wedge_necessary_zero(const WedgeExpr& w, double tol = default_tol);

}  // namespace bloch
