#pragma once

// Formal sums over the cover and the relations of the extended pre-Bloch
// group. Relations are returned as "LHS - RHS"; applying eval_lhat to them
// must give 0 in C / 4 pi^2 Z.

#include <initializer_list>
#include <vector>

#include "bloch/rogers.hpp"

namespace bloch {

// Integer combination of generators. Kept sorted, merged, with zero
// coefficients dropped, so equal sums compare equal.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const FlattenedNumber& gen, Index coeff = 1);
  FormalSum(std::initializer_list<WeightedGenerator> terms);

  const std::vector<WeightedGenerator>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  FormalSum& add(const FlattenedNumber& gen, Index coeff = 1);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  FormalSum& operator*=(Index k);

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= -1; }
  friend FormalSum operator*(Index k, FormalSum a) { return a *= k; }
  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  std::vector<WeightedGenerator> terms_;
};

CmodZ2 eval_lhat(const FormalSum& s, Precision precision = Precision::standard);

// [z0] - [z1] + [z2] - [z3] + [z4]; throws unless t is a flattened five-term tuple.
FormalSum five_term_element(const FlattenedFT& t, double tol = default_tol);

// {z; 2p} = [z; 2p, 2] - [z; 2p, 0]
FormalSum curly(const CutPoint& z, Index p);

// The sign in Arg-sum case splits: -1 if s <= -pi, 0 if -pi < s <= pi, +1 if s > pi.
int arg_case(double s) noexcept;

// {z;2p} + {w;2r} - {zw+0i; 2(p+r+e)}, e = arg_case(Arg z + Arg w).
FormalSum curly_product_relation(const CutPoint& z, Index p, const CutPoint& w, Index r);

// Cycle relation in x, y with the case split on Arg y - Arg x:
//   [x;2p0,2q0-2] - [x;2p0,2q0] - [y;2p1,2q1-2] + [y;2p1,2q1]
//     - ([y/x; 2(p1-p0+e), 2q2] - [y/x; 2(p1-p0+e), 2q2-2]).
FormalSum cycle_relation(const CutPoint& x, const CutPoint& y, Index p0, Index p1, Index q0,
                         Index q1, Index q2);

enum class IndexRelation { q, p, pq };

// q:  [z;2p,2(q-1)] - [z;2p,2q] = [z;2p,2(q'-1)] - [z;2p,2q']        (p' unused)
// p:  [z;2(p-1),2q] - [z;2p,2q] = [z;2(p'-1),2q] - [z;2p',2q]        (q' unused)
// pq: [z;2(p+1),2(q-1)] - [z;2p,2q] = [z;2(p'+1),2(q'-1)] - [z;2p',2q'], p+q = p'+q'
FormalSum index_relation(const CutPoint& z, Index p, Index q, Index p_alt, Index q_alt,
                         IndexRelation kind);

// [z;2p,2q] + [1-z;-2q,-2p] - 2[1/2;0,0]
FormalSum mirror_relation(const CutPoint& z, Index p, Index q);

// {1/2; 2} - {1/2; 0}, and the same element built from another representative.
FormalSum kappa_hat();
FormalSum kappa_hat(const CutPoint& z, Index p);

FormalSum chi_hat(cplx z);

// eval_lhat(chi(z) + chi(w) - chi(zw))
CmodZ2 check_chi_homomorphism(cplx z, cplx w, Precision precision = Precision::standard);

// exp(eval_lhat(s) / 2 pi i)
cplx splitting(const FormalSum& s, Precision precision = Precision::standard);

// The fourth root with Arg in (-pi/4, pi/4].
cplx root4(cplx z);

// One of the five reordering relations for Im z > 0, as LHS - RHS. which in 1..5.
FormalSum symmetry_relation(cplx z, Index p, Index q, int which);

}  // namespace bloch
