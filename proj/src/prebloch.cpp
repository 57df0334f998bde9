#include "bloch/prebloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bloch/errors.hpp"

namespace bloch {

FormalSum::FormalSum(const FlattenedNumber& gen, Index coeff) { add(gen, coeff); }

FormalSum::FormalSum(std::initializer_list<WeightedGenerator> terms) {
  for (const auto& t : terms) add(t.gen, t.coeff);
}

FormalSum& FormalSum::add(const FlattenedNumber& gen, Index coeff) {
  if (coeff == 0) return *this;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), gen,
                             [](const WeightedGenerator& t, const FlattenedNumber& g) {
                               return compare(t.gen, g) < 0;
                             });
  if (it != terms_.end() && compare(it->gen, gen) == 0) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, WeightedGenerator{coeff, gen});
  }
  return *this;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& t : o.terms_) add(t.gen, t.coeff);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& t : o.terms_) add(t.gen, -t.coeff);
  return *this;
}

FormalSum& FormalSum::operator*=(Index k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const WeightedGenerator& x, const WeightedGenerator& y) {
                      return x.coeff == y.coeff && x.gen == y.gen;
                    });
}

CmodZ2 eval_lhat(const FormalSum& s, Precision precision) {
  return rogers_l_hat_sum(s.terms(), precision);
}

FormalSum five_term_element(const FlattenedFT& t, double tol) {
  if (!is_flattened_ft(t, tol)) throw DomainError("tuple is not in the flattened five-term set");
  FormalSum s;
  for (std::size_t k = 0; k < 5; ++k) s.add(t.entries[k], k % 2 == 0 ? 1 : -1);
  return s;
}

FormalSum curly(const CutPoint& z, Index p) {
  FormalSum s(FlattenedNumber(z, p, 1));
  s.add(FlattenedNumber(z, p, 0), -1);
  return s;
}

int arg_case(double s) noexcept {
  if (s <= -pi) return -1;
  if (s <= pi) return 0;
  return 1;
}

FormalSum curly_product_relation(const CutPoint& z, Index p, const CutPoint& w, Index r) {
  const cplx zw = z.z() * w.z();
  if (zw == cplx(1.0)) throw DomainError("curly product relation needs zw != 1");
  const int e = arg_case(arg(z) + arg(w));
  return curly(z, p) + curly(w, r) - curly(CutPoint::at(zw), p + r + e);
}

FormalSum cycle_relation(const CutPoint& x, const CutPoint& y, Index p0, Index p1, Index q0,
                         Index q1, Index q2) {
  if (x.z() == y.z()) throw DomainError("cycle relation needs x != y");
  const CutPoint ratio = CutPoint::at(y.z() / x.z());
  const Index shifted = p1 - p0 + arg_case(arg(y) - arg(x));
  FormalSum s;
  s.add(FlattenedNumber(x, p0, q0 - 1), 1);
  s.add(FlattenedNumber(x, p0, q0), -1);
  s.add(FlattenedNumber(y, p1, q1 - 1), -1);
  s.add(FlattenedNumber(y, p1, q1), 1);
  s.add(FlattenedNumber(ratio, shifted, q2), -1);
  s.add(FlattenedNumber(ratio, shifted, q2 - 1), 1);
  return s;
}

FormalSum index_relation(const CutPoint& z, Index p, Index q, Index p_alt, Index q_alt,
                         IndexRelation kind) {
  const auto diff = [&](Index pa, Index qa, Index pb, Index qb) {
    FormalSum s(FlattenedNumber(z, pa, qa));
    s.add(FlattenedNumber(z, pb, qb), -1);
    return s;
  };
  switch (kind) {
    case IndexRelation::q:
      return diff(p, q - 1, p, q) - diff(p, q_alt - 1, p, q_alt);
    case IndexRelation::p:
      return diff(p - 1, q, p, q) - diff(p_alt - 1, q, p_alt, q);
    case IndexRelation::pq:
      if (p + q != p_alt + q_alt) throw DomainError("pq index relation requires p+q = p'+q'");
      return diff(p + 1, q - 1, p, q) - diff(p_alt + 1, q_alt - 1, p_alt, q_alt);
  }
  throw DomainError("unknown index relation");
}

FormalSum mirror_relation(const CutPoint& z, Index p, Index q) {
  FormalSum s(FlattenedNumber(z, p, q));
  s.add(FlattenedNumber(z.one_minus(), -q, -p));
  s.add(FlattenedNumber(cplx(0.5), Side::interior, 0, 0), -2);
  return s;
}

FormalSum kappa_hat() { return kappa_hat(CutPoint(cplx(0.5), Side::interior), 1); }

FormalSum kappa_hat(const CutPoint& z, Index p) { return curly(z, p) - curly(z, p - 1); }

FormalSum chi_hat(cplx z) {
  if (z == cplx(0.0)) throw DomainError("chi_hat is defined on nonzero z");
  if (z == cplx(1.0)) return {};
  if (z == cplx(-1.0)) return kappa_hat();
  const double a = principal_arg(z);
  const CutPoint square = CutPoint::at(z * z);
  return curly(square, (a > -pi / 2 && a <= pi / 2) ? 0 : 1);
}

CmodZ2 check_chi_homomorphism(cplx z, cplx w, Precision precision) {
  const cplx zw = z * w;
  if (zw == cplx(0.0)) throw DomainError("chi homomorphism check needs zw != 0");
  return eval_lhat(chi_hat(z) + chi_hat(w) - chi_hat(zw), precision);
}

cplx splitting(const FormalSum& s, Precision precision) {
  return std::exp(eval_lhat(s, precision).value() / cplx(0.0, 2 * pi));
}

cplx root4(cplx z) {
  if (z == cplx(0.0)) throw DomainError("root4 of zero");
  return std::polar(std::pow(std::abs(z), 0.25), principal_arg(z) / 4);
}

namespace {

// exp(pi i k / 12)
cplx twelfth_turn(Index k) {
  const Index r = ((k % 24) + 24) % 24;
  switch (r) {
    case 0: return {1.0, 0.0};
    case 6: return {0.0, 1.0};
    case 12: return {-1.0, 0.0};
    case 18: return {0.0, -1.0};
    default: return std::polar(1.0, pi * static_cast<double>(r) / 12);
  }
}

cplx i_power(Index p) {
  static constexpr std::array<cplx, 4> table{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  return table[static_cast<std::size_t>(((p % 4) + 4) % 4)];
}

}  // namespace

FormalSum symmetry_relation(cplx z, Index p, Index q, int which) {
  if (!(z.imag() > 0)) throw DomainError("symmetry relations need Im z > 0");
  const FlattenedNumber base(z, Side::interior, p, q);
  const auto gen = [](cplx w, Index a, Index b) {
    return FormalSum(FlattenedNumber(CutPoint::at(w), a, b));
  };
  const FormalSum zs(base);
  switch (which) {
    case 1:
      return gen(1.0 / z, -p, p + q) + zs - chi_hat(i_power(p) * root4(z));
    case 2:
      return gen(1.0 - 1.0 / z, -p - q, p) - zs + chi_hat(twelfth_turn(6 * p - 1) * root4(z));
    case 3:
      return gen(-z / (1.0 - z), p + q, -q) + zs -
             chi_hat(twelfth_turn(-(1 + 6 * q)) * root4(z - 1.0));
    case 4:
      return gen(1.0 / (1.0 - z), q, -p - q) - zs +
             chi_hat(twelfth_turn(-(2 + 6 * q)) * root4(z - 1.0));
    case 5:
      return gen(1.0 - z, -q, -p) + zs - chi_hat(twelfth_turn(1));
    default:
      throw DomainError("symmetry relation index must be 1..5");
  }
}

}  // namespace bloch
