#include "bloch/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>

namespace bloch {
namespace {

bool lex_less(cplx a, cplx b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

// Groups values that agree modulo 2 pi i Z (|k| <= 8, relative tolerance tol).
// Each value becomes (representative id, k) with value = rep + 2 pi i k;
// id zero_rep marks a pure multiple of 2 pi i.
constexpr int zero_rep = -2;

class TwoPiIMerger {
 public:
  explicit TwoPiIMerger(double tol) : tol_(tol) {}

  std::pair<int, long> classify(cplx v) {
    const double k0 = std::nearbyint(v.imag() / (2 * pi));
    if (std::abs(v - cplx(0.0, 2 * pi * k0)) <= tol_ * std::max(1.0, std::abs(v))) {
      return {zero_rep, static_cast<long>(k0)};
    }
    for (std::size_t id = 0; id < reps_.size(); ++id) {
      const cplx d = v - reps_[id];
      const double k = std::nearbyint(d.imag() / (2 * pi));
      if (std::fabs(k) > 8) continue;
      const double scale = std::max({1.0, std::abs(v), std::abs(reps_[id])});
      if (std::abs(d - cplx(0.0, 2 * pi * k)) <= tol_ * scale) {
        return {static_cast<int>(id), static_cast<long>(k)};
      }
    }
    reps_.push_back(v);
    return {static_cast<int>(reps_.size() - 1), 0};
  }

 private:
  double tol_;
  std::vector<cplx> reps_;
};

}  // namespace

void WedgeExpr::add(Index coeff, cplx a, cplx b) {
  if (coeff == 0 || a == b) return;
  if (lex_less(b, a)) {
    std::swap(a, b);
    coeff = -coeff;
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(a, b),
                             [](const WedgeTerm& t, const std::pair<cplx, cplx>& key) {
                               if (t.a != key.first) return lex_less(t.a, key.first);
                               return lex_less(t.b, key.second);
                             });
  if (it != terms_.end() && it->a == a && it->b == b) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, WedgeTerm{coeff, a, b});
  }
}

WedgeExpr nu_hat(const FormalSum& s) {
  WedgeExpr w;
  for (const auto& t : s.terms()) w.add(t.coeff, log_param_l(t.gen), log_param_m(t.gen));
  return w;
}

double real_pairing(const WedgeExpr& w) {
  double sum = 0.0;
  for (const auto& t : w.terms()) {
    sum += static_cast<double>(t.coeff) * (t.a.real() * t.b.imag() - t.a.imag() * t.b.real());
  }
  return sum;
}

WedgeCheck wedge_necessary_zero(const WedgeExpr& w, double tol) {
  if (w.empty()) return {true, true, 0.0, 0};
  const double pairing = real_pairing(w);
  if (std::fabs(pairing) > tol) return {false, false, pairing, w.size()};

  // Bilinear expansion over representatives; symbol -1 stands for 2 pi i.
  TwoPiIMerger merger(tol);
  std::map<std::pair<int, int>, long> merged;
  const auto put = [&merged](int x, int y, long c) {
    if (x == y || c == 0 || x == zero_rep || y == zero_rep) return;
    if (x > y) {
      std::swap(x, y);
      c = -c;
    }
    merged[{x, y}] += c;
  };
  for (const auto& t : w.terms()) {
    const auto [ra, ka] = merger.classify(t.a);
    const auto [rb, kb] = merger.classify(t.b);
    put(ra, rb, t.coeff);
    put(ra, -1, t.coeff * kb);
    put(-1, rb, t.coeff * ka);
  }
  std::size_t left = 0;
  for (const auto& [key, c] : merged) left += c != 0;
  return {true, left == 0, pairing, left};
}

}  // namespace bloch
