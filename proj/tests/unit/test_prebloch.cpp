#include <doctest.h>

#include <cmath>

#include "bloch/errors.hpp"
#include "bloch/prebloch.hpp"
#include "bloch/sweep.hpp"

using namespace bloch;

namespace {

constexpr cplx I{0.0, 1.0};
const CutPoint half(0.5, Side::interior);

double lhat_norm(const FormalSum& s) { return eval_lhat(s).magnitude(); }

FormalSum gen(cplx z, Side side, Index p, Index q, Index coeff = 1) {
  return FormalSum(FlattenedNumber(z, side, p, q), coeff);
}

}  // namespace

TEST_CASE("FormalSum normal form") {
  const FlattenedNumber a(0.5, Side::interior, 0, 0), b({0.3, 0.4}, Side::interior, 1, 2);
  FormalSum s;
  s.add(a, 2).add(b, 1).add(a, -2);
  CHECK(s.size() == 1);
  CHECK(s == FormalSum(b));
  CHECK((FormalSum(a) + FormalSum(b)) == (FormalSum(b) + FormalSum(a)));
  CHECK((FormalSum(a) - FormalSum(a)).empty());
  CHECK((3 * FormalSum(a)).terms().front().coeff == 3);
  CHECK((0 * FormalSum(a)).empty());
  // Both sides of an identification are the same generator.
  const FormalSum merged = gen(-2.0, Side::below, 1, 0) + gen(-2.0, Side::above, 0, 0);
  REQUIRE(merged.size() == 1);
  CHECK(merged.terms().front().coeff == 2);
}

TEST_CASE("eval_lhat examples") {
  CHECK(eval_lhat(FormalSum()).value() == cplx(0.0, 0.0));
  CHECK(std::abs(eval_lhat(gen(0.5, Side::interior, 0, 0)).value() + pi_sq / 12) < 1e-15);
  CHECK(std::abs(eval_lhat(kappa_hat()).value() + 2 * pi_sq) < 1e-10);
  CHECK(std::abs(eval_lhat(gen(0.5, Side::interior, 0, 0, 2)).value() + pi_sq / 6) < 1e-14);
}

TEST_CASE("five_term_element") {
  const auto t = make_flattened_ft({0.3, 0.2}, I, 1, -2, 0, 3, -1);
  const FormalSum s = five_term_element(t);
  REQUIRE(s.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& e = t.entries[k];
    const int sign = k % 2 == 0 ? 1 : -1;
    bool found = false;
    for (const auto& term : s.terms()) found |= (term.gen == e && term.coeff == sign);
    CHECK(found);
  }
  CHECK(lhat_norm(s) < 1e-9);

  auto broken = t;
  broken.entries[3] = FlattenedNumber(t.entries[3].base(), t.entries[3].p() + 1, t.entries[3].q());
  CHECK_THROWS_AS(five_term_element(broken), DomainError);
}

TEST_CASE("curly elements") {
  const FormalSum c = curly(half, 0);
  CHECK(c == gen(0.5, Side::interior, 0, 1) - gen(0.5, Side::interior, 0, 0));
  CHECK(std::abs(eval_lhat(c).value() - cplx(0, -pi * std::log(2.0))) < 1e-14);
  CHECK((curly(half, 3) - curly(half, 3)).empty());

  // Independent of the q used to build it.
  Sampler s(41);
  for (int k = 0; k < 100; ++k) {
    const CutPoint z = s.cut_point();
    const Index p = s.integer(-5, 5), q = s.integer(-5, 5);
    const FormalSum other = FormalSum(FlattenedNumber(z, p, q + 1)) - FormalSum(FlattenedNumber(z, p, q));
    CHECK((eval_lhat(curly(z, p)) - eval_lhat(other)).magnitude() < 1e-10);
    // L-hat of {z; 2p} is pi i (Log z + 2 pi i p).
    const cplx want = cplx(0, pi) * (principal_log(z) + cplx(0, 2 * pi * p));
    CHECK((eval_lhat(curly(z, p)) - CmodZ2(want)).magnitude() < 1e-10);
  }
}

TEST_CASE("{z^2; 2p+4} and {z^2; 2p} agree") {
  Sampler s(42);
  for (int k = 0; k < 200; ++k) {
    const cplx z = s.nonzero(0.1, 5);
    const cplx z2 = z * z;
    if (std::abs(z2 - 1.0) < 1e-6) continue;
    const CutPoint w = CutPoint::at(z2);
    const Index p = s.integer(-5, 5);
    CHECK((eval_lhat(curly(w, p + 2)) - eval_lhat(curly(w, p))).magnitude() < 1e-9);
  }
}

TEST_CASE("arg_case boundaries are as printed") {
  CHECK(arg_case(-pi) == -1);
  CHECK(arg_case(std::nextafter(-pi, 0.0)) == 0);
  CHECK(arg_case(pi) == 0);
  CHECK(arg_case(std::nextafter(pi, 4.0)) == 1);
  CHECK(arg_case(-5.8) == -1);
  CHECK(arg_case(5.8) == 1);
}

TEST_CASE("curly product relation examples") {
  const CutPoint i_pt(I, Side::interior);
  const FormalSum r = curly_product_relation(i_pt, 0, i_pt, 0);
  CHECK(r == curly(i_pt, 0) + curly(i_pt, 0) - curly(CutPoint(-1.0, Side::above), 0));
  CHECK(lhat_norm(r) < 1e-9);

  const FormalSum r2 = curly_product_relation(CutPoint(2.0, Side::above), 0, CutPoint(0.25, Side::interior), 0);
  CHECK(lhat_norm(r2) < 1e-9);

  // Third case: Arg sum above pi moves the index up by one.
  const cplx z = std::exp(cplx(0, 2.0));
  const FormalSum r3 = curly_product_relation(CutPoint(z, Side::interior), 0, CutPoint(z, Side::interior), 0);
  CHECK(r3 == 2 * curly(CutPoint(z, Side::interior), 0) - curly(CutPoint::at(z * z), 1));
  CHECK(lhat_norm(r3) < 1e-9);
}

TEST_CASE("cycle relation cases") {
  const CutPoint x({0.3, 0.2}, Side::interior), y(I, Side::interior);
  CHECK(lhat_norm(cycle_relation(x, y, 0, 0, 0, 0, 0)) < 1e-9);

  const CutPoint a(std::exp(cplx(0, 2.9)), Side::interior), b(std::exp(cplx(0, -2.9)), Side::interior);
  const auto has_ratio_index = [](const FormalSum& s, cplx ratio, Index p) {
    bool found = false;
    for (const auto& t : s.terms()) found |= std::abs(t.gen.z() - ratio) < 1e-12 && t.gen.p() == p;
    return found;
  };
  const FormalSum first = cycle_relation(a, b, 0, 0, 0, 0, 0);  // Arg b - Arg a = -5.8
  CHECK(has_ratio_index(first, b.z() / a.z(), -1));
  CHECK(lhat_norm(first) < 1e-9);
  const FormalSum third = cycle_relation(b, a, 0, 0, 0, 0, 0);  // +5.8
  CHECK(has_ratio_index(third, a.z() / b.z(), 1));
  CHECK(lhat_norm(third) < 1e-9);
}

TEST_CASE("index relations") {
  const CutPoint z({0.3, 0.4}, Side::interior);
  const FormalSum rq = index_relation(z, 0, 1, 0, 5, IndexRelation::q);
  CHECK(rq == gen(z.z(), Side::interior, 0, 0) - gen(z.z(), Side::interior, 0, 1) -
                  gen(z.z(), Side::interior, 0, 4) + gen(z.z(), Side::interior, 0, 5));
  CHECK(lhat_norm(rq) < 1e-9);
  CHECK(lhat_norm(index_relation(z, 1, 0, 5, 0, IndexRelation::p)) < 1e-9);
  CHECK(lhat_norm(index_relation(z, 2, -1, -3, 4, IndexRelation::pq)) < 1e-9);
  CHECK_THROWS_AS(index_relation(z, 0, 0, 1, 0, IndexRelation::pq), DomainError);
}

TEST_CASE("mirror relation") {
  CHECK(mirror_relation(half, 0, 0).empty());
  CHECK(lhat_norm(mirror_relation(CutPoint({0.3, 0.4}, Side::interior), 1, 2)) < 1e-9);
  CHECK(lhat_norm(mirror_relation(CutPoint(-3.0, Side::above), -2, 4)) < 1e-9);
}

TEST_CASE("kappa") {
  CHECK(std::abs(eval_lhat(kappa_hat()).value() + 2 * pi_sq) < 1e-10);
  CHECK(lhat_norm(2 * kappa_hat()) < 1e-10);
  CHECK(std::abs(eval_lhat(kappa_hat(CutPoint(I, Side::interior), 0)).value() + 2 * pi_sq) < 1e-10);
  Sampler s(43);
  for (int k = 0; k < 50; ++k) {
    const auto v = eval_lhat(kappa_hat(s.cut_point(), s.integer(-5, 5)));
    CHECK(std::abs(v.value() + 2 * pi_sq) < 1e-10);
  }
}

TEST_CASE("chi_hat") {
  CHECK(chi_hat(1.0).empty());
  CHECK(chi_hat(-1.0) == kappa_hat());
  CHECK(chi_hat(I) == curly(CutPoint(-1.0, Side::above), 0));
  // z^2 lands on (1, inf): the generator sits above the cut.
  const FormalSum c = chi_hat(2.0);
  for (const auto& t : c.terms()) CHECK(t.gen.side() == Side::above);
  CHECK_THROWS_AS(chi_hat(0.0), DomainError);
}

TEST_CASE("chi_hat is a homomorphism") {
  CHECK(check_chi_homomorphism(I, I).magnitude() < 1e-9);
  CHECK(check_chi_homomorphism(1.0, {0.3, -2.0}).magnitude() < 1e-9);
  CHECK(check_chi_homomorphism(-1.0, -1.0).magnitude() < 1e-9);
  Sampler s(44);
  for (int k = 0; k < 200; ++k) {
    const cplx z = std::exp(cplx(0, s.uniform(-pi, pi)));
    const cplx w = std::exp(cplx(0, s.uniform(-pi, pi)));
    CHECK(check_chi_homomorphism(z, w).magnitude() < 1e-9);
  }
}

TEST_CASE("splitting inverts chi_hat") {
  const cplx z = std::polar(0.7, 0.3);
  CHECK(std::abs(splitting(chi_hat(z)) - z) < 1e-12);
  CHECK(splitting(FormalSum()) == cplx(1.0, 0.0));
  CHECK(std::abs(splitting(kappa_hat()) + 1.0) < 1e-12);
  Sampler s(45);
  for (int k = 0; k < 500; ++k) {
    const cplx w = s.nonzero(1e-3, 1e3);
    CHECK(std::abs(splitting(chi_hat(w)) - w) <= 1e-10 * std::abs(w));
    const cplx want = cplx(0, 2 * pi) * std::log(w);
    CHECK((eval_lhat(chi_hat(w)) - CmodZ2(want)).magnitude() < 1e-10);
  }
}

TEST_CASE("roots of unity") {
  for (const double alpha : {1.0 / 2, 1.0 / 3, 2.0 / 3, 1.0 / 4, 3.0 / 4, 1.0 / 6, 5.0 / 6, 1.0 / 12}) {
    CAPTURE(alpha);
    const auto v = eval_lhat(chi_hat(std::exp(cplx(0, 2 * pi * alpha))));
    CHECK((v - CmodZ2(-z2_period * alpha)).magnitude() < 1e-10);
  }
}

TEST_CASE("root4 convention") {
  CHECK(std::abs(root4(16.0) - 2.0) < 1e-15);
  CHECK(std::abs(root4(-1.0) - std::exp(cplx(0, pi / 4))) < 1e-15);
  CHECK(std::abs(root4(I) - std::exp(cplx(0, pi / 8))) < 1e-15);
  CHECK(std::abs(root4(cplx(-1.0, -1e-3)) - std::exp(cplx(0, -pi / 4))) < 1e-3);
}

TEST_CASE("symmetry relations") {
  const FormalSum five = symmetry_relation({0.3, 0.4}, 0, 0, 5);
  const cplx z{0.3, 0.4};
  CHECK(five == gen(1.0 - z, Side::interior, 0, 0) + gen(z, Side::interior, 0, 0) -
                    chi_hat(std::exp(cplx(0, pi / 12))));
  CHECK(lhat_norm(five) < 1e-9);
  CHECK(lhat_norm(symmetry_relation(I, 1, 0, 1)) < 1e-9);
  CHECK(lhat_norm(symmetry_relation({0.0, 2.0}, 0, 1, 3)) < 1e-9);
  CHECK_THROWS_AS(symmetry_relation({0.3, -0.4}, 0, 0, 1), DomainError);
  CHECK_THROWS_AS(symmetry_relation({0.3, 0.4}, 0, 0, 6), DomainError);
}

TEST_CASE("index decomposition over the four corners") {
  Sampler s(46);
  for (int k = 0; k < 300; ++k) {
    const CutPoint z = s.cut_point();
    const Index p = s.integer(-5, 5), q = s.integer(-5, 5);
    const auto g = [&](Index a, Index b) { return FormalSum(FlattenedNumber(z, a, b)); };
    const FormalSum corners = p * q * g(1, 1) - p * (q - 1) * g(1, 0) - (p - 1) * q * g(0, 1) +
                              (p - 1) * (q - 1) * g(0, 0);
    CHECK((eval_lhat(g(p, q)) - eval_lhat(corners)).magnitude() < 1e-9);
  }
}

TEST_CASE("all relation sweeps pass") {
  for (const Relation r : all_relations()) {
    CAPTURE(relation_name(r));
    SweepConfig cfg;
    cfg.relation = r;
    cfg.samples = 500;
    cfg.seed = 47;
    const SweepReport rep = run_sweep(cfg);
    CHECK(rep.passed());
    CHECK(rep.max_residual <= 1e-9);
  }
}
