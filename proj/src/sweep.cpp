#include "bloch/sweep.hpp"

#include <cmath>
#include <sstream>

#include "bloch/errors.hpp"
#include "bloch/text_io.hpp"

namespace bloch {
namespace {

struct NamedRelation {
  Relation relation;
  std::string_view name;
};

constexpr std::array<NamedRelation, 15> relation_names{{
    {Relation::five_term, "five-term"},
    {Relation::cycle, "cycle"},
    {Relation::mirror, "mirror"},
    {Relation::homo, "homo"},
    {Relation::index_q, "index-q"},
    {Relation::index_p, "index-p"},
    {Relation::index_pq, "index-pq"},
    {Relation::chi_hom, "chi-hom"},
    {Relation::symmetry_1, "symmetry-1"},
    {Relation::symmetry_2, "symmetry-2"},
    {Relation::symmetry_3, "symmetry-3"},
    {Relation::symmetry_4, "symmetry-4"},
    {Relation::symmetry_5, "symmetry-5"},
    {Relation::kappa, "kappa"},
    {Relation::splitting, "splitting"},
}};

// Keeps sampled arguments this far from the Arg-case ties at +-pi.
constexpr double tie_margin = 0.02;

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string num(cplx z) { return "(" + num(z.real()) + " " + num(z.imag()) + ")"; }

struct Sample {
  double residual;
  std::string replay;
  int arg_case = 2;  // 2: not applicable
};

Sample relation_sample(const FormalSum& s, Precision precision, std::string prefix = {}) {
  const double r = eval_lhat(s, precision).magnitude();
  return {r, prefix + to_inline_text(s)};
}

cplx with_arg(Sampler& rng, double theta) { return std::polar(std::exp(rng.uniform(std::log(0.3), std::log(3.0))), theta); }

// Two interior points whose Arg sum (sign +1) or difference (sign -1) falls in
// the requested case, away from the tie values.
std::pair<cplx, cplx> arg_pair(Sampler& rng, int target, int sign) {
  for (;;) {
    const double a = rng.uniform(-pi + tie_margin, pi - tie_margin);
    const double b = rng.uniform(-pi + tie_margin, pi - tie_margin);
    const double s = b + sign * a;
    if (arg_case(s) != target) continue;
    if (std::fabs(std::fabs(s) - pi) < tie_margin) continue;
    const cplx x = with_arg(rng, a);
    const cplx y = with_arg(rng, b);
    if (sign < 0 && std::abs(y / x - 1.0) < 0.05) continue;
    if (sign > 0 && std::abs(x * y - 1.0) < 0.05) continue;
    return {x, y};
  }
}

Sample draw(Relation relation, Sampler& rng, std::uint64_t index, const SweepConfig& cfg) {
  const Index b = cfg.index_bound;
  const auto idx = [&] { return rng.integer(-b, b); };
  const Precision prec = cfg.precision;
  switch (relation) {
    case Relation::five_term: {
      const auto [x, y] = rng.ft_plus_pair();
      const Index p0 = idx(), p1 = idx(), q0 = idx(), q1 = idx(), q2 = idx();
      return relation_sample(five_term_element(make_flattened_ft(x, y, p0, p1, q0, q1, q2)), prec);
    }
    case Relation::cycle: {
      const int target = static_cast<int>(index % 3) - 1;
      const auto [x, y] = arg_pair(rng, target, -1);
      const CutPoint px(x, Side::interior);
      const CutPoint py(y, Side::interior);
      const Index p0 = idx(), p1 = idx(), q0 = idx(), q1 = idx(), q2 = idx();
      auto s = relation_sample(cycle_relation(px, py, p0, p1, q0, q1, q2), prec);
      s.arg_case = arg_case(arg(py) - arg(px));
      return s;
    }
    case Relation::homo: {
      const int target = static_cast<int>(index % 3) - 1;
      const auto [z, w] = arg_pair(rng, target, +1);
      CutPoint pz(z, Side::interior);
      if (index % 10 == 9 && target != 0) {
        // Arg z = +-pi exactly; w already has the sign of Arg that keeps the case.
        pz = CutPoint(cplx(-std::abs(z), 0.0), target > 0 ? Side::above : Side::below);
      }
      const CutPoint pw(w, Side::interior);
      const Index p = idx(), r = idx();
      auto s = relation_sample(curly_product_relation(pz, p, pw, r), prec);
      s.arg_case = arg_case(arg(pz) + arg(pw));
      return s;
    }
    case Relation::mirror: {
      const CutPoint z = rng.cut_point();
      const Index p = idx(), q = idx();
      return relation_sample(mirror_relation(z, p, q), prec);
    }
    case Relation::index_q:
    case Relation::index_p:
    case Relation::index_pq: {
      const CutPoint z = rng.cut_point();
      const Index p = idx(), q = idx(), pa = idx();
      Index qa = idx();
      IndexRelation kind = IndexRelation::q;
      if (relation == Relation::index_p) kind = IndexRelation::p;
      if (relation == Relation::index_pq) {
        kind = IndexRelation::pq;
        qa = p + q - pa;
      }
      return relation_sample(index_relation(z, p, q, pa, qa, kind), prec);
    }
    case Relation::chi_hom: {
      cplx z;
      cplx w;
      switch (index % 5) {
        case 0:
          z = rng.nonzero(0.2, 5.0);
          w = rng.nonzero(0.2, 5.0);
          break;
        case 1:
          z = rng.nonzero(1.0, 1.0);
          w = rng.nonzero(1.0, 1.0);
          break;
        case 2:
          z = rng.coin(0.5) ? 1.0 : -1.0;
          w = rng.nonzero(0.2, 5.0);
          if (rng.coin(0.5)) std::swap(z, w);
          break;
        case 3:  // product lands exactly on the negative axis or (1, inf)
          z = cplx(0.0, (rng.coin(0.5) ? 1 : -1) * rng.uniform(0.2, 3.0));
          w = cplx(0.0, (rng.coin(0.5) ? 1 : -1) * rng.uniform(0.2, 3.0));
          break;
        default:
          z = cplx((rng.coin(0.5) ? 1 : -1) * rng.uniform(0.2, 3.0), 0.0);
          w = cplx((rng.coin(0.5) ? 1 : -1) * rng.uniform(0.2, 3.0), 0.0);
          break;
      }
      const FormalSum s = chi_hat(z) + chi_hat(w) - chi_hat(z * w);
      return relation_sample(s, prec, "z=" + num(z) + " w=" + num(w) + " | ");
    }
    case Relation::symmetry_1:
    case Relation::symmetry_2:
    case Relation::symmetry_3:
    case Relation::symmetry_4:
    case Relation::symmetry_5: {
      const int which = static_cast<int>(relation) - static_cast<int>(Relation::symmetry_1) + 1;
      const cplx z(rng.uniform(-3.0, 3.0), rng.uniform(0.05, 3.0));
      const Index p = idx(), q = idx();
      return relation_sample(symmetry_relation(z, p, q, which), prec,
                             "z=" + num(z) + " p=" + std::to_string(p) +
                                 " q=" + std::to_string(q) + " | ");
    }
    case Relation::kappa: {
      const CutPoint z = rng.cut_point();
      const Index p = idx();
      const FormalSum k = kappa_hat(z, p);
      const double d1 = (eval_lhat(k, prec) - CmodZ2(cplx(-2 * pi_sq, 0.0))).magnitude();
      const double d2 = eval_lhat(2 * k, prec).magnitude();
      return {std::max(d1, d2), to_inline_text(k)};
    }
    case Relation::splitting: {
      const cplx z = rng.nonzero(0.05, 20.0);
      const FormalSum c = chi_hat(z);
      const CmodZ2 v = eval_lhat(c, prec);
      const cplx expected = cplx(0.0, 2 * pi) * std::log(z);
      const double d1 = (v - CmodZ2(expected)).magnitude();
      const double d2 = std::abs(splitting(c, prec) - z) / std::abs(z);
      return {std::max(d1, d2), "z=" + num(z) + " | " + to_inline_text(c)};
    }
  }
  throw DomainError("unknown relation");
}

}  // namespace

std::string_view relation_name(Relation r) noexcept {
  for (const auto& n : relation_names) {
    if (n.relation == r) return n.name;
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (const auto& n : relation_names) {
    if (n.name == name) return n.relation;
  }
  return std::nullopt;
}

const std::vector<Relation>& all_relations() {
  static const std::vector<Relation> all = [] {
    std::vector<Relation> v;
    for (const auto& n : relation_names) v.push_back(n.relation);
    return v;
  }();
  return all;
}

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Index Sampler::integer(Index lo, Index hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Index>(engine_() % span);
}

bool Sampler::coin(double p_true) { return uniform(0.0, 1.0) < p_true; }

std::pair<cplx, cplx> Sampler::ft_plus_pair() {
  constexpr double margin = 0.05;
  for (;;) {
    const cplx y(uniform(-2.0, 3.0), uniform(0.1, 3.0));
    double u = uniform(0.0, 1.0);
    double v = uniform(0.0, 1.0);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    if (u < margin || v < margin || 1.0 - u - v < margin) continue;
    const cplx x = u + v * y;  // vertices 0, 1, y
    const auto z = five_term_cross_ratios(x, y);
    bool upper = true;
    for (const cplx w : z) upper = upper && w.imag() > 0;
    if (upper) return {x, y};
  }
}

cplx Sampler::nonzero(double rmin, double rmax) {
  const double r = rmin == rmax ? rmin : std::exp(uniform(std::log(rmin), std::log(rmax)));
  return std::polar(r, uniform(-pi, pi));
}

CutPoint Sampler::cut_point() {
  if (coin(0.2)) {
    const double x = coin(0.5) ? uniform(-5.0, -0.05) : uniform(1.05, 6.0);
    return CutPoint(cplx(x, 0.0), coin(0.5) ? Side::above : Side::below);
  }
  for (;;) {
    const cplx z(uniform(-3.0, 3.0), uniform(-3.0, 3.0));
    if (std::abs(z) > 0.05 && std::abs(z - 1.0) > 0.05 && !on_cut(z)) {
      return CutPoint(z, Side::interior);
    }
  }
}

SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("sweep needs at least one sample");
  if (!(cfg.tol > 0)) throw DomainError("sweep tolerance must be positive");
  if (cfg.index_bound < 0) throw DomainError("index bound must be nonnegative");
  SweepReport report;
  report.relation = cfg.relation;
  report.seed = cfg.seed;
  report.precision = cfg.precision;
  report.samples = cfg.samples;
  report.tol = cfg.tol;
  Sampler rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    const Sample s = draw(cfg.relation, rng, i, cfg);
    if (s.arg_case != 2) ++report.case_counts[static_cast<std::size_t>(s.arg_case + 1)];
    report.max_residual = std::max(report.max_residual, s.residual);
    if (!(s.residual <= cfg.tol)) {
      ++report.failed;
      if (report.failures.size() < cfg.max_echo) report.failures.push_back({i, s.residual, s.replay});
    }
  }
  return report;
}

std::string format_text(const SweepReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << "relation:     " << relation_name(r.relation) << '\n'
     << "samples:      " << r.samples << '\n'
     << "seed:         " << r.seed << '\n'
     << "precision:    " << (r.precision == Precision::high ? "high" : "double") << '\n'
     << "tol:          " << r.tol << '\n'
     << "max_residual: " << r.max_residual << '\n';
  if (r.relation == Relation::cycle || r.relation == Relation::homo) {
    os << "arg_cases:    " << r.case_counts[0] << " " << r.case_counts[1] << " "
       << r.case_counts[2] << '\n';
  }
  os << "failed:       " << r.failed << '\n';
  for (const auto& f : r.failures) {
    os << "FAIL sample " << f.sample << " residual " << f.residual << ": " << f.replay << '\n';
  }
  os << "result:       " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"sample", f.sample}, {"residual", f.residual}, {"replay", f.replay}});
  }
  nlohmann::json j{
      {"relation", std::string(relation_name(r.relation))},
      {"samples", r.samples},
      {"seed", r.seed},
      {"precision", r.precision == Precision::high ? "high" : "double"},
      {"tol", r.tol},
      {"max_residual", r.max_residual},
      {"failed", r.failed},
      {"failures", failures},
      {"passed", r.passed()},
  };
  if (r.relation == Relation::cycle || r.relation == Relation::homo) {
    j["arg_cases"] = {r.case_counts[0], r.case_counts[1], r.case_counts[2]};
  }
  return j;
}

}  // namespace bloch
