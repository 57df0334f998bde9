#pragma once

// Seeded randomized sweeps over the relation generators. Every sample builds
// a relation element, evaluates it with L-hat and records the distance of the
// result from 0 in C / 4 pi^2 Z.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bloch/prebloch.hpp"

namespace bloch {

enum class Relation {
  five_term,
  cycle,
  mirror,
  homo,
  index_q,
  index_p,
  index_pq,
  chi_hom,
  symmetry_1,
  symmetry_2,
  symmetry_3,
  symmetry_4,
  symmetry_5,
  kappa,
  splitting,
};

std::string_view relation_name(Relation r) noexcept;
std::optional<Relation> parse_relation(std::string_view name);
const std::vector<Relation>& all_relations();

struct SweepConfig {
  Relation relation = Relation::five_term;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  double tol = default_tol;
  Index index_bound = 5;
  Precision precision = Precision::standard;
  std::size_t max_echo = 10;  // failing samples echoed in the report
};

struct SweepFailure {
  std::uint64_t sample;
  double residual;
  std::string replay;
};

struct SweepReport {
  Relation relation;
  std::uint64_t seed = 0;
  Precision precision = Precision::standard;
  std::uint64_t samples = 0;
  std::uint64_t failed = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  std::array<std::uint64_t, 3> case_counts{};  // Arg cases -1, 0, +1 (cycle and homo)
  std::vector<SweepFailure> failures;
  bool passed() const noexcept { return failed == 0; }
};

SweepReport run_sweep(const SweepConfig& config);

std::string format_text(const SweepReport& r);
nlohmann::json to_json(const SweepReport& r);

// Deterministic sampling helpers, shared with the tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Index integer(Index lo, Index hi);
  bool coin(double p_true);

  // (x, y) with all five cross-ratios in the upper half plane: Im y in
  // (0.1, 3), x inside the triangle (0, 1, y) with barycentric margin 0.05.
  std::pair<cplx, cplx> ft_plus_pair();

  // Log-uniform modulus in [rmin, rmax], uniform argument.
  cplx nonzero(double rmin, double rmax);
  // Interior point of the box |Re|,|Im| <= 3, or (20%) a boundary point.
  CutPoint cut_point();

 private:
  std::mt19937_64 engine_;
};

}  // namespace bloch
