// bloch: evaluate the lifted Rogers dilogarithm, sweep relations, and compute
// complex volumes of flattened triangulation data.
//
//   bloch eval <z_re> <z_im> <side> <p> <q>
//   bloch eval kappa | chi <re> <im> | sum <file|->
//   bloch check <relation> [--samples N] [--seed S] [--tol T] [--index-bound B]
//   bloch ccs <file> [--format text|structured]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "bloch/ccs.hpp"
#include "bloch/errors.hpp"
#include "bloch/sweep.hpp"
#include "bloch/text_io.hpp"

namespace {

using namespace bloch;

enum class Format { text, structured };

struct Options {
  double tol = default_tol;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  Index index_bound = 5;
  Precision precision = Precision::standard;
  Format format = Format::text;
};

FormalSum eval_argument(const std::vector<std::string>& args) {
  if (args.empty()) throw CLI::ValidationError("eval", "expected a generator, 'kappa', 'chi' or 'sum'");
  if (args[0] == "kappa" && args.size() == 1) return kappa_hat();
  if (args[0] == "chi") {
    if (args.size() != 3) throw CLI::ValidationError("eval chi", "expected 'chi <re> <im>'");
    return chi_hat(cplx(parse_real(args[1]), parse_real(args[2])));
  }
  if (args[0] == "sum") {
    if (args.size() != 2) throw CLI::ValidationError("eval sum", "expected 'sum <file|->'");
    if (args[1] == "-") return parse_formal_sum(std::cin);
    std::ifstream in(args[1]);
    if (!in) throw std::runtime_error("cannot open '" + args[1] + "'");
    return parse_formal_sum(in);
  }
  if (args.size() != 5) {
    throw CLI::ValidationError("eval", "a generator is 'z_re z_im side p q'");
  }
  return FormalSum(parse_flattened_number(args));
}

int run_eval(const Options& opt, const std::vector<std::string>& args) {
  const FormalSum s = eval_argument(args);
  const CmodZ2 v = eval_lhat(s, opt.precision);
  const cplx transfer = reduce_mod_transfer(v);
  const cplx split = std::exp(v.value() / cplx(0.0, 2 * pi)) + cplx(0.0, 0.0);  // no -0 in output
  if (opt.format == Format::structured) {
    const nlohmann::json j{{"value_re", v.real()},        {"value_im", v.imag()},
                           {"value_mod_2pi2_re", transfer.real()}, {"split_re", split.real()},
                           {"split_im", split.imag()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout.precision(15);
    std::cout << "value:          " << v.real() << ' ' << v.imag() << '\n'
              << "value_mod_2pi2: " << transfer.real() << ' ' << transfer.imag() << '\n'
              << "split:          " << split.real() << ' ' << split.imag() << '\n';
  }
  return EXIT_SUCCESS;
}

int run_check(const Options& opt, const std::string& name) {
  const auto relation = parse_relation(name);
  if (!relation) {
    std::cerr << "unknown relation '" << name << "'; known:";
    for (const auto r : all_relations()) std::cerr << ' ' << relation_name(r);
    std::cerr << '\n';
    return 2;
  }
  SweepConfig cfg;
  cfg.relation = *relation;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.tol = opt.tol;
  cfg.index_bound = opt.index_bound;
  cfg.precision = opt.precision;
  const SweepReport report = run_sweep(cfg);
  if (opt.format == Format::structured) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << format_text(report);
  }
  return report.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}

int run_ccs(const Options& opt, const std::string& path) {
  const CcsReport report = ccs_report(load_triangulation(std::filesystem::path(path)), opt.precision);
  if (opt.format == Format::structured) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << format_text(report);
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Bloch group and Cheeger-Chern-Simons evaluator"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Precision> precisions{{"double", Precision::standard},
                                                    {"high", Precision::high}};
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"structured", Format::structured}, {"json", Format::structured}};
  app.add_option("--tol", opt.tol, "residual tolerance")->envname("BLOCH_TOL")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "sweep seed");
  app.add_option("--samples", opt.samples, "sweep samples")->check(CLI::PositiveNumber);
  app.add_option("--index-bound", opt.index_bound, "random indices in [-B, B]")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", opt.precision, "double or high (50 digits)")
      ->transform(CLI::CheckedTransformer(precisions, CLI::ignore_case));
  app.add_option("--format", opt.format, "text or structured (JSON)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate L-hat on a generator, kappa, chi(z) or a sum file");
  eval->add_option("args", eval_args, "z_re z_im side p q | kappa | chi re im | sum file")
      ->required();
  eval->prefix_command(false);

  std::string relation;
  auto* check = app.add_subcommand("check", "seeded randomized relation sweep");
  check->add_option("relation", relation, "relation name")->required();

  std::string ccs_path;
  auto* ccs = app.add_subcommand("ccs", "complex volume of a flattened triangulation file");
  ccs->add_option("file", ccs_path, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? EXIT_SUCCESS : 2;
  }

  try {
    if (*eval) return run_eval(opt, eval_args);
    if (*check) return run_check(opt, relation);
    if (*ccs) return run_ccs(opt, ccs_path);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << eval->help();
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
