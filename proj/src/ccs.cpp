#include "bloch/ccs.hpp"

#include <fstream>
#include <sstream>

#include "bloch/errors.hpp"
#include "bloch/text_io.hpp"

namespace bloch {
namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int parse_sign(const std::string& tok, std::size_t lineno) {
  if (tok == "1" || tok == "+1") return 1;
  if (tok == "-1") return -1;
  throw ParseError(lineno, "sign must be +1 or -1, got '" + tok + "'");
}

}  // namespace

FlattenedTriangulation load_triangulation(std::istream& in) {
  FlattenedTriangulation t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body.rfind("name:", 0) == 0) {
      t.name = trim(body.substr(5));
      continue;
    }
    const auto fields = split_fields(body);
    if (fields.size() != 6) throw ParseError(lineno, "expected 'sign z_re z_im side p q'");
    const int sign = parse_sign(fields[0], lineno);
    cplx z;
    Index p = 0, q = 0;
    try {
      z = {parse_real(fields[1]), parse_real(fields[2])};
      p = parse_index(fields[4]);
      q = parse_index(fields[5]);
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
    const std::size_t index = t.simplices.size();
    if (fields[3] != "i" && fields[3] != "a") {
      throw ValidationError(index, lineno, "side must be 'i' or 'a', got '" + fields[3] + "'");
    }
    try {
      t.simplices.push_back(Simplex{FlattenedNumber(z, parse_side(fields[3]), p, q), sign, lineno});
    } catch (const DomainError& e) {
      throw ValidationError(index, lineno, e.what());
    }
  }
  if (t.simplices.empty()) throw ParseError(0, "no simplices in input");
  return t;
}

FlattenedTriangulation load_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return load_triangulation(in);
}

CmodZ2 complex_volume(const FlattenedTriangulation& t, Precision precision) {
  std::vector<WeightedGenerator> terms;
  terms.reserve(t.simplices.size());
  for (const auto& s : t.simplices) terms.push_back({s.sign, s.shape});
  return rogers_l_hat_sum(terms, precision);
}

CcsReport ccs_report(const FlattenedTriangulation& t, Precision precision) {
  CcsReport r;
  r.name = t.name;
  r.simplices = t.simplices.size();
  r.value = complex_volume(t, precision);
  r.value_mod_transfer = reduce_mod_transfer(r.value);
  r.split = std::exp(r.value.value() / cplx(0.0, 2 * pi)) + cplx(0.0, 0.0);
  r.precision = precision;
  return r;
}

std::string format_text(const CcsReport& r) {
  std::ostringstream os;
  os.precision(15);
  if (!r.name.empty()) os << "name:              " << r.name << '\n';
  os << "simplices:         " << r.simplices << '\n'
     << "precision:         " << (r.precision == Precision::high ? "high" : "double") << '\n'
     << "value_re:          " << r.value.real() << '\n'
     << "value_im:          " << r.value.imag() << '\n'
     << "value_mod_2pi2_re: " << r.value_mod_transfer.real() << '\n'
     << "split_re:          " << r.split.real() << '\n'
     << "split_im:          " << r.split.imag() << '\n'
     << "note: value is sum sign*L in C/4pi^2Z; the imaginary part carries the volume "
        "contribution\n";
  return os.str();
}

nlohmann::json to_json(const CcsReport& r) {
  return {
      {"name", r.name},
      {"simplices", r.simplices},
      {"precision", r.precision == Precision::high ? "high" : "double"},
      {"value_re", r.value.real()},
      {"value_im", r.value.imag()},
      {"value_mod_2pi2_re", r.value_mod_transfer.real()},
      {"split_re", r.split.real()},
      {"split_im", r.split.imag()},
  };
}

}  // namespace bloch
