#include "bloch/text_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "bloch/errors.hpp"

namespace bloch {
namespace {

std::ostream& put(std::ostream& os, double v) {
  os << v;
  return os;
}

template <class T>
T parse_number(const std::string& token, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError(std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

double parse_real(const std::string& token) {
  const double v = parse_number<double>(token, "number");
  if (!std::isfinite(v)) throw DomainError("non-finite number '" + token + "'");
  return v;
}

Index parse_index(const std::string& token) { return parse_number<Index>(token, "integer"); }

namespace {

std::ostringstream number_stream() {
  std::ostringstream os;
  os.precision(17);
  return os;
}

void write_generator(std::ostream& os, const FlattenedNumber& f) {
  put(os, f.z().real()) << ' ';
  put(os, f.z().imag()) << ' ' << side_token(f.side()) << ' ' << f.p() << ' ' << f.q();
}

}  // namespace

char side_token(Side side) noexcept {
  switch (side) {
    case Side::above: return 'a';
    case Side::below: return 'b';
    case Side::interior: break;
  }
  return 'i';
}

Side parse_side(std::string_view token) {
  if (token == "i" || token == "interior") return Side::interior;
  if (token == "a" || token == "above") return Side::above;
  if (token == "b" || token == "below") return Side::below;
  throw DomainError("bad side tag '" + std::string(token) + "' (expected i, a or b)");
}

std::string to_text(const FlattenedNumber& f) {
  auto os = number_stream();
  write_generator(os, f);
  return os.str();
}

std::string to_text(const CmodZ2& v) {
  auto os = number_stream();
  put(os, v.real()) << ' ';
  put(os, v.imag());
  return os.str();
}

std::string to_text(const FormalSum& s) {
  auto os = number_stream();
  for (const auto& t : s.terms()) {
    os << t.coeff << ' ';
    write_generator(os, t.gen);
    os << '\n';
  }
  return os.str();
}

std::string to_inline_text(const FormalSum& s) {
  auto os = number_stream();
  bool first = true;
  for (const auto& t : s.terms()) {
    if (!first) os << "; ";
    first = false;
    os << t.coeff << ' ';
    write_generator(os, t.gen);
  }
  return os.str();
}

std::string to_text(const WedgeExpr& w) {
  auto os = number_stream();
  for (const auto& t : w.terms()) {
    os << t.coeff << ' ';
    put(os, t.a.real()) << ' ';
    put(os, t.a.imag()) << ' ';
    put(os, t.b.real()) << ' ';
    put(os, t.b.imag()) << '\n';
  }
  return os.str();
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

FlattenedNumber parse_flattened_number(std::span<const std::string> fields) {
  if (fields.size() != 5) {
    throw DomainError("flattened number needs 5 fields (z_re z_im side p q), got " +
                      std::to_string(fields.size()));
  }
  const cplx z(parse_real(fields[0]), parse_real(fields[1]));
  return FlattenedNumber(z, parse_side(fields[2]), parse_index(fields[3]), parse_index(fields[4]));
}

FormalSum parse_formal_sum(std::istream& in) {
  FormalSum s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 6) {
      throw ParseError(lineno, "expected 'coeff z_re z_im side p q'");
    }
    try {
      const auto coeff = parse_number<Index>(fields[0], "coefficient");
      s.add(parse_flattened_number(std::span(fields).subspan(1)), coeff);
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return s;
}

}  // namespace bloch
