#pragma once

// Cheeger-Chern-Simons evaluation on flattened triangulation data: the value
// sum sign * L(shape) in C / 4 pi^2 Z. Gluing consistency of the flattenings
// is the caller's responsibility; only individual simplices are validated.
//
// Input format, one simplex per line:
//   sign z_re z_im side p q        sign in {+1,-1}, side in {i, a}
// '#' starts a comment; an optional "name: <string>" line names the data.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bloch/rogers.hpp"

namespace bloch {

struct Simplex {
  FlattenedNumber shape;
  int sign;
  std::size_t line = 0;
};

struct FlattenedTriangulation {
  std::string name;
  std::vector<Simplex> simplices;
};

FlattenedTriangulation load_triangulation(std::istream& in);
FlattenedTriangulation load_triangulation(const std::filesystem::path& path);

CmodZ2 complex_volume(const FlattenedTriangulation& t, Precision precision = Precision::standard);

struct CcsReport {
  std::string name;
  std::size_t simplices = 0;
  CmodZ2 value;
  cplx value_mod_transfer;  // image in C / 2 pi^2 Z
  cplx split;               // exp(value / 2 pi i)
  Precision precision = Precision::standard;
};

CcsReport ccs_report(const FlattenedTriangulation& t, Precision precision = Precision::standard);

std::string format_text(const CcsReport& r);
nlohmann::json to_json(const CcsReport& r);

}  // namespace bloch
