#pragma once

// Line-oriented text forms shared by the CLI and the ccs input format.
//
//   FlattenedNumber   z_re z_im side p q        side in {i, a, b}
//   FormalSum         one "coeff z_re z_im side p q" line per term
//   CmodZ2            re im                      (re canonical)
//   WedgeExpr         one "coeff a_re a_im b_re b_im" line per term
//
// Numbers are written with 17 significant digits so text round-trips exactly.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bloch/bloch.hpp"

namespace bloch {

char side_token(Side side) noexcept;
Side parse_side(std::string_view token);  // throws DomainError

std::string to_text(const FlattenedNumber& f);
std::string to_text(const CmodZ2& v);
std::string to_text(const FormalSum& s);
std::string to_text(const WedgeExpr& w);

// Single-line form with terms separated by "; ", used to echo failing inputs.
std::string to_inline_text(const FormalSum& s);

// Whole-token numbers; throw DomainError. parse_real rejects inf and nan.
double parse_real(const std::string& token);
Index parse_index(const std::string& token);

std::vector<std::string> split_fields(std::string_view line);

// Exactly five fields.
FlattenedNumber parse_flattened_number(std::span<const std::string> fields);

// "coeff z_re z_im side p q" lines; blank lines and '#' comments ignored.
FormalSum parse_formal_sum(std::istream& in);

}  // namespace bloch
