#pragma once

// 50-digit evaluation path used by Precision::high.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bloch/dilog.hpp"

namespace bloch::mp {

using real = boost::multiprecision::cpp_bin_float_50;
using complex = boost::multiprecision::cpp_complex_50;

complex principal_log(const CutPoint& p);
complex log_one_minus(const CutPoint& p);
complex li2(const CutPoint& p);

inline complex to_mp(cplx z) { return complex(real(z.real()), real(z.imag())); }
inline cplx to_double(const complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace bloch::mp
