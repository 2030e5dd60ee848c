#pragma once

#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "spectral_cs/operator_core.hpp"

namespace spectral_cs::detail {

// 400 decimal digits cover every solution whose squared radius still fits in
// a double (R_n R_{n+1} < 1e308) with about 60 digits to spare.
inline constexpr unsigned kHighDigits = 400;
inline constexpr int kHighDigitBudget = 340;

using HighReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kHighDigits>,
    boost::multiprecision::et_off>;

}  // namespace spectral_cs::detail

namespace spectral_cs {

struct FundamentalSolutions::Impl {
  std::vector<detail::HighReal> c;
  std::vector<detail::HighReal> s;
};

}  // namespace spectral_cs
