#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <string>
#include <string_view>

namespace metaplex {

// Expression templates are disabled so the type composes with Eigen's own.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using SparseRationalMatrix = Eigen::SparseMatrix<Rational>;

/// Parses "p/q", "-p/q" or an integer literal. Throws ParseError otherwise,
/// including for a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

/// Twelve significant digits; "inf" for infinity.
std::string format_real(double value);

}  // namespace metaplex
