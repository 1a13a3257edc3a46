#ifndef POLYSPHERE_RATIONAL_HPP
#define POLYSPHERE_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace polysphere {

/// Exact rational scalar. Expression templates are disabled so that `auto`
/// and Eigen's internal temporaries always hold concrete values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<Rational>;
using Mat = MatrixX<Rational>;

/// Parses "p", "-p", "+p" or "p/q". Decimal points and exponents are rejected.
/// Throws ParseError (kind MalformedRational) with `column` offset on failure.
Rational parse_rational(std::string_view token, int line = 0, int column = 0);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Vec& v, std::string_view sep = " ");

/// "(a, b, c)"
std::string format_point(const Vec& v);

Vec make_vec(std::initializer_list<Rational> coords);
Mat rows_to_matrix(const std::vector<Vec>& rows, Eigen::Index cols);
std::vector<Vec> matrix_rows(const Mat& m);

/// Lexicographic order on coordinates; used everywhere a canonical order
/// of points is needed.
bool lex_less(const Vec& a, const Vec& b);

double to_double(const Rational& r);

}  // namespace polysphere

#endif  // POLYSPHERE_RATIONAL_HPP
