#ifndef CRN_NUMERIC_HPP
#define CRN_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace crn {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the types behave as plain values
// inside Eigen's own expression machinery.
using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

inline BigInt numerator_of(const Rational& q) { return mp::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return mp::denominator(q); }

inline bool is_integral(const Rational& q) { return mp::denominator(q) == 1; }

/// Largest integer not above q.
inline BigInt floor_of(const Rational& q) {
  BigInt num = mp::numerator(q);
  BigInt den = mp::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

/// Converts an exact integer to int64 when it fits.
bool fits_int64(const BigInt& v);

/// Promotes an integer matrix to rationals.
inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

}  // namespace crn

#endif  // CRN_NUMERIC_HPP
