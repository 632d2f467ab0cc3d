#include "crn/exactq.hpp"

#include "crn/simplex.hpp"

namespace crn {

std::optional<RationalVector> solve_strict_positive_kernel(const RationalMatrix& a) {
  const auto cols = static_cast<std::size_t>(a.cols());
  if (cols == 0) return RationalVector(0);
  Simplex lp(a);
  for (std::size_t j = 0; j < cols; ++j) lp.set_lower(j, Rational(1));
  for (Eigen::Index i = 0; i < a.rows(); ++i) lp.fix(lp.row_variable(static_cast<std::size_t>(i)), Rational(0));
  if (!lp.check()) return std::nullopt;

  RationalVector m = lp.structural_values();
  const RationalVector residual = a * m;
  for (Eigen::Index i = 0; i < residual.size(); ++i) {
    if (residual(i) != 0) throw Error("InternalError", "kernel witness failed verification");
  }
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    if (m(j) <= 0) throw Error("InternalError", "kernel witness is not strictly positive");
  }
  return m;
}

IntVector integerize_positive(const RationalVector& m) {
  BigInt lcm = 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) <= 0) {
      throw Error("NonPositiveEntry", "entry " + std::to_string(i) + " is not strictly positive");
    }
    lcm = mp::lcm(lcm, denominator_of(m(i)));
  }
  IntVector out(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    out(i) = numerator_of(m(i)) * (lcm / denominator_of(m(i)));
  }
  return out;
}

std::optional<IntVector> mass_vector(const Network& network) {
  const auto a = stoichiometric_matrix(network);
  auto m = solve_strict_positive_kernel(to_rational(a.entries));
  if (!m) return std::nullopt;
  return integerize_positive(*m);
}

}  // namespace crn
