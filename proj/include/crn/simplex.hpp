#ifndef CRN_SIMPLEX_HPP
#define CRN_SIMPLEX_HPP

#include "crn/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace crn {

/// Bounded-variable simplex over exact rationals in the general form used by
/// SMT solvers: every constraint row defines a slack variable s_i = row_i . x,
/// and all restrictions are bounds on variables. Bland's rule guarantees
/// termination. Bounds can be saved and restored for branch-and-bound.
class Simplex {
 public:
  /// Variables 0..cols-1 are the structural ones; variable cols+i is row i.
  explicit Simplex(const RationalMatrix& rows);

  std::size_t structural_count() const noexcept { return structural_; }
  std::size_t variable_count() const noexcept { return beta_.size(); }
  std::size_t row_variable(std::size_t row) const noexcept { return structural_ + row; }

  void set_lower(std::size_t var, const Rational& value);
  void set_upper(std::size_t var, const Rational& value);
  void fix(std::size_t var, const Rational& value) {
    set_lower(var, value);
    set_upper(var, value);
  }

  const std::optional<Rational>& lower(std::size_t var) const { return lower_[var]; }
  const std::optional<Rational>& upper(std::size_t var) const { return upper_[var]; }

  /// Restores feasibility of the current bounds; false when infeasible.
  bool check();

  const Rational& value(std::size_t var) const { return beta_[var]; }
  RationalVector structural_values() const;

  /// Bound checkpointing.
  std::size_t mark() const noexcept { return trail_.size(); }
  void restore(std::size_t mark);

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  struct Saved {
    std::size_t var;
    bool is_lower;
    std::optional<Rational> old;
  };

  bool below_lower(std::size_t var) const;
  bool above_upper(std::size_t var) const;
  void update_nonbasic(std::size_t var, const Rational& value);
  void pivot_and_update(std::size_t row, std::size_t col, const Rational& value);

  std::size_t structural_;
  RationalMatrix tableau_;           // basic_[i] = sum_j tableau_(i,j) * nonbasic_[j]
  std::vector<std::size_t> basic_;   // row -> variable
  std::vector<std::size_t> nonbasic_;  // column -> variable
  std::vector<long> row_of_;         // variable -> row, or -1
  std::vector<long> col_of_;         // variable -> column, or -1
  std::vector<Rational> beta_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Saved> trail_;
  std::size_t pivots_ = 0;
};

}  // namespace crn

#endif  // CRN_SIMPLEX_HPP
