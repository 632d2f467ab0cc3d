#include "crn/simplex.hpp"

#include <algorithm>

namespace crn {

Simplex::Simplex(const RationalMatrix& rows)
    : structural_(static_cast<std::size_t>(rows.cols())),
      tableau_(rows),
      beta_(static_cast<std::size_t>(rows.cols() + rows.rows()), Rational(0)),
      lower_(beta_.size()),
      upper_(beta_.size()) {
  const std::size_t m = static_cast<std::size_t>(rows.rows());
  row_of_.assign(beta_.size(), -1);
  col_of_.assign(beta_.size(), -1);
  for (std::size_t j = 0; j < structural_; ++j) {
    nonbasic_.push_back(j);
    col_of_[j] = static_cast<long>(j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    basic_.push_back(structural_ + i);
    row_of_[structural_ + i] = static_cast<long>(i);
  }
}

bool Simplex::below_lower(std::size_t var) const {
  return lower_[var] && beta_[var] < *lower_[var];
}

bool Simplex::above_upper(std::size_t var) const {
  return upper_[var] && beta_[var] > *upper_[var];
}

void Simplex::update_nonbasic(std::size_t var, const Rational& value) {
  const Rational delta = value - beta_[var];
  if (delta == 0) return;
  const auto col = static_cast<Eigen::Index>(col_of_[var]);
  for (std::size_t r = 0; r < basic_.size(); ++r) {
    const Rational& c = tableau_(static_cast<Eigen::Index>(r), col);
    if (c != 0) beta_[basic_[r]] += c * delta;
  }
  beta_[var] = value;
}

void Simplex::set_lower(std::size_t var, const Rational& value) {
  if (lower_[var] && *lower_[var] >= value) return;
  trail_.push_back({var, true, lower_[var]});
  lower_[var] = value;
  if (col_of_[var] >= 0 && beta_[var] < value && !(upper_[var] && *upper_[var] < value)) {
    update_nonbasic(var, value);
  }
}

void Simplex::set_upper(std::size_t var, const Rational& value) {
  if (upper_[var] && *upper_[var] <= value) return;
  trail_.push_back({var, false, upper_[var]});
  upper_[var] = value;
  if (col_of_[var] >= 0 && beta_[var] > value && !(lower_[var] && *lower_[var] > value)) {
    update_nonbasic(var, value);
  }
}

void Simplex::restore(std::size_t mark) {
  while (trail_.size() > mark) {
    Saved s = std::move(trail_.back());
    trail_.pop_back();
    (s.is_lower ? lower_ : upper_)[s.var] = std::move(s.old);
    if (col_of_[s.var] >= 0) {
      if (below_lower(s.var)) update_nonbasic(s.var, *lower_[s.var]);
      if (above_upper(s.var)) update_nonbasic(s.var, *upper_[s.var]);
    }
  }
}

void Simplex::pivot_and_update(std::size_t row, std::size_t col, const Rational& value) {
  const auto i = static_cast<Eigen::Index>(row);
  const auto j = static_cast<Eigen::Index>(col);
  const std::size_t xi = basic_[row];
  const std::size_t xj = nonbasic_[col];
  const Rational a = tableau_(i, j);

  const Rational theta = (value - beta_[xi]) / a;
  beta_[xi] = value;
  beta_[xj] += theta;
  for (std::size_t r = 0; r < basic_.size(); ++r) {
    if (r == row) continue;
    const Rational& c = tableau_(static_cast<Eigen::Index>(r), j);
    if (c != 0) beta_[basic_[r]] += c * theta;
  }

  const Rational inv = Rational(1) / a;
  for (Eigen::Index k = 0; k < tableau_.cols(); ++k) {
    if (k == j) {
      tableau_(i, k) = inv;
    } else if (tableau_(i, k) != 0) {
      tableau_(i, k) = -tableau_(i, k) * inv;
    }
  }
  for (Eigen::Index r = 0; r < tableau_.rows(); ++r) {
    if (r == i) continue;
    const Rational c = tableau_(r, j);
    if (c == 0) continue;
    for (Eigen::Index k = 0; k < tableau_.cols(); ++k) {
      if (k == j) {
        tableau_(r, k) = c * tableau_(i, k);
      } else if (tableau_(i, k) != 0) {
        tableau_(r, k) += c * tableau_(i, k);
      }
    }
  }

  basic_[row] = xj;
  nonbasic_[col] = xi;
  row_of_[xj] = static_cast<long>(row);
  col_of_[xj] = -1;
  row_of_[xi] = -1;
  col_of_[xi] = static_cast<long>(col);
  ++pivots_;
}

bool Simplex::check() {
  for (std::size_t v = 0; v < beta_.size(); ++v) {
    if (lower_[v] && upper_[v] && *lower_[v] > *upper_[v]) return false;
  }
  for (;;) {
    std::size_t best_row = basic_.size();
    for (std::size_t r = 0; r < basic_.size(); ++r) {
      const std::size_t x = basic_[r];
      if ((below_lower(x) || above_upper(x)) &&
          (best_row == basic_.size() || x < basic_[best_row])) {
        best_row = r;
      }
    }
    if (best_row == basic_.size()) return true;

    const std::size_t xi = basic_[best_row];
    const bool raise = below_lower(xi);
    const auto i = static_cast<Eigen::Index>(best_row);
    std::size_t best_col = nonbasic_.size();
    for (std::size_t c = 0; c < nonbasic_.size(); ++c) {
      const Rational& a = tableau_(i, static_cast<Eigen::Index>(c));
      if (a == 0) continue;
      const std::size_t xj = nonbasic_[c];
      const bool can_grow = !upper_[xj] || beta_[xj] < *upper_[xj];
      const bool can_shrink = !lower_[xj] || beta_[xj] > *lower_[xj];
      const bool ok = raise ? ((a > 0 && can_grow) || (a < 0 && can_shrink))
                            : ((a < 0 && can_grow) || (a > 0 && can_shrink));
      if (ok && (best_col == nonbasic_.size() || xj < nonbasic_[best_col])) best_col = c;
    }
    if (best_col == nonbasic_.size()) return false;
    pivot_and_update(best_row, best_col, raise ? *lower_[xi] : *upper_[xi]);
  }
}

RationalVector Simplex::structural_values() const {
  RationalVector out(static_cast<Eigen::Index>(structural_));
  for (std::size_t j = 0; j < structural_; ++j) out(static_cast<Eigen::Index>(j)) = beta_[j];
  return out;
}

}  // namespace crn
