#include "crn/ip.hpp"

#include "crn/simplex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crn {

IpInstance crn_to_ip(const Network& network, const std::vector<SpeciesIndex>& atoms) {
  const std::size_t m = network.species_count();
  std::set<SpeciesIndex> atom_set(atoms.begin(), atoms.end());
  if (atoms.empty() || atom_set.size() != atoms.size() || atom_set.size() >= m ||
      *atom_set.rbegin() >= m) {
    throw ValidationError("InvalidAtomSet",
                          "atoms must be a nonempty proper subset of the species without repeats");
  }
  const std::size_t n = atom_set.size();

  IpInstance ip;
  ip.molecule_count = m - n;
  ip.atom_count = n;
  for (SpeciesIndex s = 0; s < m; ++s) {
    if (!atom_set.count(s)) ip.order.push_back(s);
  }
  ip.order.insert(ip.order.end(), atom_set.begin(), atom_set.end());

  const StoichMatrix a = stoichiometric_matrix(network);
  const std::size_t k = network.reaction_count();
  const std::size_t vars = m * n + m;
  const std::size_t rows = n * k + m + n * n;
  ip.matrix = IntMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(vars));
  ip.rhs = IntVector::Zero(static_cast<Eigen::Index>(rows));

  auto at = [&](std::size_t r, std::size_t c) -> BigInt& {
    return ip.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  };
  auto rhs = [&](std::size_t r) -> BigInt& { return ip.rhs(static_cast<Eigen::Index>(r)); };

  std::size_t row = 0;
  for (std::size_t atom = 0; atom < n; ++atom) {
    for (std::size_t t = 0; t < k; ++t, ++row) {
      for (std::size_t s = 0; s < m; ++s) {
        at(row, ip.x_index(s, atom)) =
            a.entries(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(ip.order[s]));
      }
    }
  }
  for (std::size_t s = 0; s < m - n; ++s, ++row) {
    for (std::size_t atom = 0; atom < n; ++atom) at(row, ip.x_index(s, atom)) = 1;
    at(row, m * n + s) = -1;
    rhs(row) = 2;
  }
  for (std::size_t atom = 0; atom < n; ++atom, ++row) {
    for (std::size_t s = 0; s < m - n; ++s) at(row, ip.x_index(s, atom)) = 1;
    at(row, m * n + (m - n) + atom) = -1;
    rhs(row) = 1;
  }
  for (std::size_t other = 0; other < n; ++other) {
    for (std::size_t atom = 0; atom < n; ++atom, ++row) {
      at(row, ip.x_index(m - n + other, atom)) = 1;
      rhs(row) = other == atom ? 1 : 0;
    }
  }

  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t atom = 0; atom < n; ++atom) {
      ip.labels.push_back("x." + network.name(ip.order[s]) + "." +
                          network.name(ip.order[m - n + atom]));
    }
  }
  for (std::size_t s = 0; s < m - n; ++s) ip.labels.push_back("b." + network.name(ip.order[s]));
  for (std::size_t atom = 0; atom < n; ++atom) {
    ip.labels.push_back("c." + network.name(ip.order[m - n + atom]));
  }

  BigInt max_coef = 0;
  for (const auto& rx : network.reactions()) {
    for (const auto* side : {&rx.reactants, &rx.products}) {
      for (const auto& term : side->terms()) max_coef = std::max(max_coef, term.second);
    }
  }
  ip.default_bound = BigInt(n) * (1 + max_coef) * BigInt(m);
  return ip;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const IpInstance& ip, BigInt bound, std::size_t node_limit)
      : lp_(to_rational(ip.matrix)), bound_(std::move(bound)), node_limit_(node_limit) {
    for (std::size_t j = 0; j < lp_.structural_count(); ++j) lp_.set_lower(j, Rational(0));
    for (Eigen::Index i = 0; i < ip.rhs.size(); ++i) {
      lp_.fix(lp_.row_variable(static_cast<std::size_t>(i)), Rational(ip.rhs(i)));
    }
  }

  IpOutcome run() {
    IpOutcome out;
    const bool found = search();
    out.nodes = nodes_;
    if (found) {
      out.answer = Answer::yes;
      out.assignment = solution_;
    } else {
      out.answer = (incomplete_ || exhausted_) ? Answer::unknown : Answer::no;
    }
    return out;
  }

 private:
  bool search() {
    if (++nodes_ > node_limit_) {
      exhausted_ = true;
      return false;
    }
    if (!lp_.check()) return false;

    std::size_t branch = lp_.structural_count();
    for (std::size_t j = 0; j < lp_.structural_count(); ++j) {
      if (!is_integral(lp_.value(j))) {
        branch = j;
        break;
      }
    }
    if (branch == lp_.structural_count()) {
      solution_.resize(static_cast<Eigen::Index>(lp_.structural_count()));
      for (std::size_t j = 0; j < lp_.structural_count(); ++j) {
        solution_(static_cast<Eigen::Index>(j)) = numerator_of(lp_.value(j));
      }
      return true;
    }

    BigInt split = floor_of(lp_.value(branch));
    if (split > bound_) split = bound_;

    const std::size_t mark = lp_.mark();
    lp_.set_upper(branch, Rational(split));
    const bool down = search();
    lp_.restore(mark);
    if (down) return true;
    if (exhausted_) return false;

    lp_.set_lower(branch, Rational(split + 1));
    bool up = false;
    if (split + 1 > bound_) {
      // Beyond the search bound: only an infeasibility proof closes the branch.
      if (lp_.check()) incomplete_ = true;
    } else {
      up = search();
    }
    lp_.restore(mark);
    return up;
  }

  Simplex lp_;
  BigInt bound_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  bool incomplete_ = false;
  bool exhausted_ = false;
  IntVector solution_;
};

}  // namespace

IpOutcome ip_feasible(const IpInstance& instance, std::optional<BigInt> bound,
                      std::size_t node_limit) {
  BigInt b = bound.value_or(instance.default_bound);
  if (b < 0) b = 0;
  BranchAndBound bb(instance, std::move(b), node_limit);
  IpOutcome out = bb.run();
  if (out.answer == Answer::yes) {
    const IntVector residual = instance.matrix * out.assignment - instance.rhs;
    for (Eigen::Index i = 0; i < residual.size(); ++i) {
      if (residual(i) != 0) throw Error("InternalError", "IP solution failed verification");
    }
    for (Eigen::Index i = 0; i < out.assignment.size(); ++i) {
      if (out.assignment(i) < 0) throw Error("InternalError", "IP solution is negative");
    }
  }
  return out;
}

std::string export_lp(const IpInstance& instance) {
  std::ostringstream os;
  os << "\\ feasibility system: " << instance.matrix.rows() << " equations over "
     << instance.matrix.cols() << " variables\n";
  os << "Minimize\n obj: 0 " << (instance.labels.empty() ? "x" : instance.labels.front()) << "\n";
  os << "Subject To\n";
  for (Eigen::Index i = 0; i < instance.matrix.rows(); ++i) {
    os << " e" << (i + 1) << ":";
    bool any = false;
    for (Eigen::Index j = 0; j < instance.matrix.cols(); ++j) {
      const BigInt& c = instance.matrix(i, j);
      if (c == 0) continue;
      os << (c < 0 ? " - " : (any ? " + " : " "));
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (mag != 1) os << mag << " ";
      os << instance.labels[static_cast<std::size_t>(j)];
      any = true;
    }
    if (!any) os << " 0 " << instance.labels.front();
    os << " = " << instance.rhs(i) << "\n";
  }
  os << "Bounds\n";
  for (const auto& l : instance.labels) os << " " << l << " >= 0\n";
  os << "General\n";
  for (const auto& l : instance.labels) os << " " << l << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace crn
