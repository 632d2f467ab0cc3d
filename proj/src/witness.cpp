#include "crn/deciders.hpp"

#include "crn/reach.hpp"

#include <algorithm>
#include <set>

namespace crn {
namespace {

std::string row_name(const Network& network, std::size_t s) {
  return "d_" + network.name(s);
}

}  // namespace

std::optional<std::string> check_witness_algebra(const Network& network,
                                                 const DecompositionWitness& witness,
                                                 AtomicClass cls) {
  const auto& d = witness.matrix;
  const std::size_t m = network.species_count();
  const std::size_t n = witness.atoms.size();
  if (n == 0) return "atom set is empty";
  if (static_cast<std::size_t>(d.rows()) != m || static_cast<std::size_t>(d.cols()) != n) {
    return "decomposition matrix has the wrong shape";
  }
  if (std::set<std::string>(witness.atoms.begin(), witness.atoms.end()).size() != n) {
    return "atom names repeat";
  }
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (d(i, j) < 0) return row_name(network, static_cast<std::size_t>(i)) + " has a negative entry";
      if (d(i, j) != 0) nonzero = true;
    }
    if (!nonzero) return row_name(network, static_cast<std::size_t>(i)) + " is zero";
  }

  // A.D = 0, one reaction at a time over the reaction's support.
  for (const auto& rx : network.reactions()) {
    std::vector<BigInt> balance(n, BigInt(0));
    for (const auto& [s, k] : rx.products.terms()) {
      for (std::size_t j = 0; j < n; ++j) balance[j] += k * d(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
    }
    for (const auto& [s, k] : rx.reactants.terms()) {
      for (std::size_t j = 0; j < n; ++j) balance[j] -= k * d(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
    }
    for (const auto& b : balance) {
      if (b != 0) return "reaction " + format_reaction(network, rx) + " does not conserve atoms";
    }
  }

  if (cls == AtomicClass::primitive) {
    for (std::size_t j = 0; j < n; ++j) {
      bool used = false;
      for (std::size_t s = 0; s < m && !used; ++s) used = d(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) != 0;
      if (!used) return "atom " + witness.atoms[j] + " is unused";
    }
    return std::nullopt;
  }

  std::vector<bool> is_atom(m, false);
  std::vector<SpeciesIndex> atom_species;
  for (const auto& name : witness.atoms) {
    auto s = network.find(name);
    if (!s) return "atom " + name + " is not a species";
    is_atom[*s] = true;
    atom_species.push_back(*s);
  }
  if (n >= m) return "atom set is not a proper subset of the species";
  for (std::size_t j = 0; j < n; ++j) {
    const auto s = static_cast<Eigen::Index>(atom_species[j]);
    for (std::size_t k = 0; k < n; ++k) {
      if (d(s, static_cast<Eigen::Index>(k)) != (j == k ? 1 : 0)) {
        return row_name(network, atom_species[j]) + " is not the unit vector of its atom";
      }
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (is_atom[s]) continue;
    BigInt size = 0;
    for (std::size_t j = 0; j < n; ++j) size += d(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
    if (size < 2) return row_name(network, s) + " has fewer than two atoms";
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool used = false;
    for (std::size_t s = 0; s < m && !used; ++s) {
      used = !is_atom[s] && d(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) != 0;
    }
    if (!used) return "atom " + witness.atoms[j] + " appears in no molecule";
  }
  return std::nullopt;
}

std::optional<std::string> check_witness(const Network& network,
                                         const DecompositionWitness& witness,
                                         AtomicClass cls, std::size_t max_states) {
  if (auto failure = check_witness_algebra(network, witness, cls)) return failure;
  if (cls != AtomicClass::reachable && cls != AtomicClass::reversible) return std::nullopt;

  std::vector<SpeciesIndex> atom_species;
  for (const auto& name : witness.atoms) atom_species.push_back(network.index_of(name));
  for (std::size_t s = 0; s < network.species_count(); ++s) {
    if (std::find(atom_species.begin(), atom_species.end(), s) != atom_species.end()) continue;
    std::vector<Configuration::Term> terms;
    for (std::size_t j = 0; j < atom_species.size(); ++j) {
      terms.emplace_back(atom_species[j], witness.matrix(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)));
    }
    const Configuration ds = Configuration::from_terms(std::move(terms));
    const Configuration one = Configuration::unit(s);
    const auto forward = reachable(network, one, ds, max_states);
    if (forward.answer != Answer::yes) {
      return "{1" + network.name(s) + "} does not reach its decomposition";
    }
    if (cls == AtomicClass::reversible) {
      const auto back = reachable(network, ds, one, max_states);
      if (back.answer != Answer::yes) {
        return "decomposition of " + network.name(s) + " does not reach {1" + network.name(s) + "}";
      }
    }
  }
  return std::nullopt;
}

}  // namespace crn
