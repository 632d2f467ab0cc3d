#include "crn/composition.hpp"

#include "crn/exactq.hpp"

#include <queue>

namespace crn {

BigInt CompositionMap::weight(SpeciesIndex s) const {
  BigInt total = 0;
  for (Eigen::Index j = 0; j < image.cols(); ++j) total += image(static_cast<Eigen::Index>(s), j);
  return total;
}

void validate_composition(const Network& network, const CompositionMap& e) {
  if (static_cast<std::size_t>(e.image.rows()) != network.species_count() ||
      static_cast<std::size_t>(e.image.cols()) != e.n) {
    throw ValidationError("DimensionMismatch", "composition map does not match the network");
  }
  if (e.n == 0) throw ValidationError("InvalidComposition", "composition dimension must be positive");
  for (std::size_t s = 0; s < network.species_count(); ++s) {
    bool nonzero = false;
    for (std::size_t j = 0; j < e.n; ++j) {
      const BigInt& v = e.image(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
      if (v < 0) throw ValidationError("InvalidComposition", "negative entry for " + network.name(s));
      if (v != 0) nonzero = true;
    }
    if (!nonzero) throw ValidationError("InvalidComposition", network.name(s) + " maps to zero");
  }
}

RationalVector extended_composition_apply(const CompositionMap& e, const RationalVector& c) {
  if (c.size() != e.image.rows()) {
    throw ValidationError("DimensionMismatch", "vector length does not match the species count");
  }
  return to_rational(e.image).transpose() * c;
}

CompositionCheck is_near_core(const Network& network, const CompositionMap& e) {
  validate_composition(network, e);
  const std::size_t m = network.species_count();
  for (const auto& rx : network.reactions()) {
    const IntVector image = e.image.transpose() * rx.delta(m);
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      if (image(i) != 0) {
        return {false, "E~(p-r) != 0 for " + format_reaction(network, rx)};
      }
    }
  }
  const auto classes = elementary_isomeric_classes(e);
  for (std::size_t i = 0; i < e.n; ++i) {
    if (classes[i].empty()) return {false, "e_" + std::to_string(i + 1) + " is not in the range of E"};
  }
  return {true, ""};
}

CompositionCheck is_core(const Network& network, const CompositionMap& e) {
  auto near = is_near_core(network, e);
  if (!near) return near;
  const Eigen::Index ker = static_cast<Eigen::Index>(network.species_count()) - rank_of(to_rational(e.image));
  const Eigen::Index theta = rank_of(to_rational(stoichiometric_matrix(network).entries));
  if (ker != theta) {
    return {false, "dim ker E~ = " + std::to_string(ker) + " but dim span(R) = " + std::to_string(theta)};
  }
  return {true, ""};
}

std::vector<std::vector<SpeciesIndex>> elementary_isomeric_classes(const CompositionMap& e) {
  std::vector<std::vector<SpeciesIndex>> classes(e.n);
  for (Eigen::Index s = 0; s < e.image.rows(); ++s) {
    if (e.weight(static_cast<SpeciesIndex>(s)) != 1) continue;
    for (Eigen::Index j = 0; j < e.image.cols(); ++j) {
      if (e.image(s, j) == 1) classes[static_cast<std::size_t>(j)].push_back(static_cast<SpeciesIndex>(s));
    }
  }
  return classes;
}

CompositionCheck is_atomic_composition(const Network& network, const CompositionMap& e) {
  auto near = is_near_core(network, e);
  if (!near) return near;
  const auto classes = elementary_isomeric_classes(e);
  for (std::size_t i = 0; i < e.n; ++i) {
    if (classes[i].size() > 1) {
      return {false, network.name(classes[i][0]) + " and " + network.name(classes[i][1]) +
                         " are isomeric elementary species"};
    }
  }
  for (std::size_t i = 0; i < e.n; ++i) {
    bool used = false;
    for (std::size_t s = 0; s < network.species_count() && !used; ++s) {
      used = !e.elementary(s) && e.image(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(i)) > 0;
    }
    if (!used) return {false, "coordinate " + std::to_string(i + 1) + " is used by no composite species"};
  }
  return {true, ""};
}

CompositionMap associated_composition(const DecompositionWitness& witness) {
  CompositionMap e;
  e.n = witness.atoms.size();
  e.image = witness.matrix;
  return e;
}

DecompositionWitness atoms_from_composition(const Network& network, const CompositionMap& e) {
  auto ok = is_atomic_composition(network, e);
  if (!ok) throw ValidationError("NotAtomicComposition", ok.reason);
  DecompositionWitness w;
  for (const auto& cls : elementary_isomeric_classes(e)) w.atoms.push_back(network.name(cls.front()));
  w.matrix = e.image;
  return w;
}

SingleMoleculeVectors single_molecule_vectors(const Network& network,
                                              const DecompositionWitness& witness) {
  const std::size_t m = network.species_count();
  std::vector<SpeciesIndex> atoms;
  std::vector<bool> is_atom(m, false);
  for (const auto& name : witness.atoms) {
    auto s = network.find(name);
    if (!s) throw ValidationError("InvalidAtomSet", "atom '" + name + "' is not a species");
    atoms.push_back(*s);
    is_atom[*s] = true;
  }
  SingleMoleculeVectors u;
  for (std::size_t s = 0; s < m; ++s) {
    if (!is_atom[s]) u.molecules.push_back(s);
  }
  u.vectors = RationalMatrix::Zero(static_cast<Eigen::Index>(u.molecules.size()), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < u.molecules.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const auto s = static_cast<Eigen::Index>(u.molecules[i]);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      u.vectors(row, static_cast<Eigen::Index>(atoms[j])) = Rational(witness.matrix(s, static_cast<Eigen::Index>(j)));
    }
    u.vectors(row, s) = -1;
  }
  u.rank = rank_of(u.vectors);
  return u;
}

std::vector<ConstructibilityRecord> explicit_constructibility_report(const Network& network) {
  const std::size_t m = network.species_count();
  std::vector<ConstructibilityRecord> out(m);
  std::vector<std::vector<SpeciesIndex>> forward(m), backward(m);
  std::queue<SpeciesIndex> build, split;
  for (const auto& rx : network.reactions()) {
    const BigInt rs = rx.reactants.size();
    const BigInt ps = rx.products.size();
    if (rs >= 2 && ps == 1) {
      const auto y = *rx.products.single_unit();
      if (!out[y].constructible) {
        out[y].constructible = true;
        build.push(y);
      }
      for (auto x : rx.reactants.support()) out[x].constructive = true;
    } else if (rs == 1 && ps >= 2) {
      const auto y = *rx.reactants.single_unit();
      if (!out[y].destructible) {
        out[y].destructible = true;
        split.push(y);
      }
      for (auto x : rx.products.support()) out[x].destructive = true;
    } else if (rs == 1 && ps == 1) {
      const auto from = *rx.reactants.single_unit();
      const auto to = *rx.products.single_unit();
      forward[from].push_back(to);
      backward[to].push_back(from);
    }
  }
  while (!build.empty()) {
    const auto y = build.front();
    build.pop();
    for (auto z : forward[y]) {
      if (!out[z].constructible) {
        out[z].constructible = true;
        build.push(z);
      }
    }
  }
  while (!split.empty()) {
    const auto y = split.front();
    split.pop();
    for (auto z : backward[y]) {
      if (!out[z].destructible) {
        out[z].destructible = true;
        split.push(z);
      }
    }
  }
  return out;
}

CompositionCheck is_explicitly_reversibly_constructive(const Network& network,
                                                       const CompositionMap& e) {
  auto core = is_core(network, e);
  if (!core) return core;
  const auto report = explicit_constructibility_report(network);
  for (std::size_t s = 0; s < network.species_count(); ++s) {
    const auto& r = report[s];
    if (e.composite(s)) {
      if (!r.constructible) return {false, "composite " + network.name(s) + " is not explicitly constructible"};
      if (!r.destructible) return {false, "composite " + network.name(s) + " is not explicitly destructible"};
    } else {
      if (!r.constructive) return {false, "elementary " + network.name(s) + " is not explicitly constructive"};
      if (!r.destructive) return {false, "elementary " + network.name(s) + " is not explicitly destructive"};
    }
  }
  return {true, ""};
}

}  // namespace crn
