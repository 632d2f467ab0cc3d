#ifndef CRN_COMPOSITION_HPP
#define CRN_COMPOSITION_HPP

#include "crn/deciders.hpp"
#include "crn/model.hpp"

#include <string>
#include <vector>

namespace crn {

/// E: Lambda -> N^n \ {0}, one row per species in Lambda order.
struct CompositionMap {
  std::size_t n = 0;
  IntMatrix image;

  IntVector of(SpeciesIndex s) const { return image.row(static_cast<Eigen::Index>(s)).transpose(); }
  BigInt weight(SpeciesIndex s) const;
  bool elementary(SpeciesIndex s) const { return weight(s) == 1; }
  bool composite(SpeciesIndex s) const { return weight(s) >= 2; }
};

/// Throws DimensionMismatch or InvalidComposition (negative entry, zero image, n = 0).
void validate_composition(const Network& network, const CompositionMap& e);

/// E~(c) = E^T c.
RationalVector extended_composition_apply(const CompositionMap& e, const RationalVector& c);

struct CompositionCheck {
  bool holds = false;
  std::string reason;

  explicit operator bool() const noexcept { return holds; }
};

/// E~(p - r) = 0 for every reaction and every unit vector is some E(S).
CompositionCheck is_near_core(const Network& network, const CompositionMap& e);

/// Near-core and dim ker E~ = |Lambda| - rank(E) equals rank(A).
CompositionCheck is_core(const Network& network, const CompositionMap& e);

/// X_i = {S : E(S) = e_i}, i = 0..n-1.
std::vector<std::vector<SpeciesIndex>> elementary_isomeric_classes(const CompositionMap& e);

/// Near-core, one-to-one on the elementary preimages, and every coordinate
/// used by some non-elementary species.
CompositionCheck is_atomic_composition(const Network& network, const CompositionMap& e);

/// E(S) = d_S.
CompositionMap associated_composition(const DecompositionWitness& witness);

/// Delta = {E^-1(e_i)} and D = E. Throws NotAtomicComposition unless
/// is_atomic_composition holds.
DecompositionWitness atoms_from_composition(const Network& network, const CompositionMap& e);

/// U = {d_S - e_S : S a molecule} as rows over Lambda.
struct SingleMoleculeVectors {
  std::vector<SpeciesIndex> molecules;
  RationalMatrix vectors;
  Eigen::Index rank = 0;
};

/// Throws InvalidAtomSet when the witness atoms are not species.
SingleMoleculeVectors single_molecule_vectors(const Network& network,
                                              const DecompositionWitness& witness);

struct ConstructibilityRecord {
  bool constructible = false;
  bool destructible = false;
  bool constructive = false;
  bool destructive = false;
};

/// Binding: ||r|| >= 2, ||p|| = 1. Dissociation: the mirror. Isomerization:
/// both sides of size 1. Constructible species are isomerization successors
/// of binding targets; destructible species are isomerization predecessors
/// of dissociation sources.
std::vector<ConstructibilityRecord> explicit_constructibility_report(const Network& network);

/// Core, every composite constructible and destructible, every elementary
/// constructive and destructive.
CompositionCheck is_explicitly_reversibly_constructive(const Network& network,
                                                       const CompositionMap& e);

}  // namespace crn

#endif  // CRN_COMPOSITION_HPP
