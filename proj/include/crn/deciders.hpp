#ifndef CRN_DECIDERS_HPP
#define CRN_DECIDERS_HPP

#include "crn/answer.hpp"
#include "crn/ip.hpp"
#include "crn/model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crn {

/// Atom set Delta plus D, one row d_S per species (Lambda order) and one
/// column per atom.
struct DecompositionWitness {
  std::vector<std::string> atoms;
  IntMatrix matrix;

  const IntMatrix& rows() const noexcept { return matrix; }
};

enum class AtomicClass { primitive, subset, reachable, reversible };

struct Verdict {
  std::string query;
  Answer answer = Answer::unknown;
  std::optional<DecompositionWitness> witness;
  std::optional<std::string> diagnosis;
  std::vector<std::pair<std::string, std::string>> details;
};

// Rejection labels for reachably-atomic No verdicts.
inline constexpr const char* kNoSeparation = "NoSeparation";
inline constexpr const char* kNoDirectDecomposer = "NoDirectDecomposer";
inline constexpr const char* kDegenerateDecomposition = "DegenerateDecomposition";
inline constexpr const char* kStuckMolecule = "StuckMolecule";
inline constexpr const char* kAtomsNotConserved = "AtomsNotConserved";
inline constexpr const char* kRedundantAtom = "RedundantAtom";
inline constexpr const char* kNotRecomposable = "NotRecomposable";

/// Checks the algebraic conditions of the class: shape, nonnegativity,
/// nonzero rows, A.D = 0, atom usage, and for subset classes d_A = e_A with
/// molecules of size >= 2. Returns the first violated condition.
std::optional<std::string> check_witness_algebra(const Network& network,
                                                 const DecompositionWitness& witness,
                                                 AtomicClass cls);

/// Algebraic check plus, for the reachable classes, explicit BFS searches
/// {1S} =>* d_S (and d_S =>* {1S} for the reversible class).
std::optional<std::string> check_witness(const Network& network,
                                         const DecompositionWitness& witness,
                                         AtomicClass cls, std::size_t max_states = 100'000);

/// Throws EmptyReactionSet when R is empty.
Verdict decide_primitive_atomic(const Network& network);

/// Throws InvalidAtomSet (also for unknown atom names).
Verdict decide_subset_fixed_atomic(const Network& network, const std::vector<std::string>& atoms,
                                   std::optional<BigInt> ip_bound = std::nullopt);

Verdict decide_subset_atomic(const Network& network,
                             std::optional<BigInt> ip_bound = std::nullopt);

Verdict decide_reachably_atomic(const Network& network);

Verdict decide_reversibly_reachably_atomic(const Network& network);

/// Species S with some reaction whose reactant side is exactly {1S}.
std::vector<SpeciesIndex> unary_reactant_species(const Network& network);

}  // namespace crn

#endif  // CRN_DECIDERS_HPP
