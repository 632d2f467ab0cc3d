#ifndef CRN_MODEL_HPP
#define CRN_MODEL_HPP

#include "crn/errors.hpp"
#include "crn/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crn {

/// Position of a species in the network's canonical ordering.
using SpeciesIndex = std::size_t;

/// Multiset of species: the count vector c in N^Lambda, stored sparsely as
/// (index, count) terms sorted by index with every count > 0.
class Configuration {
 public:
  using Term = std::pair<SpeciesIndex, BigInt>;

  Configuration() = default;

  /// Merges repeated indices and drops zero counts. Throws on negative counts.
  static Configuration from_terms(std::vector<Term> terms);
  static Configuration unit(SpeciesIndex species, BigInt count = 1);
  static Configuration from_dense(const IntVector& counts);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  BigInt count(SpeciesIndex species) const;
  /// ||c||_1
  BigInt size() const;
  /// [c], in index order.
  std::vector<SpeciesIndex> support() const;
  /// Largest index present plus one (0 when empty).
  std::size_t extent() const noexcept {
    return terms_.empty() ? 0 : terms_.back().first + 1;
  }

  /// The species S when this configuration is exactly {1S}.
  std::optional<SpeciesIndex> single_unit() const;

  /// Componentwise c <= other.
  bool fits_in(const Configuration& other) const;

  IntVector dense(std::size_t species_count) const;

  friend Configuration operator+(const Configuration& a, const Configuration& b);
  /// Componentwise a - b; requires b <= a.
  friend Configuration operator-(const Configuration& a, const Configuration& b);
  friend Configuration operator*(const BigInt& k, const Configuration& c);

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend std::strong_ordering operator<=>(const Configuration& a,
                                          const Configuration& b);

 private:
  std::vector<Term> terms_;
};

/// A reaction r -> p. Self-loops (r == p) are rejected by Network.
struct Reaction {
  Configuration reactants;
  Configuration products;

  /// Row of the stoichiometric matrix: p(S) - r(S).
  IntVector delta(std::size_t species_count) const;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Immutable (Lambda, R). Construction validates every invariant.
class Network {
 public:
  Network() = default;
  /// Throws ValidationError: InvalidSpeciesName, DuplicateSpecies,
  /// UnknownSpeciesInReaction, SelfLoopReaction, DuplicateReaction.
  Network(std::vector<std::string> species, std::vector<Reaction> reactions);

  const std::vector<std::string>& species() const noexcept { return species_; }
  const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  std::size_t species_count() const noexcept { return species_.size(); }
  std::size_t reaction_count() const noexcept { return reactions_.size(); }

  const std::string& name(SpeciesIndex s) const { return species_.at(s); }
  std::optional<SpeciesIndex> find(std::string_view name) const;
  /// Throws ValidationError("UnknownSpecies") when absent.
  SpeciesIndex index_of(std::string_view name) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.species_ == b.species_ && a.reactions_ == b.reactions_;
  }

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
  std::unordered_map<std::string, SpeciesIndex> index_;
};

/// Checks the network invariants and returns the validated network.
Network validate_network(std::vector<std::string> species,
                         std::vector<Reaction> reactions);

bool is_valid_species_name(std::string_view name);

/// Accumulates species by first mention and reactions by name, then builds a
/// validated Network. Used by the parser and the instance generators.
class NetworkBuilder {
 public:
  using NamedTerm = std::pair<std::string, BigInt>;

  SpeciesIndex species(const std::string& name);
  bool has_species(const std::string& name) const {
    return index_.count(name) != 0;
  }
  void reaction(const std::vector<NamedTerm>& reactants,
                const std::vector<NamedTerm>& products);
  void reaction(Configuration reactants, Configuration products);

  Network build() const;

 private:
  Configuration complex(const std::vector<NamedTerm>& terms);

  std::vector<std::string> species_;
  std::unordered_map<std::string, SpeciesIndex> index_;
  std::vector<Reaction> reactions_;
};

/// Stoichiometric matrix A: |R| x |Lambda|, A[(r,p),S] = p(S) - r(S).
struct StoichMatrix {
  IntMatrix entries;
  std::vector<std::string> reaction_labels;
  std::vector<std::string> species_labels;
};

StoichMatrix stoichiometric_matrix(const Network& network);

/// c - r + p when r <= c.
std::optional<Configuration> fire(const Reaction& reaction,
                                  const Configuration& configuration);

/// DSL complex text: "2X + Y", or "0" when empty.
std::string format_complex(const Network& network, const Configuration& c);
/// DSL reaction text: "2X + Y -> W".
std::string format_reaction(const Network& network, const Reaction& reaction);
/// Canonical multiset text with explicit counts in Lambda order: "{2S2, 1S3}".
std::string format_configuration(const Network& network, const Configuration& c);

/// True when every reaction's reverse is also a reaction.
bool is_reversible(const Network& network);

}  // namespace crn

#endif  // CRN_MODEL_HPP
