#include "crn/model.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace crn {

bool fits_int64(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  return v >= lo && v <= hi;
}

Configuration Configuration::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Configuration c;
  for (auto& [species, count] : terms) {
    if (count < 0) {
      throw ValidationError("NegativeCount", "configuration counts must be nonnegative");
    }
    if (!c.terms_.empty() && c.terms_.back().first == species) {
      c.terms_.back().second += count;
    } else {
      c.terms_.emplace_back(species, std::move(count));
    }
  }
  std::erase_if(c.terms_, [](const Term& t) { return t.second == 0; });
  return c;
}

Configuration Configuration::unit(SpeciesIndex species, BigInt count) {
  return from_terms({{species, std::move(count)}});
}

Configuration Configuration::from_dense(const IntVector& counts) {
  std::vector<Term> terms;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    if (counts(i) != 0) terms.emplace_back(static_cast<SpeciesIndex>(i), counts(i));
  }
  return from_terms(std::move(terms));
}

BigInt Configuration::count(SpeciesIndex species) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), species,
      [](const Term& t, SpeciesIndex s) { return t.first < s; });
  if (it != terms_.end() && it->first == species) return it->second;
  return 0;
}

BigInt Configuration::size() const {
  BigInt total = 0;
  for (const auto& t : terms_) total += t.second;
  return total;
}

std::vector<SpeciesIndex> Configuration::support() const {
  std::vector<SpeciesIndex> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

std::optional<SpeciesIndex> Configuration::single_unit() const {
  if (terms_.size() == 1 && terms_.front().second == 1) return terms_.front().first;
  return std::nullopt;
}

bool Configuration::fits_in(const Configuration& other) const {
  for (const auto& [s, n] : terms_) {
    if (other.count(s) < n) return false;
  }
  return true;
}

IntVector Configuration::dense(std::size_t species_count) const {
  IntVector out = IntVector::Zero(static_cast<Eigen::Index>(species_count));
  for (const auto& [s, n] : terms_) {
    if (s >= species_count) {
      throw ValidationError("DimensionMismatch", "configuration mentions a species outside the network");
    }
    out(static_cast<Eigen::Index>(s)) = n;
  }
  return out;
}

Configuration operator+(const Configuration& a, const Configuration& b) {
  std::vector<Configuration::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Configuration::from_terms(std::move(terms));
}

Configuration operator-(const Configuration& a, const Configuration& b) {
  std::vector<Configuration::Term> terms = a.terms_;
  for (const auto& [s, n] : b.terms_) terms.emplace_back(s, -n);
  // from_terms rejects negative merged counts only after merging, so merge here.
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Configuration::Term> merged;
  for (auto& [s, n] : terms) {
    if (!merged.empty() && merged.back().first == s) {
      merged.back().second += n;
    } else {
      merged.emplace_back(s, n);
    }
  }
  return Configuration::from_terms(std::move(merged));
}

Configuration operator*(const BigInt& k, const Configuration& c) {
  std::vector<Configuration::Term> terms;
  for (const auto& [s, n] : c.terms_) terms.emplace_back(s, k * n);
  return Configuration::from_terms(std::move(terms));
}

std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) {
      return a.terms_[i].first <=> b.terms_[i].first;
    }
    if (a.terms_[i].second != b.terms_[i].second) {
      return a.terms_[i].second < b.terms_[i].second ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    }
  }
  return a.terms_.size() <=> b.terms_.size();
}

IntVector Reaction::delta(std::size_t species_count) const {
  return products.dense(species_count) - reactants.dense(species_count);
}

bool is_valid_species_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Network::Network(std::vector<std::string> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  for (SpeciesIndex i = 0; i < species_.size(); ++i) {
    if (!is_valid_species_name(species_[i])) {
      throw ValidationError("InvalidSpeciesName", "invalid species name '" + species_[i] + "'");
    }
    if (!index_.emplace(species_[i], i).second) {
      throw ValidationError("DuplicateSpecies", "duplicate species '" + species_[i] + "'");
    }
  }
  std::set<std::pair<Configuration, Configuration>> seen;
  for (std::size_t t = 0; t < reactions_.size(); ++t) {
    const auto& rx = reactions_[t];
    if (rx.reactants.extent() > species_.size() || rx.products.extent() > species_.size()) {
      throw ValidationError("UnknownSpeciesInReaction",
                            "reaction " + std::to_string(t + 1) + " mentions an undeclared species");
    }
    if (rx.reactants == rx.products) {
      throw ValidationError("SelfLoopReaction",
                            "reaction " + std::to_string(t + 1) + " has identical reactants and products");
    }
    if (!seen.emplace(rx.reactants, rx.products).second) {
      throw ValidationError("DuplicateReaction",
                            "duplicate reaction " + format_reaction(*this, rx));
    }
  }
}

std::optional<SpeciesIndex> Network::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SpeciesIndex Network::index_of(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw ValidationError("UnknownSpecies", "unknown species '" + std::string(name) + "'");
}

Network validate_network(std::vector<std::string> species, std::vector<Reaction> reactions) {
  return Network(std::move(species), std::move(reactions));
}

SpeciesIndex NetworkBuilder::species(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, species_.size());
  if (inserted) species_.push_back(name);
  return it->second;
}

Configuration NetworkBuilder::complex(const std::vector<NamedTerm>& terms) {
  std::vector<Configuration::Term> out;
  out.reserve(terms.size());
  for (const auto& [name, count] : terms) out.emplace_back(species(name), count);
  return Configuration::from_terms(std::move(out));
}

void NetworkBuilder::reaction(const std::vector<NamedTerm>& reactants,
                              const std::vector<NamedTerm>& products) {
  Configuration r = complex(reactants);
  Configuration p = complex(products);
  reactions_.push_back({std::move(r), std::move(p)});
}

void NetworkBuilder::reaction(Configuration reactants, Configuration products) {
  reactions_.push_back({std::move(reactants), std::move(products)});
}

Network NetworkBuilder::build() const { return Network(species_, reactions_); }

StoichMatrix stoichiometric_matrix(const Network& network) {
  const auto rows = static_cast<Eigen::Index>(network.reaction_count());
  const auto cols = static_cast<Eigen::Index>(network.species_count());
  StoichMatrix a;
  a.entries = IntMatrix::Zero(rows, cols);
  a.species_labels = network.species();
  for (Eigen::Index t = 0; t < rows; ++t) {
    const auto& rx = network.reactions()[static_cast<std::size_t>(t)];
    for (const auto& [s, n] : rx.products.terms()) a.entries(t, static_cast<Eigen::Index>(s)) += n;
    for (const auto& [s, n] : rx.reactants.terms()) a.entries(t, static_cast<Eigen::Index>(s)) -= n;
    a.reaction_labels.push_back(format_reaction(network, rx));
  }
  return a;
}

std::optional<Configuration> fire(const Reaction& reaction, const Configuration& configuration) {
  if (!reaction.reactants.fits_in(configuration)) return std::nullopt;
  return (configuration - reaction.reactants) + reaction.products;
}

bool is_reversible(const Network& network) {
  std::set<std::pair<Configuration, Configuration>> all;
  for (const auto& rx : network.reactions()) all.emplace(rx.reactants, rx.products);
  for (const auto& rx : network.reactions()) {
    if (!all.count({rx.products, rx.reactants})) return false;
  }
  return true;
}

std::string format_complex(const Network& network, const Configuration& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [s, n] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (n != 1) out += n.str();
    out += network.name(s);
  }
  return out;
}

std::string format_reaction(const Network& network, const Reaction& reaction) {
  return format_complex(network, reaction.reactants) + " -> " +
         format_complex(network, reaction.products);
}

std::string format_configuration(const Network& network, const Configuration& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, n] : c.terms()) {
    if (!first) out += ", ";
    first = false;
    out += n.str() + network.name(s);
  }
  return out + "}";
}

}  // namespace crn
