#include "crn/deciders.hpp"

#include "crn/exactq.hpp"

#include <algorithm>
#include <set>

namespace crn {
namespace {

Verdict make_verdict(std::string query) {
  Verdict v;
  v.query = std::move(query);
  return v;
}

Verdict reject(Verdict v, const char* label) {
  v.answer = Answer::no;
  v.diagnosis = label;
  return v;
}

void require_verified(const Network& network, const DecompositionWitness& w, AtomicClass cls) {
  if (auto failure = check_witness_algebra(network, w, cls)) {
    throw Error("InternalError", "witness failed verification: " + *failure);
  }
}

std::string fresh_atom_name(const Network& network) {
  std::string name = "A1";
  while (network.find(name)) name += '\'';
  return name;
}

}  // namespace

std::vector<SpeciesIndex> unary_reactant_species(const Network& network) {
  std::vector<bool> mark(network.species_count(), false);
  for (const auto& rx : network.reactions()) {
    if (auto s = rx.reactants.single_unit()) mark[*s] = true;
  }
  std::vector<SpeciesIndex> out;
  for (std::size_t s = 0; s < mark.size(); ++s) {
    if (mark[s]) out.push_back(s);
  }
  return out;
}

Verdict decide_primitive_atomic(const Network& network) {
  if (network.reaction_count() == 0) {
    throw Error("EmptyReactionSet", "primitive atomicity needs at least one reaction");
  }
  Verdict v = make_verdict("primitive-atomic");
  const auto a = stoichiometric_matrix(network);
  const auto m = solve_strict_positive_kernel(to_rational(a.entries));
  if (!m) {
    v.answer = Answer::no;
    v.details.emplace_back("reason", "no strictly positive mass vector");
    return v;
  }
  DecompositionWitness w;
  w.atoms = {fresh_atom_name(network)};
  const IntVector d = BigInt(2) * integerize_positive(*m);
  w.matrix = d;
  require_verified(network, w, AtomicClass::primitive);
  v.answer = Answer::yes;
  v.witness = std::move(w);
  return v;
}

Verdict decide_subset_fixed_atomic(const Network& network, const std::vector<std::string>& atoms,
                                   std::optional<BigInt> ip_bound) {
  std::vector<SpeciesIndex> idx;
  for (const auto& name : atoms) {
    auto s = network.find(name);
    if (!s) throw ValidationError("InvalidAtomSet", "atom '" + name + "' is not a species");
    idx.push_back(*s);
  }
  Verdict v = make_verdict("subset-fixed-atomic");
  // Delta = Lambda leaves no molecules; that is a No, not a malformed query.
  if (!idx.empty() && std::set<SpeciesIndex>(idx.begin(), idx.end()).size() == network.species_count() &&
      idx.size() == network.species_count()) {
    v.answer = Answer::no;
    v.details.emplace_back("reason", "atom set is all of the species");
    return v;
  }
  const IpInstance ip = crn_to_ip(network, idx);
  const IpOutcome out = ip_feasible(ip, ip_bound);

  v.answer = out.answer;
  v.details.emplace_back("ip_nodes", std::to_string(out.nodes));
  v.details.emplace_back("ip_bound", (ip_bound ? *ip_bound : ip.default_bound).str());
  if (out.answer != Answer::yes) return v;

  const std::size_t m = network.species_count();
  const std::size_t n = ip.atom_count;
  DecompositionWitness w;
  for (std::size_t a = 0; a < n; ++a) w.atoms.push_back(network.name(ip.order[m - n + a]));
  w.matrix = IntMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      w.matrix(static_cast<Eigen::Index>(ip.order[s]), static_cast<Eigen::Index>(a)) =
          out.assignment(static_cast<Eigen::Index>(ip.x_index(s, a)));
    }
  }
  require_verified(network, w, AtomicClass::subset);
  v.witness = std::move(w);
  return v;
}

Verdict decide_subset_atomic(const Network& network, std::optional<BigInt> ip_bound) {
  Verdict v = make_verdict("subset-atomic");
  const std::size_t m = network.species_count();
  const auto unary = unary_reactant_species(network);
  std::vector<SpeciesIndex> pool;
  for (std::size_t s = 0; s < m; ++s) {
    if (!std::binary_search(unary.begin(), unary.end(), s)) pool.push_back(s);
  }
  // An atom cannot be the lone reactant of a reaction, so candidates avoid M.
  const std::size_t max_size = std::min(pool.size(), m == 0 ? 0 : m - 1);
  bool saw_unknown = false;
  std::size_t tried = 0;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::vector<std::string> names;
      for (auto i : pick) names.push_back(network.name(pool[i]));
      Verdict fixed = decide_subset_fixed_atomic(network, names, ip_bound);
      ++tried;
      if (fixed.answer == Answer::yes) {
        v.answer = Answer::yes;
        v.witness = std::move(fixed.witness);
        v.details.emplace_back("candidates_tried", std::to_string(tried));
        return v;
      }
      if (fixed.answer == Answer::unknown) saw_unknown = true;

      std::size_t i = size;
      while (i > 0 && pick[i - 1] == pool.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  v.answer = saw_unknown ? Answer::unknown : Answer::no;
  v.details.emplace_back("candidates_tried", std::to_string(tried));
  return v;
}

Verdict decide_reachably_atomic(const Network& network) {
  Verdict v = make_verdict("reachably-atomic");
  const std::size_t m = network.species_count();
  const auto& reactions = network.reactions();

  // (1) separation
  std::vector<bool> molecule(m, false);
  for (auto s : unary_reactant_species(network)) molecule[s] = true;
  const auto molecule_count = static_cast<std::size_t>(std::count(molecule.begin(), molecule.end(), true));
  if (molecule_count == 0 || molecule_count == m) return reject(std::move(v), kNoSeparation);

  auto within_atoms = [&](const Configuration& c) {
    return std::all_of(c.terms().begin(), c.terms().end(),
                       [&](const auto& t) { return !molecule[t.first]; });
  };

  // (2) direct decompositions into atoms
  std::vector<std::optional<Configuration>> d(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (!molecule[s]) d[s] = Configuration::unit(s);
  }
  std::vector<bool> done(m, false);
  bool any_direct = false;
  for (std::size_t t = 0; t < reactions.size(); ++t) {
    const auto& rx = reactions[t];
    auto s = rx.reactants.single_unit();
    if (!s || !within_atoms(rx.products)) continue;
    if (rx.products.size() <= 1) {
      v = reject(std::move(v), kDegenerateDecomposition);
      v.details.emplace_back("species", network.name(*s));
      v.details.emplace_back("reaction", format_reaction(network, rx));
      return v;
    }
    if (!done[*s]) {
      d[*s] = rx.products;
      done[*s] = true;
      any_direct = true;
    }
  }
  if (!any_direct) return reject(std::move(v), kNoDirectDecomposer);

  // (3) peel molecules whose one-step products are already decomposed
  std::vector<std::vector<std::size_t>> unary_of(m);
  for (std::size_t t = 0; t < reactions.size(); ++t) {
    if (auto s = reactions[t].reactants.single_unit()) unary_of[*s].push_back(t);
  }
  std::vector<SpeciesIndex> pending;
  for (std::size_t s = 0; s < m; ++s) {
    if (molecule[s] && !done[s]) pending.push_back(s);
  }
  while (!pending.empty()) {
    std::vector<std::pair<SpeciesIndex, std::size_t>> layer;
    for (auto s : pending) {
      for (auto t : unary_of[s]) {
        const auto& p = reactions[t].products;
        const bool ready = std::all_of(p.terms().begin(), p.terms().end(),
                                       [&](const auto& term) { return !molecule[term.first] || done[term.first]; });
        if (ready) {
          layer.emplace_back(s, t);
          break;
        }
      }
    }
    if (layer.empty()) {
      v = reject(std::move(v), kStuckMolecule);
      v.details.emplace_back("species", network.name(pending.front()));
      return v;
    }
    for (const auto& [s, t] : layer) {
      Configuration sum;
      for (const auto& [sp, k] : reactions[t].products.terms()) sum = sum + k * *d[sp];
      d[s] = std::move(sum);
      done[s] = true;
    }
    std::erase_if(pending, [&](SpeciesIndex s) { return done[s]; });
  }

  // (4) conservation and atom usage
  auto weigh = [&](const Configuration& side) {
    Configuration total;
    for (const auto& [sp, k] : side.terms()) total = total + k * *d[sp];
    return total;
  };
  for (const auto& rx : reactions) {
    if (weigh(rx.reactants) != weigh(rx.products)) {
      v = reject(std::move(v), kAtomsNotConserved);
      v.details.emplace_back("reaction", format_reaction(network, rx));
      return v;
    }
  }
  std::vector<bool> used(m, false);
  for (std::size_t s = 0; s < m; ++s) {
    if (!molecule[s]) continue;
    for (const auto& term : d[s]->terms()) used[term.first] = true;
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (!molecule[s] && !used[s]) {
      v = reject(std::move(v), kRedundantAtom);
      v.details.emplace_back("species", network.name(s));
      return v;
    }
  }

  DecompositionWitness w;
  std::vector<std::size_t> column(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    if (!molecule[s]) {
      column[s] = w.atoms.size();
      w.atoms.push_back(network.name(s));
    }
  }
  w.matrix = IntMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(w.atoms.size()));
  for (std::size_t s = 0; s < m; ++s) {
    for (const auto& [a, k] : d[s]->terms()) {
      w.matrix(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(column[a])) = k;
    }
  }
  require_verified(network, w, AtomicClass::subset);
  v.answer = Answer::yes;
  v.witness = std::move(w);
  return v;
}

Verdict decide_reversibly_reachably_atomic(const Network& network) {
  Verdict base = decide_reachably_atomic(network);
  Verdict v = make_verdict("reversibly-reachably-atomic");
  v.details = base.details;
  if (base.answer != Answer::yes) {
    v.answer = base.answer;
    v.diagnosis = base.diagnosis;
    return v;
  }
  const std::size_t m = network.species_count();
  std::vector<bool> ready(m, false);
  for (const auto& name : base.witness->atoms) ready[network.index_of(name)] = true;
  std::vector<SpeciesIndex> pending;
  for (std::size_t s = 0; s < m; ++s) {
    if (!ready[s]) pending.push_back(s);
  }
  while (!pending.empty()) {
    std::vector<SpeciesIndex> layer;
    for (const auto& rx : network.reactions()) {
      auto s = rx.products.single_unit();
      if (!s || ready[*s]) continue;
      const auto& r = rx.reactants;
      if (std::all_of(r.terms().begin(), r.terms().end(),
                      [&](const auto& term) { return ready[term.first]; })) {
        layer.push_back(*s);
      }
    }
    if (layer.empty()) {
      v.answer = Answer::no;
      v.diagnosis = kNotRecomposable;
      v.details.emplace_back("species", network.name(pending.front()));
      return v;
    }
    for (auto s : layer) ready[s] = true;
    std::erase_if(pending, [&](SpeciesIndex s) { return ready[s]; });
  }
  v.answer = Answer::yes;
  v.witness = std::move(base.witness);
  return v;
}

}  // namespace crn
