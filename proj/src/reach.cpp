#include "crn/reach.hpp"

#include "crn/exactq.hpp"

#include <cstdint>
#include <cstdlib>
#include <algorithm>
#include <string>
#include <unordered_map>

namespace crn {
namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct SparseReaction {
  std::vector<std::pair<std::size_t, std::int64_t>> needs;
  std::vector<std::pair<std::size_t, std::int64_t>> delta;
};

// Dense int64 view of the network, valid for configurations of bounded mass.
class Explorer {
 public:
  Explorer(const Network& network, const std::vector<const Configuration*>& seeds)
      : network_(network) {
    auto mass = mass_vector(network);
    if (!mass) {
      throw Error("NotMassConserving",
                  "network is not mass conserving; reachability may not terminate");
    }
    mass_ = *mass;
    for (const auto* c : seeds) {
      const BigInt total = weight(*c);
      if (!fits_int64(total)) {
        throw Error("StateTooLarge", "configuration mass exceeds 64-bit state encoding");
      }
    }
    const std::size_t n = network.species_count();
    for (const auto& rx : network.reactions()) {
      SparseReaction s;
      for (const auto& [sp, k] : rx.reactants.terms()) {
        if (!fits_int64(k)) throw Error("StateTooLarge", "coefficient exceeds 64-bit range");
        s.needs.emplace_back(sp, static_cast<std::int64_t>(k));
      }
      IntVector d = rx.delta(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& v = d(static_cast<Eigen::Index>(i));
        if (v != 0) {
          if (!fits_int64(v)) throw Error("StateTooLarge", "coefficient exceeds 64-bit range");
          s.delta.emplace_back(i, static_cast<std::int64_t>(v));
        }
      }
      reactions_.push_back(std::move(s));
    }
  }

  BigInt weight(const Configuration& c) const {
    BigInt total = 0;
    for (const auto& [s, k] : c.terms()) total += mass_(static_cast<Eigen::Index>(s)) * k;
    return total;
  }

  State encode(const Configuration& c) const {
    State s(network_.species_count(), 0);
    for (const auto& [sp, k] : c.terms()) s[sp] = static_cast<std::int64_t>(k);
    return s;
  }

  Configuration decode(const State& s) const {
    std::vector<Configuration::Term> terms;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0) terms.emplace_back(i, BigInt(s[i]));
    }
    return Configuration::from_terms(std::move(terms));
  }

  bool fire(std::size_t t, const State& from, State& out) const {
    const auto& rx = reactions_[t];
    for (const auto& [sp, k] : rx.needs) {
      if (from[sp] < k) return false;
    }
    out = from;
    for (const auto& [sp, d] : rx.delta) out[sp] += d;
    return true;
  }

  std::size_t reaction_count() const { return reactions_.size(); }

 private:
  const Network& network_;
  IntVector mass_;
  std::vector<SparseReaction> reactions_;
};

}  // namespace

std::size_t default_max_states() {
  if (const char* env = std::getenv("CRN_MAX_STATES")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

ReachGraph build_config_graph(const Network& network, const Configuration& initial,
                              std::size_t max_states) {
  if (initial.extent() > network.species_count()) {
    throw ValidationError("DimensionMismatch", "configuration mentions a species outside the network");
  }
  Explorer ex(network, {&initial});
  ReachGraph g;
  g.initial = initial;

  std::vector<State> states;
  std::unordered_map<State, std::size_t, StateHash> index;
  states.push_back(ex.encode(initial));
  index.emplace(states.front(), 0);

  State next;
  for (std::size_t v = 0; v < states.size() && g.complete; ++v) {
    for (std::size_t t = 0; t < ex.reaction_count(); ++t) {
      if (!ex.fire(t, states[v], next)) continue;
      auto it = index.find(next);
      if (it == index.end()) {
        if (states.size() >= max_states) {
          g.complete = false;
          break;
        }
        it = index.emplace(next, states.size()).first;
        states.push_back(next);
      }
      g.edges.push_back({v, t, it->second});
    }
  }
  g.vertices.reserve(states.size());
  for (const auto& s : states) g.vertices.push_back(ex.decode(s));
  return g;
}

ReachResult reachable(const Network& network, const Configuration& from,
                      const Configuration& to, std::size_t max_states) {
  if (from.extent() > network.species_count() || to.extent() > network.species_count()) {
    throw ValidationError("DimensionMismatch", "configuration mentions a species outside the network");
  }
  Explorer ex(network, {&from, &to});
  ReachResult result;
  if (from == to) {
    result.answer = Answer::yes;
    result.explored = 1;
    return result;
  }
  if (ex.weight(from) != ex.weight(to)) {
    result.answer = Answer::no;
    return result;
  }

  const State target = ex.encode(to);
  std::vector<State> states{ex.encode(from)};
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
  std::unordered_map<State, std::size_t, StateHash> index{{states.front(), 0}};
  State next;
  for (std::size_t v = 0; v < states.size(); ++v) {
    for (std::size_t t = 0; t < ex.reaction_count(); ++t) {
      if (!ex.fire(t, states[v], next) || index.count(next)) continue;
      if (states.size() >= max_states) {
        result.answer = Answer::unknown;
        result.explored = states.size();
        return result;
      }
      const std::size_t id = states.size();
      index.emplace(next, id);
      states.push_back(next);
      parent.emplace_back(v, t);
      if (next == target) {
        for (std::size_t cur = id; cur != 0; cur = parent[cur].first) {
          result.path.push_back(parent[cur].second);
        }
        std::reverse(result.path.begin(), result.path.end());
        result.answer = Answer::yes;
        result.explored = states.size();
        return result;
      }
    }
  }
  result.answer = Answer::no;
  result.explored = states.size();
  return result;
}

std::optional<Configuration> replay(const Network& network, const Configuration& from,
                                    const std::vector<std::size_t>& path) {
  Configuration c = from;
  for (auto t : path) {
    if (t >= network.reaction_count()) return std::nullopt;
    auto next = fire(network.reactions()[t], c);
    if (!next) return std::nullopt;
    c = std::move(*next);
  }
  return c;
}

}  // namespace crn
