#ifndef CRN_REACH_HPP
#define CRN_REACH_HPP

#include "crn/answer.hpp"
#include "crn/model.hpp"

#include <cstddef>
#include <vector>

namespace crn {

struct ReachEdge {
  std::size_t from;
  std::size_t reaction;
  std::size_t to;

  friend bool operator==(const ReachEdge&, const ReachEdge&) = default;
};

/// G_{C,i}. Vertices are kept in BFS discovery order; vertex 0 is the initial
/// configuration. `complete` is false when the state budget cut the search.
struct ReachGraph {
  Configuration initial;
  std::vector<Configuration> vertices;
  std::vector<ReachEdge> edges;
  bool complete = true;
};

/// CRN_MAX_STATES when set to a positive integer, else 1,000,000.
std::size_t default_max_states();

/// BFS closure of `initial` under single firings. Throws NotMassConserving.
ReachGraph build_config_graph(const Network& network, const Configuration& initial,
                              std::size_t max_states = default_max_states());

struct ReachResult {
  Answer answer = Answer::unknown;
  std::vector<std::size_t> path;  // reaction indices, shortest
  std::size_t explored = 0;
};

/// from =>* to. Throws NotMassConserving.
ReachResult reachable(const Network& network, const Configuration& from,
                      const Configuration& to,
                      std::size_t max_states = default_max_states());

/// Applies the firing sequence; nullopt if some reaction is not applicable.
std::optional<Configuration> replay(const Network& network, const Configuration& from,
                                    const std::vector<std::size_t>& path);

}  // namespace crn

#endif  // CRN_REACH_HPP
