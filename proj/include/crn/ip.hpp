#ifndef CRN_IP_HPP
#define CRN_IP_HPP

#include "crn/answer.hpp"
#include "crn/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crn {

/// Equality system matrix * x = rhs over x >= 0 integer.
///
/// Species are reordered molecules first (in Lambda order) then atoms. With
/// m = |Lambda| and n = |Delta| the variables are x_{s,a} (s-major), then the
/// molecule slacks b_s, then the atom slacks c_a. Rows are the per-atom
/// reaction balances (atom-major), the molecule size rows, the atom usage rows
/// and the n^2 rows pinning atom self-decompositions.
struct IpInstance {
  IntMatrix matrix;
  IntVector rhs;
  std::vector<std::string> labels;
  std::vector<SpeciesIndex> order;  // reordered species -> Lambda index
  std::size_t molecule_count = 0;
  std::size_t atom_count = 0;
  BigInt default_bound = 1;

  std::size_t x_index(std::size_t s, std::size_t a) const { return s * atom_count + a; }
};

/// Throws InvalidAtomSet unless atoms is a nonempty proper subset of Lambda
/// without repeats. Atom columns follow Lambda order.
IpInstance crn_to_ip(const Network& network, const std::vector<SpeciesIndex>& atoms);

struct IpOutcome {
  Answer answer = Answer::unknown;
  IntVector assignment;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultIpNodeLimit = 200'000;

/// Depth-first branch and bound with exact LP relaxations. No is returned
/// only when every branch was closed by an infeasible relaxation.
IpOutcome ip_feasible(const IpInstance& instance, std::optional<BigInt> bound = std::nullopt,
                      std::size_t node_limit = kDefaultIpNodeLimit);

/// CPLEX LP text for external solvers.
std::string export_lp(const IpInstance& instance);

}  // namespace crn

#endif  // CRN_IP_HPP
