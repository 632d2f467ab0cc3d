#ifndef CRN_TESTS_FIXTURES_HPP
#define CRN_TESTS_FIXTURES_HPP

#include "crn/model.hpp"
#include "crn/textio.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline const char* kWorked =
    "2X + Y + Z -> 2W + Z\n"
    "X + 2Y + W + Z -> Y + W + 2Z\n";

// Same network with the column order used in the stoichiometric matrix example.
inline const char* kWorkedXYWZ =
    "species X, Y, W, Z\n"
    "2X + Y + Z -> 2W + Z\n"
    "X + 2Y + W + Z -> Y + W + 2Z\n";

inline const char* kAugmented =
    "2X + Y + Z -> 2W + Z\n"
    "X + 2Y + W + Z -> Y + W + 2Z\n"
    "Y -> 2X\n"
    "Z -> 3X\n"
    "W -> 2X\n";

inline const char* kAugmentedReversible =
    "2X + Y + Z -> 2W + Z\n"
    "X + 2Y + W + Z -> Y + W + 2Z\n"
    "Y -> 2X\n"
    "Z -> 3X\n"
    "W -> 2X\n"
    "2X -> Y\n"
    "3X -> Z\n"
    "2X -> W\n"
    "2W + Z -> 2X + Y + Z\n"
    "Y + W + 2Z -> X + 2Y + W + Z\n";

inline const char* kGraphExample =
    "species S1, S2, S3, A1\n"
    "S1 -> 4A1\n"
    "S2 -> 9A1\n"
    "2S1 + S2 -> S3\n";

inline crn::Network net(const std::string& text) { return crn::parse_network(text); }

inline crn::Configuration config(const crn::Network&, const std::vector<long>& counts) {
  std::vector<crn::Configuration::Term> t;
  for (std::size_t i = 0; i < counts.size(); ++i) t.emplace_back(i, crn::BigInt(counts[i]));
  return crn::Configuration::from_terms(std::move(t));
}

// d_S in Lambda order for a single-atom witness.
inline std::vector<long> column(const crn::IntMatrix& d, Eigen::Index col = 0) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < d.rows(); ++i) out.push_back(static_cast<long>(d(i, col)));
  return out;
}

}  // namespace fixtures

#endif  // CRN_TESTS_FIXTURES_HPP
