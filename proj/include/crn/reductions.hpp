#ifndef CRN_REDUCTIONS_HPP
#define CRN_REDUCTIONS_HPP

#include "crn/model.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crn {

/// Monotone 3-CNF: every clause is a triple of variable indices.
struct SatInstance {
  std::vector<std::string> variables;
  std::vector<std::array<std::size_t, 3>> clauses;
};

struct ReducedCrnInstance {
  Network network;
  std::vector<std::string> atoms;
  std::optional<Configuration> c1;
  std::optional<Configuration> c2;
  std::vector<std::string> provenance;
};

/// Delta = {T,F,P,Q}; Lambda = S_1..S_n, X_1..X_n, T, F, P, Q. Reactions: one
/// 3P+2F+T -> S.. per clause, one 3Q+2F+T -> X.. per clause, then S_i+Q -> X_i+P.
/// Repeated clauses are emitted once. Throws EmptyFormula, WrongClauseArity.
ReducedCrnInstance sat_to_crn(const SatInstance& formula);

/// Replaces every reaction with more than two reactant or product units by a
/// chain through fresh intermediates M<r>_<i>: reactant units (in species
/// order) bind reversibly one at a time, the last unit fires irreversibly
/// releasing the first product unit, and each further intermediate releases
/// one more unit until the last splits in two.
Network bimolecularize(const Network& network);

enum class TapeSymbol { zero, one, blank };

char symbol_char(TapeSymbol s);
std::optional<TapeSymbol> symbol_from_char(char c);

struct TmTransition {
  std::size_t next = 0;
  TapeSymbol write = TapeSymbol::blank;
  int move = 1;  // -1 or +1
};

/// Space-bounded machine over {0,1,blank}; cells are 1..space.
struct TmSpec {
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::size_t accept = 0;
  std::size_t reject = 0;
  std::size_t space = 1;
  std::map<std::pair<std::size_t, TapeSymbol>, TmTransition> transitions;
};

/// Throws ValidationError on malformed machines (bad indices, transitions
/// out of the halting states, moves other than +-1).
void validate_tm(const TmSpec& tm);

struct TmRun {
  enum class Halt { accept, reject, stuck, off_tape, step_limit };
  Halt halt = Halt::stuck;
  std::size_t steps = 0;
  std::size_t state = 0;
  std::size_t head = 1;
  std::vector<TapeSymbol> tape;  // tape[k-1] is cell k

  /// Accepting with a blank tape and the head back on cell 1.
  bool accepted_cleanly() const;
};

/// Direct execution. A move off the tape halts the run (Halt::off_tape).
TmRun simulate_tm(const TmSpec& tm, const std::string& input, std::size_t max_steps = 0);

struct TmReductionOptions {
  /// Simulate the machine on the input and reject off-tape moves and
  /// accepting runs that leave the tape dirty or the head away from cell 1.
  bool validate = true;
};

/// Lambda = A, Q_<state>..., P1..Pp, T<k>_0, T<k>_1, T<k>_B for k = 1..p.
/// Throws InputTooLong, BoundaryViolation, AcceptConvention.
ReducedCrnInstance tm_to_crn(const TmSpec& tm, const std::string& input,
                             TmReductionOptions options = {});

}  // namespace crn

#endif  // CRN_REDUCTIONS_HPP
