#ifndef CRN_TEXTIO_HPP
#define CRN_TEXTIO_HPP

#include "crn/composition.hpp"
#include "crn/deciders.hpp"
#include "crn/ip.hpp"
#include "crn/model.hpp"
#include "crn/reach.hpp"
#include "crn/reductions.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crn {

/// DSL: one reaction per line, `->` or `<->` (forward listed first), `0` for
/// the empty side, `#` comments. An optional `species A, B, ...` line before
/// the first reaction fixes the order of Lambda and may add species that no
/// reaction mentions; otherwise Lambda is in first-mention order.
/// Throws ParseError("SyntaxError") with line/column, or ValidationError.
Network parse_network(std::string_view text);

/// Canonical DSL text. The `species` line is emitted only when first-mention
/// order would not reproduce Lambda. Comments are written first as `# ...`.
std::string serialize_network(const Network& network,
                              const std::vector<std::string>& comments = {});

/// `{2S2, 1S3}` or `S2:2 S3:1`; omitted species are 0 and `{}` is empty.
/// Throws ParseError("SyntaxError") or ValidationError("UnknownSpecies").
Configuration parse_configuration(std::string_view text, const Network& network);

/// Lines `vars v1 v2 ...` (optional, fixes variable order) and
/// `clause a b c`. Throws ParseError: SyntaxError, NonMonotone, WrongClauseArity.
SatInstance parse_sat(std::string_view text);
std::string serialize_sat(const SatInstance& formula);

/// DIMACS CNF restricted to positive literals; variable i is named v<i>.
SatInstance parse_dimacs(std::string_view text);

/// {"states": [...], "initial", "accept", "reject", "space",
///  "transitions": [{"state","read","write","move","next"}]}
TmSpec parse_tm(std::string_view text);
std::string serialize_tm(const TmSpec& tm);

std::string verdict_to_json(const Verdict& verdict, const Network& network);

std::string reach_to_json(const ReachResult& result, const Network& network);

/// Node ids are canonical configuration strings in BFS discovery order; the
/// initial node is drawn as a double circle; edge labels are r<k>, 1-based.
std::string export_dot(const ReachGraph& graph, const Network& network);

/// {"vertices": [...], "edges": [[from, reaction, to], ...]}, 0-based.
std::string graph_to_json(const ReachGraph& graph, const Network& network);

/// {"n": int, "map": {"species": [ints]}} with every species present.
CompositionMap parse_composition(std::string_view text, const Network& network);
std::string composition_to_json(const CompositionMap& e, const Network& network);

}  // namespace crn

#endif  // CRN_TEXTIO_HPP
