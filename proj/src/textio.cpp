#include "crn/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <set>
#include <sstream>

namespace crn {
namespace {

using Json = nlohmann::ordered_json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_ident(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (is_space(line.back()) || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t number) : line_(line), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[pos_]; }
  bool starts_with(std::string_view s) const { return line_.substr(pos_).starts_with(s); }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("SyntaxError", message, number_, column());
  }

  std::string digits() {
    std::string out;
    while (!at_end() && is_digit(peek())) out += line_[pos_++];
    return out;
  }

  std::string identifier() {
    if (at_end() || !is_alpha(peek())) fail("expected a species name");
    std::string out;
    while (!at_end() && is_ident(peek())) out += line_[pos_++];
    return out;
  }

 private:
  std::string_view line_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

// Decimal only: Boost reads a leading 0 as an octal prefix.
BigInt decimal(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

BigInt parse_count(LineCursor& cur, const std::string& digits, bool allow_zero) {
  BigInt v = decimal(digits);
  if (v == 0 && !allow_zero) cur.fail("coefficients must be positive");
  return v;
}

std::vector<NetworkBuilder::NamedTerm> parse_side(LineCursor& cur) {
  std::vector<NetworkBuilder::NamedTerm> terms;
  cur.skip_space();
  if (cur.peek() == '0') {
    LineCursor probe = cur;
    probe.digits();
    probe.skip_space();
    if (probe.at_end() || probe.peek() == '-' || probe.peek() == '<') {
      if (probe.starts_with("-") || probe.starts_with("<") || probe.at_end()) {
        cur = probe;
        return terms;
      }
    }
  }
  for (;;) {
    cur.skip_space();
    BigInt coefficient = 1;
    if (is_digit(cur.peek())) {
      const std::string d = cur.digits();
      coefficient = parse_count(cur, d, false);
      cur.skip_space();
    }
    std::string name = cur.identifier();
    terms.emplace_back(std::move(name), std::move(coefficient));
    cur.skip_space();
    if (cur.peek() != '+') break;
    cur.advance(1);
  }
  return terms;
}

bool is_species_line(std::string_view line) {
  line = trim(line);
  if (!line.starts_with("species")) return false;
  if (line.size() > 7 && is_ident(line[7])) return false;
  return line.find("->") == std::string_view::npos;
}

Json count_json(const BigInt& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

}  // namespace

Network parse_network(std::string_view text) {
  NetworkBuilder builder;
  bool seen_reaction = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = strip_comment(lines[i]);
    if (trim(line).empty()) continue;
    LineCursor cur(line, i + 1);
    if (is_species_line(line)) {
      if (seen_reaction) cur.fail("species declarations must precede the reactions");
      cur.skip_space();
      cur.advance(7);
      for (;;) {
        cur.skip_space();
        if (cur.at_end()) break;
        const std::string name = cur.identifier();
        if (builder.has_species(name)) {
          throw ValidationError("DuplicateSpecies", "duplicate species '" + name + "'");
        }
        builder.species(name);
        cur.skip_space();
        if (cur.peek() == ',') cur.advance(1);
      }
      continue;
    }
    auto lhs = parse_side(cur);
    cur.skip_space();
    bool reversible = false;
    if (cur.starts_with("<->")) {
      reversible = true;
      cur.advance(3);
    } else if (cur.starts_with("->")) {
      cur.advance(2);
    } else {
      cur.fail("expected '->' or '<->'");
    }
    auto rhs = parse_side(cur);
    cur.skip_space();
    if (!cur.at_end()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
    builder.reaction(lhs, rhs);
    if (reversible) builder.reaction(rhs, lhs);
    seen_reaction = true;
  }
  return builder.build();
}

std::string serialize_network(const Network& network, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";

  std::vector<SpeciesIndex> mention;
  std::set<SpeciesIndex> seen;
  for (const auto& rx : network.reactions()) {
    for (const auto* side : {&rx.reactants, &rx.products}) {
      for (auto s : side->support()) {
        if (seen.insert(s).second) mention.push_back(s);
      }
    }
  }
  bool in_order = mention.size() == network.species_count();
  for (std::size_t i = 0; in_order && i < mention.size(); ++i) in_order = mention[i] == i;
  if (!in_order) {
    os << "species ";
    for (std::size_t s = 0; s < network.species_count(); ++s) {
      os << (s ? ", " : "") << network.name(s);
    }
    os << "\n";
  }
  for (const auto& rx : network.reactions()) os << format_reaction(network, rx) << "\n";
  return os.str();
}

Configuration parse_configuration(std::string_view text, const Network& network) {
  std::vector<Configuration::Term> terms;
  auto lookup = [&](const std::string& name) {
    auto s = network.find(name);
    if (!s) throw ValidationError("UnknownSpecies", "unknown species '" + name + "'");
    return *s;
  };
  const std::string_view body = trim(text);
  LineCursor cur(body, 1);
  cur.skip_space();
  if (cur.peek() == '{') {
    cur.advance(1);
    cur.skip_space();
    if (cur.peek() != '}') {
      for (;;) {
        cur.skip_space();
        BigInt count = 1;
        if (is_digit(cur.peek())) {
          count = decimal(cur.digits());
          cur.skip_space();
        }
        terms.emplace_back(lookup(cur.identifier()), std::move(count));
        cur.skip_space();
        if (cur.peek() == ',') {
          cur.advance(1);
          continue;
        }
        break;
      }
    }
    if (cur.peek() != '}') cur.fail("expected '}'");
    cur.advance(1);
    cur.skip_space();
    if (!cur.at_end()) cur.fail("unexpected text after '}'");
  } else {
    for (;;) {
      cur.skip_space();
      if (cur.at_end()) break;
      const std::string name = cur.identifier();
      cur.skip_space();
      if (cur.peek() != ':') cur.fail("expected ':' after species name");
      cur.advance(1);
      cur.skip_space();
      if (!is_digit(cur.peek())) cur.fail("expected a count");
      terms.emplace_back(lookup(name), decimal(cur.digits()));
      cur.skip_space();
      if (cur.peek() == ',') cur.advance(1);
    }
  }
  return Configuration::from_terms(std::move(terms));
}

SatInstance parse_sat(std::string_view text) {
  SatInstance f;
  bool fixed = false;
  auto index_of = [&](const std::string& name, const LineCursor& cur) -> std::size_t {
    for (std::size_t i = 0; i < f.variables.size(); ++i) {
      if (f.variables[i] == name) return i;
    }
    if (fixed) cur.fail("variable '" + name + "' is not declared");
    f.variables.push_back(name);
    return f.variables.size() - 1;
  };
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = strip_comment(lines[i]);
    if (trim(line).empty()) continue;
    LineCursor cur(line, i + 1);
    cur.skip_space();
    const std::string keyword = cur.identifier();
    if (keyword == "vars") {
      if (fixed || !f.clauses.empty()) cur.fail("'vars' must come first and only once");
      for (;;) {
        cur.skip_space();
        if (cur.at_end()) break;
        const std::string name = cur.identifier();
        for (const auto& v : f.variables) {
          if (v == name) cur.fail("variable '" + name + "' declared twice");
        }
        f.variables.push_back(name);
      }
      fixed = true;
    } else if (keyword == "clause") {
      std::vector<std::size_t> literals;
      for (;;) {
        cur.skip_space();
        if (cur.at_end()) break;
        if (cur.peek() == '-' || cur.peek() == '~' || cur.peek() == '!') {
          throw ParseError("NonMonotone", "negated literals are not allowed", i + 1, cur.column());
        }
        literals.push_back(index_of(cur.identifier(), cur));
      }
      if (literals.size() != 3) {
        throw ParseError("WrongClauseArity",
                         "clauses need exactly 3 literals, got " + std::to_string(literals.size()), i + 1, 1);
      }
      f.clauses.push_back({literals[0], literals[1], literals[2]});
    } else {
      throw ParseError("SyntaxError", "expected 'vars' or 'clause'", i + 1, 1);
    }
  }
  return f;
}

std::string serialize_sat(const SatInstance& formula) {
  std::ostringstream os;
  os << "vars";
  for (const auto& v : formula.variables) os << " " << v;
  os << "\n";
  for (const auto& c : formula.clauses) {
    os << "clause " << formula.variables[c[0]] << " " << formula.variables[c[1]] << " "
       << formula.variables[c[2]] << "\n";
  }
  return os.str();
}

SatInstance parse_dimacs(std::string_view text) {
  SatInstance f;
  bool header = false;
  std::vector<std::size_t> pending;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == 'c' || line.front() == '%') continue;
    std::istringstream in{std::string(line)};
    if (line.front() == 'p') {
      std::string p, cnf;
      long long vars = -1, clauses = -1;
      in >> p >> cnf >> vars >> clauses;
      if (header || cnf != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("SyntaxError", "malformed 'p cnf' header", i + 1, 1);
      }
      for (long long v = 1; v <= vars; ++v) f.variables.push_back("v" + std::to_string(v));
      header = true;
      continue;
    }
    if (!header) throw ParseError("SyntaxError", "missing 'p cnf' header", i + 1, 1);
    std::string token;
    while (in >> token) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("SyntaxError", "expected an integer literal, got '" + token + "'", i + 1, 1);
      }
      if (lit < 0) throw ParseError("NonMonotone", "negative literal " + token, i + 1, 1);
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError("WrongClauseArity",
                           "clauses need exactly 3 literals, got " + std::to_string(pending.size()), i + 1, 1);
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit) > f.variables.size()) {
        throw ParseError("SyntaxError", "literal " + token + " exceeds the declared variables", i + 1, 1);
      }
      pending.push_back(static_cast<std::size_t>(lit - 1));
    }
  }
  if (!pending.empty()) throw ParseError("SyntaxError", "last clause is not terminated by 0", 0, 0);
  return f;
}

TmSpec parse_tm(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("SyntaxError", std::string("invalid JSON: ") + e.what(), 0, 0);
  }
  try {
    TmSpec tm;
    for (const auto& s : j.at("states")) tm.states.push_back(s.get<std::string>());
    auto state = [&](const std::string& name) {
      for (std::size_t i = 0; i < tm.states.size(); ++i) {
        if (tm.states[i] == name) return i;
      }
      throw ValidationError("InvalidMachine", "unknown state '" + name + "'");
    };
    auto symbol = [&](const Json& v) {
      const std::string s = v.get<std::string>();
      auto sym = s.size() == 1 ? symbol_from_char(s[0]) : std::nullopt;
      if (!sym) throw ValidationError("InvalidMachine", "unknown tape symbol '" + s + "'");
      return *sym;
    };
    tm.initial = state(j.at("initial").get<std::string>());
    tm.accept = state(j.at("accept").get<std::string>());
    tm.reject = state(j.at("reject").get<std::string>());
    tm.space = j.at("space").get<std::size_t>();
    for (const auto& t : j.at("transitions")) {
      TmTransition tr;
      tr.next = state(t.at("next").get<std::string>());
      tr.write = symbol(t.at("write"));
      const Json& move = t.at("move");
      if (move.is_string()) {
        const auto m = move.get<std::string>();
        if (m != "L" && m != "R") throw ValidationError("InvalidMachine", "move must be L, R, -1 or 1");
        tr.move = m == "L" ? -1 : 1;
      } else {
        tr.move = move.get<int>();
      }
      const auto key = std::make_pair(state(t.at("state").get<std::string>()), symbol(t.at("read")));
      if (!tm.transitions.emplace(key, tr).second) {
        throw ValidationError("InvalidMachine", "transition defined twice");
      }
    }
    validate_tm(tm);
    return tm;
  } catch (const Json::exception& e) {
    throw ParseError("SyntaxError", std::string("malformed machine: ") + e.what(), 0, 0);
  }
}

std::string serialize_tm(const TmSpec& tm) {
  Json j;
  j["states"] = tm.states;
  j["initial"] = tm.states[tm.initial];
  j["accept"] = tm.states[tm.accept];
  j["reject"] = tm.states[tm.reject];
  j["space"] = tm.space;
  j["transitions"] = Json::array();
  for (const auto& [key, tr] : tm.transitions) {
    j["transitions"].push_back({{"state", tm.states[key.first]},
                                {"read", std::string(1, symbol_char(key.second))},
                                {"write", std::string(1, symbol_char(tr.write))},
                                {"move", tr.move},
                                {"next", tm.states[tr.next]}});
  }
  return j.dump(2) + "\n";
}

std::string verdict_to_json(const Verdict& verdict, const Network& network) {
  Json j;
  j["query"] = verdict.query;
  j["answer"] = std::string(to_string(verdict.answer));
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    Json decomposition = Json::object();
    for (std::size_t s = 0; s < network.species_count(); ++s) {
      Json row = Json::array();
      for (Eigen::Index a = 0; a < w.matrix.cols(); ++a) {
        row.push_back(count_json(w.matrix(static_cast<Eigen::Index>(s), a)));
      }
      decomposition[network.name(s)] = std::move(row);
    }
    j["witness"] = {{"atoms", w.atoms}, {"decomposition", std::move(decomposition)}};
  } else {
    j["witness"] = nullptr;
  }
  Json diag = Json::object();
  diag["case"] = verdict.diagnosis ? Json(*verdict.diagnosis) : Json(nullptr);
  for (const auto& [k, v] : verdict.details) diag[k] = v;
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

std::string reach_to_json(const ReachResult& result, const Network& network) {
  Json j;
  j["query"] = "reachable";
  j["answer"] = std::string(to_string(result.answer));
  if (result.answer == Answer::yes) {
    Json reactions = Json::array();
    for (auto t : result.path) reactions.push_back(format_reaction(network, network.reactions()[t]));
    j["witness"] = {{"path", result.path}, {"reactions", std::move(reactions)}};
  } else {
    j["witness"] = nullptr;
  }
  j["diagnostics"] = {{"case", nullptr}, {"explored", result.explored}};
  return j.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const ReachGraph& graph, const Network& network) {
  std::vector<std::string> ids;
  ids.reserve(graph.vertices.size());
  for (const auto& v : graph.vertices) ids.push_back(dot_quote(format_configuration(network, v)));
  std::ostringstream os;
  os << "digraph reachability {\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    os << "  " << ids[i] << (i == 0 ? " [shape=doublecircle];\n" : ";\n");
  }
  for (const auto& e : graph.edges) {
    os << "  " << ids[e.from] << " -> " << ids[e.to] << " [label=\"r" << (e.reaction + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const ReachGraph& graph, const Network& network) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : graph.vertices) j["vertices"].push_back(format_configuration(network, v));
  j["edges"] = Json::array();
  for (const auto& e : graph.edges) j["edges"].push_back({e.from, e.reaction, e.to});
  j["complete"] = graph.complete;
  return j.dump(2) + "\n";
}

CompositionMap parse_composition(std::string_view text, const Network& network) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("SyntaxError", std::string("invalid JSON: ") + e.what(), 0, 0);
  }
  try {
    CompositionMap e;
    e.n = j.at("n").get<std::size_t>();
    e.image = IntMatrix::Zero(static_cast<Eigen::Index>(network.species_count()), static_cast<Eigen::Index>(e.n));
    std::set<SpeciesIndex> given;
    for (const auto& [name, row] : j.at("map").items()) {
      const SpeciesIndex s = network.index_of(name);
      given.insert(s);
      if (row.size() != e.n) throw ValidationError("DimensionMismatch", "image of " + name + " has the wrong length");
      for (std::size_t k = 0; k < e.n; ++k) {
        const Json& v = row[k];
        e.image(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(k)) =
            v.is_string() ? decimal(v.get<std::string>()) : BigInt(v.get<std::int64_t>());
      }
    }
    if (given.size() != network.species_count()) {
      throw ValidationError("DimensionMismatch", "composition map must cover every species");
    }
    validate_composition(network, e);
    return e;
  } catch (const Json::exception& ex) {
    throw ParseError("SyntaxError", std::string("malformed composition: ") + ex.what(), 0, 0);
  }
}

std::string composition_to_json(const CompositionMap& e, const Network& network) {
  Json j;
  j["n"] = e.n;
  Json map = Json::object();
  for (std::size_t s = 0; s < network.species_count(); ++s) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < e.image.cols(); ++k) row.push_back(count_json(e.image(static_cast<Eigen::Index>(s), k)));
    map[network.name(s)] = std::move(row);
  }
  j["map"] = std::move(map);
  return j.dump(2) + "\n";
}

}  // namespace crn
