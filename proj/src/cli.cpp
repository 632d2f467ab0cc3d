#include "crn/cli.hpp"

#include "crn/composition.hpp"
#include "crn/deciders.hpp"
#include "crn/ip.hpp"
#include "crn/reach.hpp"
#include "crn/reductions.hpp"
#include "crn/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace crn {
namespace {

using Json = nlohmann::ordered_json;

int exit_code(Answer a) {
  switch (a) {
    case Answer::yes: return 0;
    case Answer::no: return 1;
    case Answer::unknown: return 2;
  }
  return 2;
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("IoError", "cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<BigInt> bound_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("UsageError", "--ip-bound expects a nonnegative integer");
  }
  return BigInt(s.substr(std::min(s.find_first_not_of('0'), s.size() - 1)));
}

Json check_json(const std::string& query, const CompositionCheck& c, const CompositionMap& e,
                const Network& network) {
  Json j;
  j["query"] = query;
  j["answer"] = c.holds ? "yes" : "no";
  j["witness"] = Json::parse(composition_to_json(e, network));
  j["diagnostics"] = {{"case", nullptr}};
  if (!c.holds) j["diagnostics"]["reason"] = c.reason;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Atomicity deciders, reachability and reductions for chemical reaction networks", "crn"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "json";
  auto* parse = app.add_subcommand("parse", "Parse a network and print its stoichiometric matrix");
  parse->add_option("file", file, "network file ('-' for stdin)");
  parse->add_option("--format", format, "json or dsl")->check(CLI::IsMember({"json", "dsl"}));

  std::string cls;
  std::string atoms;
  std::string ip_bound;
  auto* decide = app.add_subcommand("decide", "Decide an atomicity class");
  decide->add_option("file", file, "network file ('-' for stdin)");
  decide->add_option("--class", cls, "primitive|subset|subset-fixed|reachable|rev-reachable")
      ->required()
      ->check(CLI::IsMember({"primitive", "subset", "subset-fixed", "reachable", "rev-reachable"}));
  decide->add_option("--atoms", atoms, "comma-separated atom set for subset-fixed");
  decide->add_option("--ip-bound", ip_bound, "per-variable search bound of the IP");
  decide->add_flag("--json", "JSON output (default)");

  std::string from, to, dot_path, require;
  std::size_t max_states = default_max_states();
  auto* reach = app.add_subcommand("reach", "Decide whether one configuration reaches another");
  reach->add_option("file", file, "network file ('-' for stdin)");
  reach->add_option("--from", from, "initial configuration")->required();
  reach->add_option("--to", to, "target configuration")->required();
  reach->add_option("--max-states", max_states, "BFS state budget")->check(CLI::PositiveNumber);
  reach->add_option("--require", require, "extra gate")->check(CLI::IsMember({"reachable-atomic"}));
  reach->add_flag("--json", "JSON output (default)");

  std::string graph_format = "dot";
  auto* graph = app.add_subcommand("graph", "Build the configuration reachability graph");
  graph->add_option("file", file, "network file ('-' for stdin)");
  graph->add_option("--from", from, "initial configuration")->required();
  graph->add_option("--max-states", max_states, "BFS state budget")->check(CLI::PositiveNumber);
  graph->add_option("--dot", dot_path, "also write DOT to this path");
  graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--require", require, "extra gate")->check(CLI::IsMember({"reachable-atomic"}));

  std::string kind;
  std::string input_bits;
  bool dimacs = false;
  bool no_validate = false;
  auto* reduce = app.add_subcommand("reduce", "Generate reduction instances");
  reduce->add_option("kind", kind, "sat2crn|tm2crn|crn2ip|bimol")
      ->required()
      ->check(CLI::IsMember({"sat2crn", "tm2crn", "crn2ip", "bimol"}));
  reduce->add_option("file", file, "input file ('-' for stdin)");
  reduce->add_option("--atoms", atoms, "atom set for crn2ip");
  reduce->add_option("--input", input_bits, "machine input for tm2crn");
  reduce->add_flag("--dimacs", dimacs, "read the formula as DIMACS CNF");
  reduce->add_flag("--no-validate", no_validate, "skip simulating the machine");

  std::string map_path;
  std::string check = "core";
  auto* compose = app.add_subcommand("compose", "Composition checks");
  compose->add_option("file", file, "network file ('-' for stdin)");
  compose->add_option("--map", map_path, "composition map JSON (default: associated composition of a witness)");
  compose->add_option("--check", check, "near-core|core|atomic|erc|report")
      ->check(CLI::IsMember({"near-core", "core", "atomic", "erc", "report"}));

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*parse) {
      const Network net = parse_network(slurp(file, in));
      if (format == "dsl") {
        out << serialize_network(net);
        return 0;
      }
      const StoichMatrix a = stoichiometric_matrix(net);
      Json j;
      j["species"] = net.species();
      j["reactions"] = a.reaction_labels;
      j["stoichiometric_matrix"] = Json::array();
      for (Eigen::Index r = 0; r < a.entries.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < a.entries.cols(); ++c) {
          const BigInt& v = a.entries(r, c);
          if (fits_int64(v)) {
            row.push_back(static_cast<std::int64_t>(v));
          } else {
            row.push_back(v.str());
          }
        }
        j["stoichiometric_matrix"].push_back(std::move(row));
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*decide) {
      const Network net = parse_network(slurp(file, in));
      Verdict v;
      if (cls == "primitive") {
        v = decide_primitive_atomic(net);
      } else if (cls == "subset") {
        v = decide_subset_atomic(net, bound_of(ip_bound));
      } else if (cls == "subset-fixed") {
        if (atoms.empty()) throw Error("UsageError", "--class subset-fixed needs --atoms");
        v = decide_subset_fixed_atomic(net, split_list(atoms), bound_of(ip_bound));
      } else if (cls == "reachable") {
        v = decide_reachably_atomic(net);
      } else {
        v = decide_reversibly_reachably_atomic(net);
      }
      out << verdict_to_json(v, net);
      return exit_code(v.answer);
    }

    auto gate = [&](const Network& net) {
      if (require.empty()) return;
      const Verdict v = decide_reachably_atomic(net);
      if (v.answer != Answer::yes) {
        throw Error("NotReachablyAtomic", "network is not reachably atomic (" + v.diagnosis.value_or("?") + ")");
      }
    };

    if (*reach) {
      const Network net = parse_network(slurp(file, in));
      gate(net);
      const Configuration c1 = parse_configuration(from, net);
      const Configuration c2 = parse_configuration(to, net);
      const ReachResult r = reachable(net, c1, c2, max_states);
      out << reach_to_json(r, net);
      if (r.answer == Answer::unknown) err << "state budget of " << max_states << " exhausted\n";
      return exit_code(r.answer);
    }

    if (*graph) {
      const Network net = parse_network(slurp(file, in));
      gate(net);
      const ReachGraph g = build_config_graph(net, parse_configuration(from, net), max_states);
      const std::string dot = export_dot(g, net);
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw Error("IoError", "cannot write '" + dot_path + "'");
        f << dot;
      }
      out << (graph_format == "json" ? graph_to_json(g, net) : dot);
      if (!g.complete) {
        err << "state budget of " << max_states << " exhausted; graph is partial\n";
        return 2;
      }
      return 0;
    }

    if (*reduce) {
      const std::string text = slurp(file, in);
      if (kind == "sat2crn") {
        const SatInstance f = dimacs ? parse_dimacs(text) : parse_sat(text);
        const ReducedCrnInstance r = sat_to_crn(f);
        out << serialize_network(r.network, r.provenance);
      } else if (kind == "tm2crn") {
        const TmSpec tm = parse_tm(text);
        const ReducedCrnInstance r = tm_to_crn(tm, input_bits, {.validate = !no_validate});
        auto comments = r.provenance;
        comments.push_back("c1 = " + format_configuration(r.network, *r.c1));
        comments.push_back("c2 = " + format_configuration(r.network, *r.c2));
        out << serialize_network(r.network, comments);
      } else if (kind == "crn2ip") {
        const Network net = parse_network(text);
        std::vector<SpeciesIndex> idx;
        for (const auto& a : split_list(atoms)) {
          auto s = net.find(a);
          if (!s) throw ValidationError("InvalidAtomSet", "atom '" + a + "' is not a species");
          idx.push_back(*s);
        }
        out << export_lp(crn_to_ip(net, idx));
      } else {
        const Network net = parse_network(text);
        out << serialize_network(bimolecularize(net), {"bimolecular form"});
      }
      return 0;
    }

    if (*compose) {
      const Network net = parse_network(slurp(file, in));
      CompositionMap e;
      if (!map_path.empty()) {
        e = parse_composition(slurp(map_path, in), net);
      } else {
        Verdict v = decide_reachably_atomic(net);
        if (v.answer != Answer::yes) v = decide_subset_atomic(net);
        if (v.answer != Answer::yes) {
          throw Error("NoWitness", "network has no subset-atomic witness; pass --map");
        }
        e = associated_composition(*v.witness);
      }
      validate_composition(net, e);
      Json j;
      if (check == "report") {
        const auto report = explicit_constructibility_report(net);
        j["query"] = "constructibility-report";
        j["answer"] = "yes";
        Json rows = Json::object();
        for (std::size_t s = 0; s < net.species_count(); ++s) {
          rows[net.name(s)] = {{"constructible", report[s].constructible},
                               {"destructible", report[s].destructible},
                               {"constructive", report[s].constructive},
                               {"destructive", report[s].destructive}};
        }
        j["witness"] = std::move(rows);
        j["diagnostics"] = {{"case", nullptr}};
        out << j.dump(2) << "\n";
        return 0;
      }
      CompositionCheck c;
      std::string query;
      if (check == "near-core") {
        c = is_near_core(net, e);
        query = "near-core";
      } else if (check == "core") {
        c = is_core(net, e);
        query = "core";
      } else if (check == "atomic") {
        c = is_atomic_composition(net, e);
        query = "atomic-composition";
      } else {
        c = is_explicitly_reversibly_constructive(net, e);
        query = "explicitly-reversibly-constructive";
      }
      out << check_json(query, c, e, net).dump(2) << "\n";
      return c.holds ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: [" << e.code() << "] " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crn
