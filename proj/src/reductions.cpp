#include "crn/reductions.hpp"

#include <algorithm>
#include <set>

namespace crn {

ReducedCrnInstance sat_to_crn(const SatInstance& formula) {
  if (formula.clauses.empty()) throw ValidationError("EmptyFormula", "formula has no clauses");
  const std::size_t n = formula.variables.size();
  for (const auto& clause : formula.clauses) {
    for (auto v : clause) {
      if (v >= n) throw ValidationError("WrongClauseArity", "clause mentions an undeclared variable");
    }
  }

  NetworkBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.species("S" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) b.species("X" + std::to_string(i));
  for (const char* atom : {"T", "F", "P", "Q"}) b.species(atom);

  std::vector<std::array<std::size_t, 3>> clauses;
  for (const auto& c : formula.clauses) {
    auto key = c;
    std::sort(key.begin(), key.end());
    const bool seen = std::any_of(clauses.begin(), clauses.end(), [&](auto other) {
      std::sort(other.begin(), other.end());
      return other == key;
    });
    if (!seen) clauses.push_back(c);
  }

  ReducedCrnInstance out;
  for (const char* series : {"S", "X"}) {
    const std::string carrier = series[0] == 'S' ? "P" : "Q";
    for (const auto& c : clauses) {
      std::vector<NetworkBuilder::NamedTerm> products;
      for (auto v : c) products.emplace_back(series + std::to_string(v + 1), 1);
      b.reaction({{carrier, 3}, {"F", 2}, {"T", 1}}, products);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto k = std::to_string(i);
    b.reaction({{"S" + k, 1}, {"Q", 1}}, {{"X" + k, 1}, {"P", 1}});
  }
  out.network = b.build();
  out.atoms = {"T", "F", "P", "Q"};

  std::string vars = "variables:";
  for (std::size_t i = 0; i < n; ++i) vars += " " + formula.variables[i] + "=" + std::to_string(i + 1);
  out.provenance.push_back("monotone 1-in-3-SAT reduction, atoms T F P Q");
  out.provenance.push_back(vars);
  for (std::size_t m = 0; m < formula.clauses.size(); ++m) {
    const auto& c = formula.clauses[m];
    out.provenance.push_back("clause " + std::to_string(m + 1) + ": " + formula.variables[c[0]] + " " +
                             formula.variables[c[1]] + " " + formula.variables[c[2]]);
  }
  return out;
}

Network bimolecularize(const Network& network) {
  NetworkBuilder b;
  for (const auto& s : network.species()) b.species(s);

  auto units = [&](const Configuration& c) {
    std::vector<std::string> out;
    for (const auto& [s, k] : c.terms()) {
      for (BigInt i = 0; i < k; ++i) out.push_back(network.name(s));
    }
    return out;
  };
  auto pair_of = [](const std::string& x, const std::string& y) {
    std::vector<NetworkBuilder::NamedTerm> out{{x, 1}};
    if (x == y) {
      out.front().second = 2;
    } else {
      out.emplace_back(y, 1);
    }
    return out;
  };

  for (std::size_t t = 0; t < network.reaction_count(); ++t) {
    const auto& rx = network.reactions()[t];
    if (rx.reactants.size() <= 2 && rx.products.size() <= 2) {
      b.reaction(rx.reactants, rx.products);
      continue;
    }
    std::size_t counter = 0;
    auto fresh = [&]() {
      std::string name = "M" + std::to_string(t + 1) + "_" + std::to_string(++counter);
      while (network.find(name) || b.has_species(name)) name += "_";
      b.species(name);
      return name;
    };
    auto named = [&](const Configuration& c) {
      std::vector<NetworkBuilder::NamedTerm> out;
      for (const auto& [s, k] : c.terms()) out.emplace_back(network.name(s), k);
      return out;
    };

    std::vector<NetworkBuilder::NamedTerm> fire_lhs;
    const auto in = units(rx.reactants);
    if (in.size() > 2) {
      std::string held = in[0];
      for (std::size_t i = 1; i + 1 < in.size(); ++i) {
        const std::string m = fresh();
        b.reaction(pair_of(held, in[i]), {{m, 1}});
        b.reaction({{m, 1}}, pair_of(held, in[i]));
        held = m;
      }
      fire_lhs = pair_of(held, in.back());
    } else {
      fire_lhs = named(rx.reactants);
    }

    const auto out = units(rx.products);
    if (out.size() > 2) {
      std::string next = fresh();
      b.reaction(fire_lhs, pair_of(next, out[0]));
      for (std::size_t i = 1; i + 2 < out.size(); ++i) {
        const std::string m = fresh();
        b.reaction({{next, 1}}, pair_of(m, out[i]));
        next = m;
      }
      b.reaction({{next, 1}}, pair_of(out[out.size() - 2], out.back()));
    } else {
      b.reaction(fire_lhs, named(rx.products));
    }
  }
  return b.build();
}

char symbol_char(TapeSymbol s) {
  switch (s) {
    case TapeSymbol::zero: return '0';
    case TapeSymbol::one: return '1';
    case TapeSymbol::blank: return 'B';
  }
  return 'B';
}

std::optional<TapeSymbol> symbol_from_char(char c) {
  switch (c) {
    case '0': return TapeSymbol::zero;
    case '1': return TapeSymbol::one;
    case 'B':
    case '_': return TapeSymbol::blank;
    default: return std::nullopt;
  }
}

void validate_tm(const TmSpec& tm) {
  const std::size_t t = tm.states.size();
  if (t == 0) throw ValidationError("InvalidMachine", "machine has no states");
  if (tm.initial >= t || tm.accept >= t || tm.reject >= t) {
    throw ValidationError("InvalidMachine", "designated state out of range");
  }
  if (tm.accept == tm.reject) throw ValidationError("InvalidMachine", "accept and reject states coincide");
  if (tm.space == 0) throw ValidationError("InvalidMachine", "space bound must be positive");
  if (std::set<std::string>(tm.states.begin(), tm.states.end()).size() != t) {
    throw ValidationError("InvalidMachine", "state names repeat");
  }
  for (const auto& s : tm.states) {
    if (!is_valid_species_name("Q_" + s)) {
      throw ValidationError("InvalidMachine", "state name '" + s + "' is not an identifier");
    }
  }
  for (const auto& [key, tr] : tm.transitions) {
    if (key.first >= t || tr.next >= t) throw ValidationError("InvalidMachine", "transition state out of range");
    if (key.first == tm.accept || key.first == tm.reject) {
      throw ValidationError("InvalidMachine", "halting states have no transitions");
    }
    if (tr.move != 1 && tr.move != -1) throw ValidationError("InvalidMachine", "moves must be -1 or +1");
  }
}

bool TmRun::accepted_cleanly() const {
  return halt == Halt::accept && head == 1 &&
         std::all_of(tape.begin(), tape.end(), [](TapeSymbol s) { return s == TapeSymbol::blank; });
}

TmRun simulate_tm(const TmSpec& tm, const std::string& input, std::size_t max_steps) {
  validate_tm(tm);
  if (input.size() > tm.space) throw ValidationError("InputTooLong", "input longer than the space bound");
  TmRun run;
  run.tape.assign(tm.space, TapeSymbol::blank);
  for (std::size_t i = 0; i < input.size(); ++i) {
    auto s = symbol_from_char(input[i]);
    if (!s || *s == TapeSymbol::blank) throw ValidationError("InvalidInput", "input must be a bit string");
    run.tape[i] = *s;
  }
  if (max_steps == 0) {
    // One more than the number of distinct configurations.
    std::size_t configs = tm.states.size() * tm.space;
    for (std::size_t i = 0; i < tm.space && configs < (1u << 30); ++i) configs *= 3;
    max_steps = configs + 1;
  }
  run.state = tm.initial;
  for (;;) {
    if (run.state == tm.accept) {
      run.halt = TmRun::Halt::accept;
      return run;
    }
    if (run.state == tm.reject) {
      run.halt = TmRun::Halt::reject;
      return run;
    }
    auto it = tm.transitions.find({run.state, run.tape[run.head - 1]});
    if (it == tm.transitions.end()) {
      run.halt = TmRun::Halt::stuck;
      return run;
    }
    if (run.steps >= max_steps) {
      run.halt = TmRun::Halt::step_limit;
      return run;
    }
    const auto& tr = it->second;
    const long target = static_cast<long>(run.head) + tr.move;
    if (target < 1 || target > static_cast<long>(tm.space)) {
      run.halt = TmRun::Halt::off_tape;
      return run;
    }
    run.tape[run.head - 1] = tr.write;
    run.head = static_cast<std::size_t>(target);
    run.state = tr.next;
    ++run.steps;
  }
}

namespace {

std::string tape_species(std::size_t k, TapeSymbol s) {
  return "T" + std::to_string(k) + "_" + symbol_char(s);
}

}  // namespace

ReducedCrnInstance tm_to_crn(const TmSpec& tm, const std::string& input,
                             TmReductionOptions options) {
  validate_tm(tm);
  if (input.size() > tm.space) throw ValidationError("InputTooLong", "input longer than the space bound");
  if (options.validate) {
    const TmRun run = simulate_tm(tm, input);
    if (run.halt == TmRun::Halt::off_tape) {
      throw ValidationError("BoundaryViolation", "the machine moves off the tape on this input");
    }
    if (run.halt == TmRun::Halt::accept && !run.accepted_cleanly()) {
      throw ValidationError("AcceptConvention",
                            "the machine must blank the tape and return the head to cell 1 before accepting");
    }
  } else {
    for (char c : input) {
      if (c != '0' && c != '1') throw ValidationError("InvalidInput", "input must be a bit string");
    }
  }

  const std::size_t p = tm.space;
  constexpr TapeSymbol kSymbols[] = {TapeSymbol::zero, TapeSymbol::one, TapeSymbol::blank};
  NetworkBuilder b;
  b.species("A");
  for (const auto& q : tm.states) b.species("Q_" + q);
  for (std::size_t k = 1; k <= p; ++k) b.species("P" + std::to_string(k));
  for (std::size_t k = 1; k <= p; ++k) {
    for (auto s : kSymbols) b.species(tape_species(k, s));
  }

  for (const auto& [key, tr] : tm.transitions) {
    const auto& [state, read] = key;
    for (std::size_t k = 1; k <= p; ++k) {
      const long target = static_cast<long>(k) + tr.move;
      if (target < 1 || target > static_cast<long>(p)) continue;
      b.reaction({{"Q_" + tm.states[state], 1}, {tape_species(k, read), 1}, {"P" + std::to_string(k), 1}},
                 {{"Q_" + tm.states[tr.next], 1},
                  {tape_species(k, tr.write), 1},
                  {"P" + std::to_string(target), 1}});
    }
  }
  Network skeleton = b.build();
  for (std::size_t s = 1; s < skeleton.species_count(); ++s) {
    b.reaction({{skeleton.name(s), 1}}, {{"A", 2}});
  }

  ReducedCrnInstance out;
  out.network = b.build();
  out.atoms = {"A"};
  const Network& net = out.network;
  std::vector<Configuration::Term> c1{{net.index_of("P1"), 1}, {net.index_of("Q_" + tm.states[tm.initial]), 1}};
  std::vector<Configuration::Term> c2{{net.index_of("P1"), 1}, {net.index_of("Q_" + tm.states[tm.accept]), 1}};
  for (std::size_t k = 1; k <= p; ++k) {
    const TapeSymbol s = k <= input.size() ? *symbol_from_char(input[k - 1]) : TapeSymbol::blank;
    c1.emplace_back(net.index_of(tape_species(k, s)), 1);
    c2.emplace_back(net.index_of(tape_species(k, TapeSymbol::blank)), 1);
  }
  out.c1 = Configuration::from_terms(std::move(c1));
  out.c2 = Configuration::from_terms(std::move(c2));
  out.provenance.push_back("space-bounded machine reduction, atoms A");
  out.provenance.push_back("states " + std::to_string(tm.states.size()) + ", space " + std::to_string(p) +
                           ", input \"" + input + "\"");
  return out;
}

}  // namespace crn
