#include "crn/deciders.hpp"
#include "crn/reach.hpp"
#include "crn/reductions.hpp"
#include "crn/textio.hpp"
#include "support/corpus.hpp"
#include "support/machines.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace crn;

namespace {

SatInstance formula(std::size_t vars, std::vector<std::array<std::size_t, 3>> clauses) {
  SatInstance f;
  for (std::size_t i = 1; i <= vars; ++i) f.variables.push_back("v" + std::to_string(i));
  f.clauses = std::move(clauses);
  return f;
}

BigInt max_coefficient(const Network& n) {
  BigInt out = 0;
  for (const auto& rx : n.reactions()) {
    for (const auto* side : {&rx.reactants, &rx.products}) {
      for (const auto& [s, k] : side->terms()) out = std::max(out, k);
    }
  }
  return out;
}

bool has_reaction(const Network& n, const std::string& text) {
  for (const auto& rx : n.reactions()) {
    if (format_reaction(n, rx) == text) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("five-variable two-clause instance") {
  auto inst = sat_to_crn(formula(5, {{0, 2, 3}, {2, 1, 4}}));
  const auto& n = inst.network;
  CHECK(n.species_count() == 14);
  CHECK(n.reaction_count() == 9);
  CHECK(inst.atoms == std::vector<std::string>{"T", "F", "P", "Q"});
  CHECK(has_reaction(n, "T + 2F + 3P -> S1 + S3 + S4"));
  CHECK(has_reaction(n, "T + 2F + 3P -> S2 + S3 + S5"));
  CHECK(has_reaction(n, "T + 2F + 3Q -> X1 + X3 + X4"));
  CHECK(has_reaction(n, "T + 2F + 3Q -> X2 + X3 + X5"));
  for (int i = 1; i <= 5; ++i) {
    CHECK(has_reaction(n, "S" + std::to_string(i) + " + Q -> X" + std::to_string(i) + " + P"));
  }
  CHECK(max_coefficient(n) <= 3);
  CHECK(oracle::one_in_three(5, {{0, 2, 3}, {2, 1, 4}}));
  auto v = decide_subset_fixed_atomic(n, inst.atoms);
  REQUIRE(v.answer == Answer::yes);
  CHECK_FALSE(check_witness(n, *v.witness, AtomicClass::subset));
}

TEST_CASE("sat reduction shapes and errors") {
  auto one = sat_to_crn(formula(3, {{0, 1, 2}}));
  CHECK(one.network.species_count() == 10);
  CHECK(one.network.reaction_count() == 5);
  auto repeated = sat_to_crn(formula(3, {{0, 1, 2}, {2, 1, 0}}));
  CHECK(repeated.network.reaction_count() == 5);
  try {
    sat_to_crn(formula(3, {}));
    FAIL("expected EmptyFormula");
  } catch (const Error& e) {
    CHECK(e.code() == "EmptyFormula");
  }
  CHECK_THROWS_AS(sat_to_crn(formula(2, {{0, 1, 2}})), ValidationError);
}

TEST_CASE("sat reduction agrees with brute force on random formulas") {
  corpus::Rng rng(71);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 60; ++t) {
    const auto vars = static_cast<std::size_t>(corpus::uniform(rng, 3, 4));
    std::vector<std::array<std::size_t, 3>> clauses;
    const int k = corpus::uniform(rng, 1, 3);
    for (int c = 0; c < k; ++c) {
      std::array<std::size_t, 3> cl{};
      for (auto& v : cl) v = static_cast<std::size_t>(corpus::uniform(rng, 0, static_cast<int>(vars) - 1));
      clauses.push_back(cl);
    }
    auto inst = sat_to_crn(formula(vars, clauses));
    CHECK(max_coefficient(inst.network) <= 3);
    const auto got = decide_subset_fixed_atomic(inst.network, inst.atoms).answer;
    const bool expect = oracle::one_in_three(vars, clauses);
    CAPTURE(serialize_network(inst.network));
    CHECK(got == (expect ? Answer::yes : Answer::no));
    (expect ? sat : unsat) += 1;
  }
  CHECK(sat > 5);
  CHECK(unsat > 5);
}

TEST_CASE("bimolecularize") {
  auto chain = bimolecularize(parse_network("3P + 2F + T -> S1 + S2 + S3"));
  CHECK(chain.species_count() == 6 + 5);
  CHECK(chain.reaction_count() == 10);
  for (const auto& rx : chain.reactions()) {
    CHECK(rx.reactants.size() <= 2);
    CHECK(rx.products.size() <= 2);
  }
  // The original reaction is still realizable.
  auto orig = parse_network("3P + 2F + T -> S1 + S2 + S3");
  Configuration from, to;
  for (const auto& [s, k] : orig.reactions()[0].reactants.terms()) from = from + Configuration::unit(chain.index_of(orig.name(s)), k);
  for (const auto& [s, k] : orig.reactions()[0].products.terms()) to = to + Configuration::unit(chain.index_of(orig.name(s)), k);
  CHECK(reachable(chain, from, to).answer == Answer::yes);

  auto small = parse_network("A + B -> C");
  CHECK(bimolecularize(small) == small);

  auto clash = bimolecularize(parse_network("M1_1 + 2A -> B"));
  CHECK(clash.find("M1_1_"));

  auto inst = sat_to_crn(formula(5, {{0, 2, 3}, {2, 1, 4}}));
  auto bi = bimolecularize(inst.network);
  const std::size_t k = 2;
  CHECK(bi.species_count() == inst.network.species_count() + 10 * k);
  CHECK(bi.reaction_count() == inst.network.reaction_count() - 2 * k + 20 * k);
  CHECK(max_coefficient(bi) <= 3);
  CHECK(decide_subset_fixed_atomic(bi, inst.atoms).answer == Answer::yes);
}

TEST_CASE("tm species count") {
  auto m = machines::make(3, 2, {{0, 1, 1, 2, +1}});
  auto inst = tm_to_crn(m.spec, "1", {false});
  // A, one species per state, one head position per cell, three symbols per cell.
  CHECK(inst.network.species_count() == 1 + 3 + 2 + 3 * 2);
  CHECK(inst.network.species_count() == 12);
  CHECK(inst.c1->size() == 2 + 2);
}

TEST_CASE("first-bit machine") {
  auto m = machines::first_bit_one(2);
  auto yes = tm_to_crn(m.spec, "1");
  CHECK(reachable(yes.network, *yes.c1, *yes.c2).answer == Answer::yes);
  auto no = tm_to_crn(m.spec, "0");
  CHECK(reachable(no.network, *no.c1, *no.c2).answer == Answer::no);
  CHECK(simulate_tm(m.spec, "1").accepted_cleanly());
  CHECK(simulate_tm(m.spec, "0").halt == TmRun::Halt::reject);

  auto r = decide_reachably_atomic(yes.network);
  REQUIRE(r.answer == Answer::yes);
  CHECK(r.witness->atoms == std::vector<std::string>{"A"});
  CHECK(max_coefficient(yes.network) <= 3);

  try {
    tm_to_crn(m.spec, "11");
    FAIL("expected BoundaryViolation");
  } catch (const Error& e) {
    CHECK(e.code() == "BoundaryViolation");
  }
  CHECK_THROWS_AS(tm_to_crn(m.spec, "111"), ValidationError);
  CHECK_THROWS_AS(tm_to_crn(m.spec, "2"), ValidationError);
}

TEST_CASE("accept convention") {
  // Accepts immediately on cell 1 without erasing the input.
  auto lazy = machines::make(3, 2, {{0, 1, 1, 1, +1}});
  try {
    tm_to_crn(lazy.spec, "1");
    FAIL("expected AcceptConvention");
  } catch (const Error& e) {
    CHECK(e.code() == "AcceptConvention");
  }
  auto inst = tm_to_crn(lazy.spec, "1", {false});
  CHECK(reachable(inst.network, *inst.c1, *inst.c2).answer == Answer::no);
}

TEST_CASE("invalid machines") {
  auto bad = machines::make(3, 1, {{1, 0, 0, 0, +1}});
  CHECK_THROWS_AS(validate_tm(bad.spec), ValidationError);
  auto zero = machines::make(3, 1, {});
  zero.spec.space = 0;
  CHECK_THROWS_AS(validate_tm(zero.spec), ValidationError);
  auto move = machines::make(3, 1, {{0, 0, 0, 0, 2}});
  CHECK_THROWS_AS(validate_tm(move.spec), ValidationError);
}

TEST_CASE("random machines agree with the plain interpreter") {
  corpus::Rng rng(72);
  int accepted = 0;
  for (int t = 0; t < 25; ++t) {
    auto m = machines::random_machine(rng);
    for (const auto& input : machines::inputs_up_to(static_cast<int>(m.spec.space))) {
      auto inst = tm_to_crn(m.spec, input, {false});
      const bool expect = oracle::machine_accepts(m.plain, machines::bits(input));
      CHECK(simulate_tm(m.spec, input).accepted_cleanly() == expect);
      auto got = reachable(inst.network, *inst.c1, *inst.c2);
      CHECK(got.answer == (expect ? Answer::yes : Answer::no));
      accepted += expect;
    }
  }
  CHECK(accepted > 0);
}

}
