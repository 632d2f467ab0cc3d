#include "crn/model.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace crn;

TEST_SUITE("model") {

TEST_CASE("configuration arithmetic") {
  auto c = Configuration::from_terms({{2, BigInt(1)}, {0, BigInt(3)}, {2, BigInt(2)}, {1, BigInt(0)}});
  REQUIRE(c.terms().size() == 2);
  CHECK(c.count(0) == 3);
  CHECK(c.count(1) == 0);
  CHECK(c.count(2) == 3);
  CHECK(c.size() == 6);
  CHECK(c.support() == std::vector<SpeciesIndex>{0, 2});
  CHECK(Configuration::unit(4).single_unit() == std::optional<SpeciesIndex>(4));
  CHECK_FALSE(c.single_unit());
  CHECK(Configuration::unit(0).fits_in(c));
  CHECK_FALSE(Configuration::unit(1).fits_in(c));
  CHECK((c - Configuration::unit(0, 3)) == Configuration::unit(2, 3));
  CHECK((BigInt(2) * Configuration::unit(1)) == Configuration::unit(1, 2));
  CHECK_THROWS_AS(Configuration::from_terms({{0, BigInt(-1)}}), ValidationError);
  CHECK_THROWS(Configuration::unit(0) - Configuration::unit(1));
}

TEST_CASE("network validation") {
  auto n = fixtures::net(fixtures::kWorked);
  CHECK(n.species() == std::vector<std::string>{"X", "Y", "Z", "W"});
  CHECK(n.reaction_count() == 2);

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  CHECK(code([] { fixtures::net("A -> A"); }) == "SelfLoopReaction");
  CHECK(code([] { fixtures::net("X -> Y\nX -> Y"); }) == "DuplicateReaction");
  CHECK(code([] { Network({"A", "A"}, {}); }) == "DuplicateSpecies");
  CHECK(code([] { Network({"1A"}, {}); }) == "InvalidSpeciesName");
  CHECK(code([] { Network({"A"}, {{Configuration::unit(0), Configuration::unit(3)}}); }) ==
        "UnknownSpeciesInReaction");
}

TEST_CASE("stoichiometric matrix") {
  auto a = stoichiometric_matrix(fixtures::net(fixtures::kWorkedXYWZ));
  IntMatrix expect(2, 4);
  expect << -2, -1, 2, 0, -1, -1, 0, 1;
  CHECK(a.entries == expect);
  CHECK(a.species_labels == std::vector<std::string>{"X", "Y", "W", "Z"});
  CHECK(a.reaction_labels[0] == "2X + Y + Z -> 2W + Z");

  auto xy = stoichiometric_matrix(fixtures::net("X -> 2Y"));
  IntMatrix one(1, 2);
  one << -1, 2;
  CHECK(xy.entries == one);

  auto empty = stoichiometric_matrix(Network({"A", "B", "C"}, {}));
  CHECK(empty.entries.rows() == 0);
  CHECK(empty.entries.cols() == 3);
}

TEST_CASE("matrix rows recompute p - r on random networks") {
  corpus::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto n = corpus::random_network(rng);
    auto a = stoichiometric_matrix(n).entries;
    for (std::size_t t = 0; t < n.reaction_count(); ++t) {
      for (std::size_t s = 0; s < n.species_count(); ++s) {
        const auto& rx = n.reactions()[t];
        CHECK(a(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) ==
              rx.products.count(s) - rx.reactants.count(s));
      }
    }
  }
}

TEST_CASE("firing") {
  auto n = fixtures::net(fixtures::kGraphExample);
  auto c = fixtures::config(n, {0, 2, 1, 0});
  CHECK_FALSE(fire(n.reactions()[0], c));
  auto next = fire(n.reactions()[1], c);
  REQUIRE(next);
  CHECK(*next == fixtures::config(n, {0, 1, 1, 9}));

  corpus::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto net = corpus::random_network(rng);
    auto start = corpus::random_complex(rng, net.species_count(), 5, 0.7);
    for (const auto& rx : net.reactions()) {
      auto out = fire(rx, start);
      CHECK(out.has_value() == rx.reactants.fits_in(start));
      if (out) CHECK((*out + rx.reactants) == (start + rx.products));
    }
  }
}

TEST_CASE("formatting and reversibility") {
  auto n = fixtures::net("2X + Y -> 0\nX <-> Y");
  CHECK(format_reaction(n, n.reactions()[0]) == "2X + Y -> 0");
  CHECK(format_configuration(n, fixtures::config(n, {2, 1})) == "{2X, 1Y}");
  CHECK(format_configuration(n, Configuration()) == "{}");
  CHECK_FALSE(is_reversible(n));
  CHECK(is_reversible(fixtures::net("X <-> Y")));
}

}
