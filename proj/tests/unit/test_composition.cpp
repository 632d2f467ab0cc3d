#include "crn/composition.hpp"
#include "crn/exactq.hpp"
#include "crn/textio.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace crn;

namespace {

CompositionMap comp(std::size_t n, std::vector<std::vector<long>> rows) {
  CompositionMap e;
  e.n = n;
  e.image = IntMatrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) e.image(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return e;
}

RationalVector unit(std::size_t size, std::size_t i) {
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(size));
  v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

// dim ker E~ = |Lambda| - |Delta| = rank(U), and the two spaces coincide.
void check_kernel_span(const Network& n, const DecompositionWitness& w) {
  const auto e = associated_composition(w);
  const RationalMatrix et = to_rational(e.image).transpose();
  const auto ker = rank_and_kernel_basis(et).kernel_basis;
  const auto u = single_molecule_vectors(n, w);
  const auto dim = static_cast<Eigen::Index>(ker.size());
  CHECK(dim == static_cast<Eigen::Index>(n.species_count() - w.atoms.size()));
  CHECK(u.rank == dim);
  RationalMatrix stacked(u.vectors.rows() + dim, u.vectors.cols());
  stacked.topRows(u.vectors.rows()) = u.vectors;
  for (Eigen::Index i = 0; i < dim; ++i) stacked.row(u.vectors.rows() + i) = ker[static_cast<std::size_t>(i)].transpose();
  CHECK(rank_of(stacked) == dim);
  // and U lies in ker E~ directly
  CHECK((et * u.vectors.transpose()).isZero());
}

}  // namespace

TEST_SUITE("composition") {

TEST_CASE("extended composition") {
  auto worked = fixtures::net(fixtures::kWorked);
  auto w = decide_subset_fixed_atomic(worked, {"X"}).witness;
  REQUIRE(w);
  auto e = associated_composition(*w);
  RationalVector y = unit(4, worked.index_of("Y"));
  CHECK(extended_composition_apply(e, y) == RationalVector::Constant(1, Rational(2)));
  CHECK(extended_composition_apply(e, RationalVector::Zero(4)).isZero());
  CHECK(extended_composition_apply(e, unit(4, worked.index_of("X"))) == unit(1, 0));
  CHECK_THROWS_AS(extended_composition_apply(e, RationalVector::Zero(3)), ValidationError);
}

TEST_CASE("validation") {
  auto n = fixtures::net("X -> Y");
  CHECK_THROWS_AS(validate_composition(n, comp(1, {{1}})), ValidationError);
  CHECK_THROWS_AS(validate_composition(n, comp(1, {{1}, {0}})), ValidationError);
  CHECK_THROWS_AS(validate_composition(n, comp(1, {{1}, {-1}})), ValidationError);
  CHECK_NOTHROW(validate_composition(n, comp(1, {{1}, {2}})));
}

TEST_CASE("near core") {
  auto worked = fixtures::net(fixtures::kWorked);
  auto w = decide_subset_fixed_atomic(worked, {"X"}).witness;
  CHECK(is_near_core(worked, associated_composition(*w)));

  auto xy = fixtures::net("X -> Y");
  auto bad = is_near_core(xy, comp(1, {{1}, {2}}));
  CHECK_FALSE(bad);
  CHECK(bad.reason.find("X -> Y") != std::string::npos);

  auto abc = fixtures::net("A + B -> C");
  CHECK(is_near_core(abc, comp(1, {{1}, {1}, {2}})));
  CHECK_FALSE(is_atomic_composition(abc, comp(1, {{1}, {1}, {2}})));
  CHECK(is_atomic_composition(abc, comp(2, {{1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(is_near_core(abc, comp(2, {{2, 0}, {0, 2}, {2, 2}})));
}

TEST_CASE("core") {
  auto xy = fixtures::net("X <-> Y");
  CHECK(is_core(xy, comp(1, {{1}, {1}})));

  // A + C -> D with d_C = 2A, d_D = 3A: Upsilon has dimension 2, span(R) only 1.
  auto thin = fixtures::net("species A, C, D\nA + C -> D");
  auto e = comp(1, {{1}, {2}, {3}});
  CHECK(is_near_core(thin, e));
  CHECK_FALSE(is_core(thin, e));

  auto aug = fixtures::net(fixtures::kAugmented);
  auto r = decide_reachably_atomic(aug);
  CHECK(is_core(aug, associated_composition(*r.witness)));
}

TEST_CASE("atoms from composition") {
  auto abc = fixtures::net("A + B -> C");
  auto w = atoms_from_composition(abc, comp(2, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(w.atoms == std::vector<std::string>{"A", "B"});
  CHECK_FALSE(check_witness_algebra(abc, w, AtomicClass::subset));
  CHECK_THROWS_AS(atoms_from_composition(abc, comp(1, {{1}, {1}, {2}})), ValidationError);
  auto classes = elementary_isomeric_classes(comp(1, {{1}, {1}, {2}}));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 2);
}

TEST_CASE("single molecule vectors") {
  auto abc = fixtures::net("A + B -> C");
  auto w = atoms_from_composition(abc, comp(2, {{1, 0}, {0, 1}, {1, 1}}));
  auto u = single_molecule_vectors(abc, w);
  CHECK(u.molecules == std::vector<SpeciesIndex>{2});
  RationalMatrix expect(1, 3);
  expect << Rational(1), Rational(1), Rational(-1);
  CHECK(u.vectors == expect);
  CHECK(u.rank == 1);
  w.atoms = {"A", "Q"};
  CHECK_THROWS_AS(single_molecule_vectors(abc, w), ValidationError);
}

TEST_CASE("constructibility report") {
  auto n = fixtures::net("A + B -> C\nC -> D");
  auto rep = explicit_constructibility_report(n);
  CHECK(rep[n.index_of("C")].constructible);
  CHECK(rep[n.index_of("D")].constructible);
  CHECK(rep[n.index_of("A")].constructive);
  CHECK(rep[n.index_of("B")].constructive);
  CHECK_FALSE(rep[n.index_of("A")].constructible);
  CHECK_FALSE(rep[n.index_of("C")].destructible);

  auto xy = fixtures::net("X + Y <-> 4Z");
  for (const auto& r : explicit_constructibility_report(xy)) {
    CHECK_FALSE(r.constructible);
    CHECK_FALSE(r.constructive);
  }
}

TEST_CASE("explicitly reversibly constructive") {
  auto full = fixtures::net(fixtures::kAugmentedReversible);
  auto r = decide_reversibly_reachably_atomic(full);
  REQUIRE(r.answer == Answer::yes);
  auto e = associated_composition(*r.witness);
  CHECK(is_explicitly_reversibly_constructive(full, e));

  // Drop Y -> 2X: Y can no longer be taken apart in one dissociation.
  std::vector<Reaction> kept;
  for (const auto& rx : full.reactions()) {
    if (format_reaction(full, rx) != "Y -> 2X") kept.push_back(rx);
  }
  Network cut(full.species(), kept);
  auto res = is_explicitly_reversibly_constructive(cut, e);
  CHECK_FALSE(res);
  CHECK(res.reason.find("destructible") != std::string::npos);

  auto xy = fixtures::net("X -> Y");
  CHECK_FALSE(is_explicitly_reversibly_constructive(xy, comp(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("kernel-span equivalence on subset witnesses") {
  corpus::Rng rng(81);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    corpus::AtomicOptions o;
    o.decomposition_rate = i % 2 ? 1.0 : 0.3;
    Network n = i % 4 == 3 ? corpus::random_network(rng, 5, 5, 3) : corpus::atomic_network(rng, o).network;
    auto s = decide_subset_atomic(n);
    if (s.answer != Answer::yes) continue;
    ++checked;
    CAPTURE(serialize_network(n));
    check_kernel_span(n, *s.witness);
  }
  CHECK(checked > 80);
}

TEST_CASE("subset atomic iff an atomic composition exists") {
  corpus::Rng rng(82);
  int yes = 0, no = 0;
  for (int i = 0; i < 120; ++i) {
    Network n = i % 2 ? corpus::random_network(rng, 4, 4, 3)
                      : corpus::atomic_network(rng, {1, 2, 1, 2, 2, 2, 0.5, false}).network;
    if (n.species_count() > 4) continue;
    CAPTURE(serialize_network(n));
    auto s = decide_subset_atomic(n);
    if (s.answer == Answer::yes) {
      ++yes;
      // witness -> composition
      auto e = associated_composition(*s.witness);
      CHECK(is_atomic_composition(n, e));
      // composition -> witness
      auto back = atoms_from_composition(n, e);
      CHECK_FALSE(check_witness_algebra(n, back, AtomicClass::subset));
    } else {
      ++no;
    }
    // Every composition assembled from an exhaustive-search decomposition.
    if (auto hit = oracle::exhaustive_subset(n, 4)) {
      CompositionMap e;
      e.n = hit->atoms.size();
      e.image = IntMatrix(static_cast<Eigen::Index>(n.species_count()), static_cast<Eigen::Index>(e.n));
      for (std::size_t r = 0; r < n.species_count(); ++r)
        for (std::size_t c = 0; c < e.n; ++c) e.image(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = hit->d[r][c];
      CHECK(is_atomic_composition(n, e));
      CHECK(s.answer == Answer::yes);
    }
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}

TEST_CASE("reachably atomic networks admit a core composition") {
  corpus::Rng rng(83);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto n = corpus::atomic_network(rng).network;
    auto r = decide_reachably_atomic(n);
    if (r.answer != Answer::yes) continue;
    ++checked;
    CHECK(is_core(n, associated_composition(*r.witness)));
  }
  CHECK(checked > 60);
}

TEST_CASE("reversibly reachably atomic iff explicitly reversibly constructive") {
  corpus::Rng rng(84);
  int yes = 0, no = 0;
  for (int i = 0; i < 150; ++i) {
    corpus::AtomicOptions o;
    o.reversible = true;
    o.decomposition_rate = i % 3 == 0 ? 0.6 : 1.0;
    auto n = corpus::atomic_network(rng, o).network;
    REQUIRE(is_reversible(n));
    CAPTURE(serialize_network(n));
    const bool lhs = decide_reversibly_reachably_atomic(n).answer == Answer::yes;
    auto r = decide_reachably_atomic(n);
    auto s = r.answer == Answer::yes ? r : decide_subset_atomic(n);
    bool rhs = false;
    if (s.answer == Answer::yes) {
      auto e = associated_composition(*s.witness);
      bool singleton = true;
      for (const auto& cls : elementary_isomeric_classes(e)) singleton = singleton && cls.size() == 1;
      rhs = singleton && is_explicitly_reversibly_constructive(n, e).holds;
    }
    CHECK(lhs == rhs);
    (lhs ? yes : no) += 1;
  }
  CHECK(yes > 20);
  CHECK(no > 10);
}

}
