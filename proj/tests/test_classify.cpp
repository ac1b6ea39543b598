#include <doctest.h>

#include <cmath>
#include <random>

#include "support/random.hpp"
#include "tangle4/catalog.hpp"
#include "tangle4/classify.hpp"
#include "tangle4/errors.hpp"
#include "tangle4/ket.hpp"
#include "tangle4/orbit.hpp"

using tangle4::Complex;
using tangle4::Family;
using tangle4::Outcome;
using tangle4::PureState4;
using tangle4::SymmetricLevel;

TEST_CASE("discriminate separates GHZ from W") {
  const PureState4 ghz = tangle4::build_representative("GHZ");
  const PureState4 w4 = tangle4::build_representative("W4");
  const tangle4::Verdict verdict = tangle4::discriminate(ghz, w4);
  CHECK(verdict.distinct());
  // Every generator is nonzero on one side and zero on the other.
  REQUIRE(verdict.witnesses.size() == 5);
  CHECK(verdict.witnesses[0].name == "A");
  CHECK(std::abs(verdict.witnesses[0].lhs - Complex{2.0, 0.0}) < 1e-12);
  CHECK(std::abs(verdict.witnesses[0].rhs) < 1e-12);
}

TEST_CASE("discriminate is inconclusive on a state against itself") {
  std::mt19937_64 rng(41);
  const PureState4 psi = testrand::random_state(rng);
  const tangle4::Verdict verdict = tangle4::discriminate(psi, psi);
  CHECK(verdict.outcome == Outcome::Inconclusive);
  CHECK(verdict.witnesses.empty());
}

TEST_CASE("discriminate ignores overall scale") {
  std::mt19937_64 rng(42);
  const PureState4 psi = testrand::random_state(rng);
  CHECK_FALSE(tangle4::discriminate(psi, Complex{3.0, 0.0} * psi).distinct());
  CHECK_FALSE(tangle4::discriminate(psi, Complex{0.4, 1.1} * psi).distinct());
}

TEST_CASE("discriminate separates the two G-slice points") {
  const PureState4 g11 = tangle4::build_representative("G-ab00");
  const PureState4 gsd = tangle4::build_representative(
      "G-ab00", {{"d", Complex{std::sqrt(2.0), 0.0}}});
  const tangle4::Verdict verdict = tangle4::discriminate(g11, gsd);
  REQUIRE(verdict.distinct());
  bool found = false;
  for (const tangle4::Witness& w : verdict.witnesses) {
    if (w.name == "A/B1") {
      found = true;
      CHECK(std::abs(w.lhs - Complex{44.0, 0.0}) < 1e-9);
      CHECK(std::abs(w.rhs - Complex{36.0, 0.0}) < 1e-9);
    }
  }
  CHECK(found);
}

TEST_CASE("discriminate is inconclusive along local orbits") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    const PureState4 psi = testrand::random_state(rng);
    const PureState4 moved = tangle4::apply_local(psi, tangle4::random_sl2_quadruple(rng));
    CHECK_FALSE(tangle4::discriminate(psi, moved, 1e-8).distinct());
  }
  for (const char* name : {"GHZ", "W4", "cluster", "X4"}) {
    const PureState4 base = tangle4::build_representative(name);
    for (const PureState4& sample : tangle4::orbit_samples(base, 3, 7)) {
      CHECK_FALSE(tangle4::discriminate(base, sample, 1e-8).distinct());
    }
  }
}

TEST_CASE("discriminate rejects zero states and bad tolerances") {
  const PureState4 ghz = tangle4::build_representative("GHZ");
  CHECK_THROWS_AS(tangle4::discriminate(ghz, PureState4{}), tangle4::zero_state_error);
  CHECK_THROWS_AS(tangle4::discriminate(PureState4{}, ghz), tangle4::zero_state_error);
  CHECK_THROWS_AS(tangle4::discriminate(ghz, ghz, 0.0), std::invalid_argument);
}

TEST_CASE("make_eta balances the homogeneity degrees") {
  const tangle4::EtaValue eta = tangle4::make_eta({3.0, 0.0}, 2, {5.0, 0.0}, 4);
  CHECK(eta.power_p == 2);
  CHECK(eta.power_q == 1);
  CHECK(std::abs(eta.numerator - Complex{9.0, 0.0}) < 1e-15);
  CHECK(std::abs(eta.denominator - Complex{5.0, 0.0}) < 1e-15);
  const tangle4::EtaValue eta2 = tangle4::make_eta({2.0, 0.0}, 4, {2.0, 0.0}, 6);
  CHECK(eta2.power_p == 3);
  CHECK(eta2.power_q == 2);
}

TEST_CASE("classify anchors") {
  auto family_of = [](const char* name) {
    return tangle4::classify(tangle4::build_representative(name)).family;
  };
  CHECK(family_of("W4") == Family::W);
  CHECK(family_of("Dcfg-4") == Family::W);
  CHECK(family_of("W-000-0kPsi-b") == Family::W);
  CHECK(family_of("GHZ") == Family::GHZ);
  CHECK(family_of("W-000-0kPsi-a") == Family::GHZ);
  CHECK(family_of("W-000-GHZ") == Family::GHZ);
  CHECK(family_of("W-0kPsi-0jPsi-a") == Family::GHZ);
  CHECK(family_of("W-0kPsi-0jPsi-b") == Family::GHZ);
  CHECK(family_of("cluster") == Family::Cluster);
  CHECK(family_of("W-0kPsi-0kPsi-a") == Family::Cluster);
  CHECK(family_of("W-0kPsi-0kPsi-b") == Family::Cluster);
  CHECK(family_of("W-0kPsi-GHZ") == Family::Cluster);
  CHECK(family_of("G-ab00") == Family::GHZ);  // a = d is the GHZ point
  CHECK(tangle4::classify(tangle4::build_representative(
                              "G-ab00", {{"d", Complex{std::sqrt(2.0), 0.0}}}))
            .family == Family::Cluster);
  CHECK(family_of("X4") == Family::X);
  CHECK(family_of("W-GHZ-W") == Family::X);
  CHECK(family_of("Dcfg-1-1-1-1") == Family::X);
}

TEST_CASE("classify does not set the symmetric level") {
  const tangle4::FamilyLabel label =
      tangle4::classify(tangle4::build_representative("GHZ"));
  CHECK_FALSE(label.symmetric_level.has_value());
}

TEST_CASE("classify_symmetric levels") {
  const tangle4::FamilyLabel ghz =
      tangle4::classify_symmetric(tangle4::build_representative("GHZ"));
  CHECK(ghz.family == Family::GHZ);
  CHECK(ghz.symmetric_level == SymmetricLevel::Dnonzero);

  const tangle4::FamilyLabel w4 =
      tangle4::classify_symmetric(tangle4::build_representative("W4"));
  CHECK(w4.family == Family::W);
  CHECK(w4.symmetric_level == SymmetricLevel::AllZero);

  const tangle4::FamilyLabel d22 = tangle4::classify_symmetric(tangle4::build_dicke(2));
  CHECK(d22.family == Family::X);
  CHECK(d22.symmetric_level == SymmetricLevel::AnonzeroDzero);

  const tangle4::FamilyLabel sep =
      tangle4::classify_symmetric(tangle4::build_representative("Dcfg-4"));
  CHECK(sep.family == Family::W);
  CHECK(sep.symmetric_level == SymmetricLevel::AllZero);
}

TEST_CASE("the D boundary point keeps A alive") {
  // mu^2 = 2/3 sits outside the four-distinct-roots family: D vanishes
  // there while A stays nonzero.
  const PureState4 boundary = tangle4::parse_ket("|0000> + |1111>") +
                              Complex{std::sqrt(2.0 / 3.0), 0.0} * tangle4::build_dicke(2);
  const tangle4::FamilyLabel label = tangle4::classify_symmetric(boundary);
  CHECK(label.symmetric_level == SymmetricLevel::AnonzeroDzero);
}

TEST_CASE("classify_symmetric rejects asymmetric and degenerate input") {
  CHECK_THROWS_AS(tangle4::classify_symmetric(tangle4::parse_ket("|1100>")),
                  tangle4::not_symmetric_error);
  CHECK_THROWS_AS(tangle4::classify_symmetric(PureState4{}), tangle4::zero_state_error);
  CHECK_THROWS_AS(tangle4::classify(PureState4{}), tangle4::zero_state_error);
  CHECK_THROWS_AS(tangle4::classify(tangle4::parse_ket("|0000>"), -1.0),
                  std::invalid_argument);
}

TEST_CASE("classification is stable under scaling and local moves") {
  std::mt19937_64 rng(44);
  for (const char* name : {"GHZ", "W4", "cluster", "X4"}) {
    const PureState4 base = tangle4::build_representative(name);
    const Family family = tangle4::classify(base).family;
    CHECK(tangle4::classify(Complex{0.1, 0.7} * base).family == family);
    // A mild local move keeps the label; wild stretches are exercised at
    // the looser tolerances of the orbit tests instead.
    const PureState4 moved = tangle4::apply_local(base, tangle4::random_sl2_quadruple(rng));
    CHECK(tangle4::discriminate(base, moved, 1e-8).outcome == Outcome::Inconclusive);
  }
}

TEST_CASE("label strings") {
  CHECK(tangle4::to_string(Family::W) == "W");
  CHECK(tangle4::to_string(Family::GHZ) == "GHZ");
  CHECK(tangle4::to_string(Family::Cluster) == "cluster");
  CHECK(tangle4::to_string(Family::X) == "X");
  CHECK(tangle4::to_string(Outcome::Inconclusive) == "Inconclusive");
  CHECK(tangle4::to_string(Outcome::DistinctClasses) == "DistinctClasses");
  CHECK(tangle4::to_string(SymmetricLevel::AllZero) == "AllZero");
  CHECK(tangle4::to_string(SymmetricLevel::AnonzeroDzero) == "AnonzeroDzero");
  CHECK(tangle4::to_string(SymmetricLevel::Dnonzero) == "Dnonzero");
}
