// The frozen catalog fixture holds independently computed invariant values
// for every entry at its default parameters. The engine must reproduce them.
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "tangle4/catalog.hpp"
#include "tangle4/classify.hpp"
#include "tangle4/invariants.hpp"
#include "tangle4/json_io.hpp"
#include "tangle4/ket.hpp"

#ifndef TANGLE4_FIXTURE_FILE
#error "TANGLE4_FIXTURE_FILE must point at data/catalog_fixtures.json"
#endif

using tangle4::Complex;
using tangle4::Json;
using tangle4::PureState4;

namespace {

const Json& fixture_doc() {
  static const Json doc = [] {
    std::ifstream in(TANGLE4_FIXTURE_FILE);
    REQUIRE_MESSAGE(in.good(), "missing fixture file " << TANGLE4_FIXTURE_FILE);
    return Json::parse(in);
  }();
  return doc;
}

int invariant_index(const std::string& name) {
  for (int i = 0; i < 10; ++i) {
    if (name == tangle4::kInvariantInfo[i].name) {
      return i;
    }
  }
  FAIL("unknown invariant " << name);
  return -1;
}

}  // namespace

TEST_CASE("fixture entries and catalog entries agree one to one") {
  const Json& doc = fixture_doc();
  REQUIRE(doc.contains("entries"));
  std::set<std::string> fixture_names;
  for (const Json& entry : doc["entries"]) {
    fixture_names.insert(entry["name"].get<std::string>());
  }
  CHECK(fixture_names.size() == doc["entries"].size());
  CHECK(fixture_names.size() == tangle4::catalog_entries().size());
  for (const tangle4::CatalogEntry& entry : tangle4::catalog_entries()) {
    CHECK(fixture_names.count(entry.name) == 1);
  }
}

TEST_CASE("the engine reproduces every frozen invariant value") {
  for (const Json& entry : fixture_doc()["entries"]) {
    const std::string name = entry["name"].get<std::string>();
    INFO("entry " << name);
    const tangle4::CatalogEntry* meta = tangle4::find_catalog_entry(name);
    REQUIRE(meta != nullptr);
    CHECK(meta->family == entry["family"].get<std::string>());

    const PureState4 state = tangle4::build_representative(name);
    const tangle4::InvariantSet set = tangle4::evaluate_invariants(state);
    const double norm = state.norm();
    for (const auto& item : entry["expected"]["values"].items()) {
      const int idx = invariant_index(item.key());
      const Complex want = tangle4::complex_from_json(item.value());
      const Complex got = tangle4::invariant_entry(set, idx);
      const double scale =
          std::max({std::abs(got), std::abs(want),
                    std::pow(norm, tangle4::kInvariantInfo[idx].degree)});
      INFO("invariant " << item.key());
      CHECK(std::abs(got - want) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("frozen relations parse and origins are tagged") {
  for (const Json& entry : fixture_doc()["entries"]) {
    INFO("entry " << entry["name"].get<std::string>());
    const std::string origin = entry["expected"]["origin"].get<std::string>();
    CHECK((origin == "pattern" || origin == "snapshot"));
    for (const Json& token : entry["expected"]["relations"]) {
      CHECK(tangle4::relation_from_string(token.get<std::string>()).has_value());
    }
  }
}

TEST_CASE("stored classifications match the live classifier") {
  for (const Json& entry : fixture_doc()["entries"]) {
    const std::string name = entry["name"].get<std::string>();
    INFO("entry " << name);
    const PureState4 state = tangle4::build_representative(name);
    const bool symmetric = tangle4::is_symmetric(state, 1e-9);
    const tangle4::FamilyLabel label =
        symmetric ? tangle4::classify_symmetric(state) : tangle4::classify(state);
    const Json& stored = entry["classify"];
    CHECK(tangle4::to_string(label.family) == stored["family"].get<std::string>());
    if (label.symmetric_level.has_value()) {
      CHECK(stored["symmetricLevel"].get<std::string>() ==
            tangle4::to_string(*label.symmetric_level));
    } else {
      CHECK(stored["symmetricLevel"].is_null());
    }
  }
}

TEST_CASE("fixture kets rebuild the stored states") {
  for (const Json& entry : fixture_doc()["entries"]) {
    const std::string name = entry["name"].get<std::string>();
    INFO("entry " << name);
    const PureState4 built = tangle4::build_representative(name);
    const PureState4 parsed = tangle4::parse_ket(entry["ket"].get<std::string>());
    for (int i = 0; i < PureState4::kDim; ++i) {
      CHECK(std::abs(built[i] - parsed[i]) <= 1e-12);
    }
  }
}
