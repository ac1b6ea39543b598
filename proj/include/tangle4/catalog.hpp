#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangle4/state.hpp"

namespace tangle4 {

/// Catalog of reference states: the permutation-symmetric hierarchy
/// (degeneracy-configuration labels D_{...}) and the LLSS inductive
/// families (labels W_{...}), plus a few named anchor states. Family
/// labels are carried verbatim from the classification literature.

using ParamMap = std::map<std::string, Complex>;

struct ParamSpec {
  std::string name;
  Complex default_value;
  bool integer = false;  // value must be a small nonnegative integer
  std::string doc;
};

/// Structural facts about the invariant values of a catalog state.
enum class Relation {
  AllZero,                  // every invariant vanishes
  BjEqualsASquared,         // B1 = B2 = B3 = A^2
  CEqualsMinusACubed,       // C = -A^3
  B3EqualsB2,               // B3 = B2
  B1NotEqualB2,             // B1 != B2
  CEqualsMinusAB2,          // C = -A B2
  B1Equals3ASquared,        // B1 = 3 A^2
  B2Zero,                   // B2 = 0
  B3Zero,                   // B3 = 0
  CZero,                    // C = 0
  DZero,                    // D = 0
  DNonzero,                 // D != 0
};

std::string to_string(Relation relation);
std::optional<Relation> relation_from_string(const std::string& token);

/// What the catalog promises about a state's invariants: exact values by
/// invariant name where a closed form exists, structural relations, and
/// for the G-slice states the unordered triple matched against
/// {B1, B2, B3}.
struct ExpectedPattern {
  std::map<std::string, Complex> values;
  std::vector<Relation> relations;
  std::optional<std::array<Complex, 3>> b_multiset;
};

struct CatalogEntry {
  std::string name;                  // CLI identifier
  std::vector<std::string> aliases;  // e.g. "GHZ", "W4"
  std::string family;                // literature family label, verbatim
  std::string ket_form;              // display-only sketch of the state
  std::string description;
  std::vector<ParamSpec> params;
};

/// All catalog entries, in listing order.
const std::vector<CatalogEntry>& catalog_entries();

/// Entry by name or alias; nullptr when unknown.
const CatalogEntry* find_catalog_entry(const std::string& name_or_alias);

/// Defaults merged with overrides. Throws std::invalid_argument on an
/// unknown parameter name or a malformed integer parameter.
ParamMap resolve_params(const CatalogEntry& entry, const ParamMap& overrides);

/// Normalized symmetric basis state with k excitations, k in [0, 4]:
/// the sum of all weight-k basis strings divided by sqrt(binomial(4,k)).
/// Throws std::out_of_range for k outside [0, 4].
PureState4 build_dicke(int k);

/// Build a catalog state. Unknown names throw std::invalid_argument;
/// parameter sets violating the entry's constraints (linear independence
/// of barred vector pairs, nonzero lambda products, mu^2 != 2/3, ...)
/// throw std::invalid_argument as well.
PureState4 build_representative(const std::string& name, const ParamMap& overrides = {});

/// Expected invariant pattern of build_representative(name, overrides).
ExpectedPattern expected_pattern(const std::string& name, const ParamMap& overrides = {});

}  // namespace tangle4
