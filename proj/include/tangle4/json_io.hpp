#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tangle4/classify.hpp"
#include "tangle4/invariants.hpp"
#include "tangle4/state.hpp"

namespace tangle4 {

// JSON forms. Complex numbers are [re, im] pairs; doubles round-trip
// bit-exactly through serialize/parse.
//
//   state:      {"amplitudes": [[re, im], ... 16 entries ...]}
//   invariants: {"A": [re, im], "B1": ..., ..., "X": ...}
//   verdict:    {"outcome": "...", "witnesses": [{"name", "lhs", "rhs"}]}
//   family:     {"family": "...", "symmetricLevel": "..." | null}

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex value);
Complex complex_from_json(const Json& node);

Json state_to_json(const PureState4& state);

/// Throws parse_error when the document is not a well-formed state
/// (missing key, wrong length, non-numeric entries).
PureState4 state_from_json(const Json& node);

/// Parse text as JSON and read a state from it; throws parse_error on
/// malformed JSON too.
PureState4 state_from_json_text(const std::string& text);

/// Read a state file (JSON). Throws std::runtime_error when the file
/// cannot be opened, parse_error when its contents are malformed.
PureState4 load_state_file(const std::string& path);

Json invariant_set_to_json(const InvariantSet& set);
Json magnitudes_to_json(const TangleMagnitudes& mags);
Json verdict_to_json(const Verdict& verdict);
Json family_label_to_json(const FamilyLabel& label);

}  // namespace tangle4
