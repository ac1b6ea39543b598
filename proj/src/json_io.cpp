#include "tangle4/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tangle4/errors.hpp"

namespace tangle4 {

Json complex_to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

Complex complex_from_json(const Json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    throw parse_error("complex value must be a [re, im] number pair", 0);
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

Json state_to_json(const PureState4& state) {
  Json amps = Json::array();
  for (int x = 0; x < PureState4::kDim; ++x) {
    amps.push_back(complex_to_json(state[x]));
  }
  Json out;
  out["amplitudes"] = std::move(amps);
  return out;
}

PureState4 state_from_json(const Json& node) {
  if (!node.is_object() || !node.contains("amplitudes")) {
    throw parse_error("state JSON must be an object with an \"amplitudes\" array", 0);
  }
  const Json& amps = node["amplitudes"];
  if (!amps.is_array() || amps.size() != PureState4::kDim) {
    throw parse_error("\"amplitudes\" must be an array of 16 [re, im] pairs", 0);
  }
  PureState4 state;
  for (int x = 0; x < PureState4::kDim; ++x) {
    state[x] = complex_from_json(amps[x]);
  }
  return state;
}

PureState4 state_from_json_text(const std::string& text) {
  Json node;
  try {
    node = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw parse_error(std::string("invalid JSON: ") + err.what(), err.byte);
  }
  return state_from_json(node);
}

PureState4 load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open state file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return state_from_json_text(buffer.str());
}

Json invariant_set_to_json(const InvariantSet& set) {
  Json out;
  for (std::size_t i = 0; i < kInvariantInfo.size(); ++i) {
    out[kInvariantInfo[i].name] = complex_to_json(invariant_entry(set, i));
  }
  return out;
}

Json magnitudes_to_json(const TangleMagnitudes& magnitudes) {
  Json out;
  for (std::size_t i = 0; i < kInvariantInfo.size(); ++i) {
    out[kInvariantInfo[i].name] = magnitude_entry(magnitudes, i);
  }
  return out;
}

Json verdict_to_json(const Verdict& verdict) {
  Json out;
  out["outcome"] = to_string(verdict.outcome);
  Json witnesses = Json::array();
  for (const Witness& witness : verdict.witnesses) {
    Json w;
    w["name"] = witness.name;
    w["lhs"] = complex_to_json(witness.lhs);
    w["rhs"] = complex_to_json(witness.rhs);
    witnesses.push_back(std::move(w));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json family_label_to_json(const FamilyLabel& label) {
  Json out;
  out["family"] = to_string(label.family);
  if (label.symmetric_level.has_value()) {
    out["symmetricLevel"] = to_string(*label.symmetric_level);
  } else {
    out["symmetricLevel"] = nullptr;
  }
  return out;
}

}  // namespace tangle4
