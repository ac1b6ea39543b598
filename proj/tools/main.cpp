// tangle4: four-qubit SLOCC invariants, classification, and discrimination.
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangle4/catalog.hpp"
#include "tangle4/classify.hpp"
#include "tangle4/errors.hpp"
#include "tangle4/invariants.hpp"
#include "tangle4/json_io.hpp"
#include "tangle4/ket.hpp"
#include "tangle4/orbit.hpp"
#include "tangle4/state.hpp"

namespace {

using tangle4::Complex;
using tangle4::Json;
using tangle4::PureState4;

std::string fmt_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) {
    return fmt_double(z.real());
  }
  if (z.real() == 0.0) {
    return fmt_double(z.imag()) + "i";
  }
  std::string out = fmt_double(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += fmt_double(std::abs(z.imag()));
  out += 'i';
  return out;
}

struct SingleInput {
  std::string ket;
  std::string file;
  std::string rep;
  std::vector<std::string> params;
  std::string input_format = "auto";
};

tangle4::ParamMap parse_param_list(const std::vector<std::string>& items) {
  tangle4::ParamMap params;
  for (const std::string& item : items) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("parameter must look like name=value, got '" + item + "'");
    }
    params[item.substr(0, eq)] = tangle4::parse_complex(item.substr(eq + 1));
  }
  return params;
}

PureState4 state_from_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open state file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::string effective = format;
  if (effective == "auto") {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    effective = (first != std::string::npos && text[first] == '{') ? "json" : "ket";
  }
  if (effective == "json") {
    return tangle4::state_from_json_text(text);
  }
  std::string line = text;
  if (const std::size_t end = line.find_first_of("\r\n"); end != std::string::npos) {
    line.resize(end);
  }
  return tangle4::parse_ket(line);
}

PureState4 resolve_single(const SingleInput& input) {
  if (!input.ket.empty()) {
    return tangle4::parse_ket(input.ket);
  }
  if (!input.file.empty()) {
    return state_from_file(input.file, input.input_format);
  }
  return tangle4::build_representative(input.rep, parse_param_list(input.params));
}

// Positional state specs: "ket:...", "file:...", "rep:NAME?a=1,b=2i", or a bare
// token resolved heuristically (contains '|' -> ket, existing file -> file,
// otherwise a catalog name).
PureState4 resolve_spec(const std::string& spec) {
  if (spec.rfind("ket:", 0) == 0) {
    return tangle4::parse_ket(spec.substr(4));
  }
  if (spec.rfind("file:", 0) == 0) {
    return state_from_file(spec.substr(5), "auto");
  }
  if (spec.rfind("rep:", 0) == 0) {
    const std::string body = spec.substr(4);
    const std::size_t q = body.find('?');
    std::string name = body.substr(0, q == std::string::npos ? body.size() : q);
    std::vector<std::string> items;
    if (q != std::string::npos) {
      std::string rest = body.substr(q + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const std::size_t comma = rest.find(',', start);
        const std::string piece =
            rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) {
          items.push_back(piece);
        }
        if (comma == std::string::npos) {
          break;
        }
        start = comma + 1;
      }
    }
    return tangle4::build_representative(name, parse_param_list(items));
  }
  if (spec.find('|') != std::string::npos) {
    return tangle4::parse_ket(spec);
  }
  if (std::filesystem::exists(spec)) {
    return state_from_file(spec, "auto");
  }
  return tangle4::build_representative(spec, {});
}

std::string fixture_path() {
  if (const char* env = std::getenv("TANGLE4_DATA_DIR")) {
    return std::string(env) + "/catalog_fixtures.json";
  }
#ifdef TANGLE4_DATA_DIR
  const std::string baked = std::string(TANGLE4_DATA_DIR) + "/catalog_fixtures.json";
  if (std::filesystem::exists(baked)) {
    return baked;
  }
#endif
  return "data/catalog_fixtures.json";
}

std::optional<Json> load_fixture_entry(const std::string& name) {
  std::ifstream in(fixture_path());
  if (!in) {
    return std::nullopt;
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error&) {
    return std::nullopt;
  }
  if (!doc.contains("entries")) {
    return std::nullopt;
  }
  for (const Json& entry : doc["entries"]) {
    if (entry.value("name", "") == name) {
      return std::optional<Json>{std::in_place, entry};
    }
    if (entry.contains("aliases")) {
      for (const Json& alias : entry["aliases"]) {
        if (alias.get<std::string>() == name) {
          return std::optional<Json>{std::in_place, entry};
        }
      }
    }
  }
  return std::nullopt;
}

int cmd_invariants(const PureState4& state, const std::string& format) {
  const tangle4::InvariantSet set = tangle4::evaluate_invariants(state);
  const tangle4::TangleMagnitudes mags = tangle4::tangle_magnitudes(state);
  if (format == "json") {
    Json out;
    out["normSq"] = state.norm_sq();
    out["invariants"] = tangle4::invariant_set_to_json(set);
    out["magnitudes"] = tangle4::magnitudes_to_json(mags);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "norm^2: " << fmt_double(state.norm_sq()) << '\n';
  std::printf("%-4s %6s  %-28s %s\n", "name", "degree", "value", "magnitude");
  for (std::size_t i = 0; i < tangle4::kInvariantInfo.size(); ++i) {
    const auto& info = tangle4::kInvariantInfo[i];
    std::printf("%-4s %6d  %-28s %s\n", info.name, info.degree,
                fmt_complex(tangle4::invariant_entry(set, i)).c_str(),
                fmt_double(tangle4::magnitude_entry(mags, i)).c_str());
  }
  return 0;
}

int cmd_classify(const PureState4& state, double tolerance, const std::string& format) {
  tangle4::FamilyLabel label = tangle4::is_symmetric(state, tolerance)
                                   ? tangle4::classify_symmetric(state, tolerance)
                                   : tangle4::classify(state, tolerance);
  if (format == "json") {
    std::cout << tangle4::family_label_to_json(label).dump(2) << '\n';
    return 0;
  }
  std::cout << "family: " << tangle4::to_string(label.family) << '\n';
  if (label.symmetric_level.has_value()) {
    std::cout << "symmetricLevel: " << tangle4::to_string(*label.symmetric_level) << '\n';
  }
  return 0;
}

int cmd_discriminate(const PureState4& a, const PureState4& b, double tolerance,
                     const std::string& format) {
  const tangle4::Verdict verdict = tangle4::discriminate(a, b, tolerance);
  if (format == "json") {
    std::cout << tangle4::verdict_to_json(verdict).dump(2) << '\n';
  } else {
    std::cout << "outcome: " << tangle4::to_string(verdict.outcome) << '\n';
    if (verdict.distinct()) {
      std::cout << "witnesses:\n";
      for (const tangle4::Witness& w : verdict.witnesses) {
        std::cout << "  " << w.name << ": lhs=" << fmt_complex(w.lhs)
                  << " rhs=" << fmt_complex(w.rhs) << '\n';
      }
    } else {
      std::cout << "no invariant ratio separates the inputs at this tolerance\n";
    }
  }
  return verdict.distinct() ? 1 : 0;
}

int cmd_catalog_list(const std::string& format) {
  const auto& entries = tangle4::catalog_entries();
  if (format == "json") {
    Json out = Json::array();
    for (const auto& entry : entries) {
      Json e;
      e["name"] = entry.name;
      e["aliases"] = entry.aliases;
      e["family"] = entry.family;
      e["ket"] = entry.ket_form;
      Json params = Json::array();
      for (const auto& spec : entry.params) {
        Json p;
        p["name"] = spec.name;
        p["default"] = tangle4::complex_to_json(spec.default_value);
        p["integer"] = spec.integer;
        params.push_back(std::move(p));
      }
      e["params"] = std::move(params);
      out.push_back(std::move(e));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& entry : entries) {
    std::string name = entry.name;
    for (const std::string& alias : entry.aliases) {
      name += " (" + alias + ")";
    }
    std::string params;
    for (const auto& spec : entry.params) {
      params += params.empty() ? "" : ",";
      params += spec.name;
    }
    std::printf("%-24s %-34s %s%s%s\n", name.c_str(), entry.family.c_str(),
                entry.ket_form.c_str(), params.empty() ? "" : "  params: ", params.c_str());
  }
  return 0;
}

int cmd_catalog_show(const std::string& name, const std::string& format) {
  const tangle4::CatalogEntry* entry = tangle4::find_catalog_entry(name);
  if (entry == nullptr) {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  const PureState4 state = tangle4::build_representative(entry->name, {});
  const tangle4::InvariantSet set = tangle4::evaluate_invariants(state);
  const tangle4::ExpectedPattern pattern = tangle4::expected_pattern(entry->name, {});
  const std::optional<Json> fixture = load_fixture_entry(entry->name);

  if (format == "json") {
    Json out;
    out["name"] = entry->name;
    out["aliases"] = entry->aliases;
    out["family"] = entry->family;
    out["ket"] = entry->ket_form;
    out["description"] = entry->description;
    Json params = Json::array();
    for (const auto& spec : entry->params) {
      Json p;
      p["name"] = spec.name;
      p["default"] = tangle4::complex_to_json(spec.default_value);
      p["integer"] = spec.integer;
      p["doc"] = spec.doc;
      params.push_back(std::move(p));
    }
    out["params"] = std::move(params);
    out["invariantsAtDefaults"] = tangle4::invariant_set_to_json(set);
    Json relations = Json::array();
    for (const tangle4::Relation r : pattern.relations) {
      relations.push_back(tangle4::to_string(r));
    }
    out["relations"] = std::move(relations);
    if (fixture.has_value()) {
      out["fixture"] = *fixture;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "name:        " << entry->name << '\n';
  if (!entry->aliases.empty()) {
    std::string aliases;
    for (const std::string& alias : entry->aliases) {
      aliases += aliases.empty() ? alias : ", " + alias;
    }
    std::cout << "aliases:     " << aliases << '\n';
  }
  std::cout << "family:      " << entry->family << '\n';
  std::cout << "ket:         " << entry->ket_form << '\n';
  std::cout << "description: " << entry->description << '\n';
  for (const auto& spec : entry->params) {
    std::cout << "param:       " << spec.name << " = " << fmt_complex(spec.default_value)
              << "  (" << spec.doc << ")\n";
  }
  if (!pattern.relations.empty()) {
    std::string relations;
    for (const tangle4::Relation r : pattern.relations) {
      relations += relations.empty() ? "" : ", ";
      relations += tangle4::to_string(r);
    }
    std::cout << "relations:   " << relations << '\n';
  }
  std::cout << "invariants at defaults:\n";
  for (std::size_t i = 0; i < tangle4::kInvariantInfo.size(); ++i) {
    std::printf("  %-3s %s\n", tangle4::kInvariantInfo[i].name,
                fmt_complex(tangle4::invariant_entry(set, i)).c_str());
  }
  if (fixture.has_value() && fixture->contains("classify")) {
    const Json& c = (*fixture)["classify"];
    std::cout << "classification: " << c.value("family", "?");
    if (c.contains("symmetricLevel") && !c["symmetricLevel"].is_null()) {
      std::cout << " / " << c["symmetricLevel"].get<std::string>();
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_catalog_emit(const std::string& name, const tangle4::ParamMap& params,
                     const std::string& format) {
  const PureState4 state = tangle4::build_representative(name, params);
  if (format == "table") {
    std::cout << "ket: " << tangle4::format_ket(state) << '\n';
    std::cout << "norm^2: " << fmt_double(state.norm_sq()) << '\n';
    return 0;
  }
  std::cout << tangle4::state_to_json(state).dump(2) << '\n';
  return 0;
}

int cmd_orbit_check(const PureState4& state, int samples, std::uint64_t seed, double tolerance,
                    const std::string& format) {
  const tangle4::InvariantSet base = tangle4::evaluate_invariants(state);
  const tangle4::FamilyLabel family = tangle4::classify(state, tolerance);
  const double base_norm = state.norm();
  const std::vector<PureState4> orbit =
      tangle4::orbit_samples(state, samples, seed);

  double max_deviation = 0.0;
  int worst_sample = -1;
  const char* worst_name = "";
  int unstable_sample = -1;
  std::string unstable_witness;

  for (int s = 0; s < samples; ++s) {
    const tangle4::InvariantSet probe = tangle4::evaluate_invariants(orbit[s]);
    const double probe_norm = orbit[s].norm();
    for (std::size_t i = 0; i < tangle4::kInvariantInfo.size(); ++i) {
      const int degree = tangle4::kInvariantInfo[i].degree;
      const Complex lhs = tangle4::invariant_entry(base, i);
      const Complex rhs = tangle4::invariant_entry(probe, i);
      const double scale =
          std::max({std::abs(lhs), std::abs(rhs), std::pow(base_norm, degree),
                    std::pow(probe_norm, degree)});
      const double deviation = std::abs(lhs - rhs) / scale;
      if (deviation > max_deviation) {
        max_deviation = deviation;
        worst_sample = s;
        worst_name = tangle4::kInvariantInfo[i].name;
      }
    }
    if (unstable_sample < 0) {
      // Scale-free stability check: an invariant-ratio witness against the
      // base state would mean the sample left the SLOCC class.
      const tangle4::Verdict verdict = tangle4::discriminate(state, orbit[s], tolerance);
      if (verdict.distinct()) {
        unstable_sample = s;
        unstable_witness = verdict.witnesses.front().name;
      }
    }
  }

  const bool deviation_ok = max_deviation <= tolerance;
  const bool stable = unstable_sample < 0;
  const bool pass = deviation_ok && stable;

  if (format == "json") {
    Json out;
    out["samples"] = samples;
    out["seed"] = seed;
    out["family"] = tangle4::to_string(family.family);
    out["maxRelativeDeviation"] = max_deviation;
    out["worstSample"] = worst_sample;
    out["worstInvariant"] = worst_name;
    out["stable"] = stable;
    if (!stable) {
      out["unstableSample"] = unstable_sample;
      out["unstableWitness"] = unstable_witness;
    }
    out["pass"] = pass;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "family: " << tangle4::to_string(family.family) << '\n';
    std::cout << "samples: " << samples << " (seed " << seed << ")\n";
    std::cout << "max relative deviation: " << fmt_double(max_deviation);
    if (worst_sample >= 0) {
      std::cout << " (sample " << worst_sample << ", invariant " << worst_name << ")";
    }
    std::cout << '\n';
    if (stable) {
      std::cout << "classification: stable, no sample separates from the base state\n";
    } else {
      std::cout << "classification: UNSTABLE at sample " << unstable_sample << " (witness "
                << unstable_witness << ")\n";
    }
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

// `catalog emit D4 --k 2` style shortcuts: fold unknown --name value pairs
// into the parameter map.
void fold_extras_into_params(const std::vector<std::string>& extras,
                             std::vector<std::string>& params) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& token = extras[i];
    if (token.rfind("--", 0) != 0 || token.size() <= 2) {
      throw std::invalid_argument("unexpected argument '" + token + "'");
    }
    const std::string body = token.substr(2);
    if (const std::size_t eq = body.find('='); eq != std::string::npos) {
      params.push_back(body);
      continue;
    }
    if (i + 1 >= extras.size() || extras[i + 1].rfind("--", 0) == 0) {
      throw std::invalid_argument("flag '" + token + "' needs a value");
    }
    params.push_back(body + "=" + extras[i + 1]);
    ++i;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"four-qubit SLOCC invariants, classification, and discrimination"};
  app.require_subcommand(1);

  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int samples = 100;
  std::string format = "table";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };
  const auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "numerical zero / agreement tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  SingleInput input;
  const auto add_input = [&](CLI::App* sub) {
    auto* group = sub->add_option_group("input", "state input (exactly one)");
    group->add_option("--ket", input.ket, "ket expression, e.g. \"|0000>+|1111>\"");
    group->add_option("--file", input.file, "state file (JSON amplitudes or a ket line)");
    group->add_option("--rep", input.rep, "catalog representative name");
    group->require_option(1);
    sub->add_option("--param", input.params, "catalog parameter name=value (repeatable)");
    sub->add_option("--input-format", input.input_format, "force --file interpretation")
        ->check(CLI::IsMember({"auto", "json", "ket"}))
        ->capture_default_str();
  };

  CLI::App* inv = app.add_subcommand("invariants", "print the ten invariants of a state");
  add_input(inv);
  add_format(inv);

  CLI::App* cls = app.add_subcommand("classify", "tangle-pattern family of a state");
  add_input(cls);
  add_format(cls);
  add_tolerance(cls);

  CLI::App* dis = app.add_subcommand("discriminate", "invariant-ratio test for two states");
  std::string spec_a;
  std::string spec_b;
  dis->add_option("stateA", spec_a, "first state: ket:EXPR, file:PATH, or rep:NAME?p=v,...")
      ->required();
  dis->add_option("stateB", spec_b, "second state")->required();
  add_format(dis);
  add_tolerance(dis);

  CLI::App* cat = app.add_subcommand("catalog", "reference state catalog");
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
  add_format(cat_list);
  CLI::App* cat_show = cat->add_subcommand("show", "details for one entry");
  std::string show_name;
  cat_show->add_option("name", show_name, "entry name or alias")->required();
  add_format(cat_show);
  CLI::App* cat_emit = cat->add_subcommand("emit", "emit a representative state as JSON");
  std::string emit_name;
  std::vector<std::string> emit_params;
  std::string emit_format = "json";
  cat_emit->add_option("name", emit_name, "entry name or alias")->required();
  cat_emit->add_option("--param", emit_params, "parameter name=value (repeatable)");
  cat_emit->add_option("--format", emit_format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cat_emit->allow_extras();

  CLI::App* orb = app.add_subcommand("orbit-check", "random-orbit invariance self-test");
  add_input(orb);
  add_format(orb);
  add_tolerance(orb);
  orb->add_option("--samples", samples, "number of random orbit samples")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  orb->add_option("--seed", seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv->parsed()) {
      return cmd_invariants(resolve_single(input), format);
    }
    if (cls->parsed()) {
      return cmd_classify(resolve_single(input), tolerance, format);
    }
    if (dis->parsed()) {
      return cmd_discriminate(resolve_spec(spec_a), resolve_spec(spec_b), tolerance, format);
    }
    if (cat->parsed()) {
      if (cat_list->parsed()) {
        return cmd_catalog_list(format);
      }
      if (cat_show->parsed()) {
        return cmd_catalog_show(show_name, format);
      }
      fold_extras_into_params(cat_emit->remaining(), emit_params);
      return cmd_catalog_emit(emit_name, parse_param_list(emit_params), emit_format);
    }
    return cmd_orbit_check(resolve_single(input), samples, seed, tolerance, format);
  } catch (const tangle4::zero_state_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const tangle4::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
