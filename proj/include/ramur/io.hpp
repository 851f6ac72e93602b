#pragma once

#include <string>

#include "json.hpp"
#include "ramur/attention.hpp"
#include "ramur/axioms.hpp"
#include "ramur/forward.hpp"
#include "ramur/identify_ramur.hpp"
#include "ramur/rum.hpp"
#include "ramur/scf.hpp"

namespace ramur {

using Json = nlohmann::json;

/// Canonical serialization: 2-space indent, sorted object keys (the library
/// emits menus and sets in canonical order), trailing newline. Reserialized
/// equal values are byte-identical.
std::string canonical_dump(const Json& j);

std::string read_text_file(const std::string& path);   // throws Error
void write_text_file(const std::string& path, const std::string& text);

// Dataset files:
// {"alternatives": ["a", ...], "menus": [{"menu": [...], "probs": {"a": "1/2", ...}}, ...]}
Json dataset_to_json(const Scf& scf);
RawDataset dataset_from_json(const Json& j);            // throws ParseError
Scf load_dataset_file(const std::string& path);         // parse + validate
void write_dataset_file(const std::string& path, const Scf& scf);

// Axiom reports:
// {"axiom": "REG", "passed": false, "witnesses": [{"alt": "b", "A": [...], ...}]}
Json report_to_json(const AxiomReport& report);

// Model files. A general model has "E", "preference" and "attention"; the
// identification output adds "P" and "extensions". An independent-attention
// model has "gamma" and "preference" (best-first; E is implied by gamma = 1).
Json ramur_model_to_json(const RamUrModel& model);
Json ramur_representation_to_json(const RamUrRepresentation& rep);
RamUrModel ramur_model_from_json(const Json& j);        // throws ParseError
Json ira_model_to_json(const RamUrIraModel& model);
RamUrIraModel ira_model_from_json(const Json& j);       // throws ParseError

// {"orders": [{"rank": ["b", "a", "DEFAULT"], "nu": "1/2"}, ...]}
Json rum_to_json(const RumModel& rum);

Json samplerun_to_json(const SampleRun& run);

}  // namespace ramur
