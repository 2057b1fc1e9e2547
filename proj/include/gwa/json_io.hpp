#pragma once

// JSON forms shared by the CLI and the reports.
//
//   ring:    {"mode": "Q"|"Qq", "vars": [{"name": "t", "laurent": false}], "relations": ["..."]}
//   endo:    {"images": {"t": "q^2*t"}, "inverse": {"t": "q^-2*t"}}   (over a given ring)
//   datum:   {"ring": ring, "a": "...", "sigma": endo} or {"catalog": "podles", "lambda": "2"}
//   element: {"word": "x t y"} or {"components": {"-1": "t", "0": "1"}}
//   module:  {"dim": 2, "action": {"t": [["1", "0"], ["0", "-1"]], "x": ..., "y": ...}}
//   ore set: {"templates": ["t-q^{2n}"], "window": 3}

#include <json.hpp>

#include "gwa/catalog.hpp"
#include "gwa/modules.hpp"

namespace gwa {

using Json = nlohmann::json;

BaseRing ring_from_json(const Json& j);
Json ring_to_json(const BaseRing& ring);

Endo endo_from_json(const Json& j, const BaseRing& ring);
Json endo_to_json(const Endo& sigma);

/// A datum together with the Ore set of its catalog entry, when it has one.
struct DatumInput {
  GwaDatum datum;
  std::vector<std::string> ore_templates;
};
DatumInput datum_from_json(const Json& j);
Json datum_to_json(const GwaDatum& D);

SmashElement element_from_json(const Json& j, const GwaDatum& D);
Json element_to_json(const SmashElement& e, const BaseRing& ring);

FiniteModule module_from_json(const Json& j, ScalarMode mode);
Json module_to_json(const FiniteModule& M);

OreSetSpec ore_from_json(const Json& j, const BaseRing& ring);

Json answer_to_json(const AnswerModule& a);
Json report_to_json(const RunReport& r);

/// Reads and parses a file; throws InvalidArgument.
Json read_json_file(const std::string& path);

}  // namespace gwa
