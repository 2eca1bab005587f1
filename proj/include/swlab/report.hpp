#pragma once

// JSON and DOT renderings of the calculator's reports. Weights and Weyl
// elements use the same text encodings the CLI accepts.

#include <string>
#include <vector>

#include <json.hpp>

#include "swlab/d0.hpp"
#include "swlab/envelope.hpp"
#include "swlab/extension_graph.hpp"
#include "swlab/verify.hpp"
#include "swlab/weight_sets.hpp"

namespace swlab {

nlohmann::ordered_json class_json(const SerreWeightClass& c);
nlohmann::ordered_json jset_json(const JSet& J);

nlohmann::ordered_json graph_json(const Params& params, const Weight& mu, int radius, const GraphReport& g);
std::string graph_dot(const Params& params, const Weight& mu, const GraphReport& g);

nlohmann::ordered_json weights_json(const TameParam& t);

nlohmann::ordered_json envelope_json(const Params& params, const Weight& mu, const GradedReport& g);

nlohmann::ordered_json d0_json(const D0Report& rep);
std::string d0_dot(const D0Report& rep);

nlohmann::ordered_json suite_json(const std::vector<SuiteOutcome>& outcomes);
std::string suite_table(const std::vector<SuiteOutcome>& outcomes);

}  // namespace swlab
