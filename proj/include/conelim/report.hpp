#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "conelim/flow.hpp"
#include "conelim/limits.hpp"
#include "conelim/pair.hpp"
#include "conelim/stability.hpp"

namespace conelim::io {

using json = nlohmann::json;

// Instance document: {"rank", "twists" (descending), "l_degree", "higgs"}
// where each Higgs cell is null or an array of exact rational strings, index
// k holding the coefficient of X^k Y^(d-k). ParseError on malformed input
// (including wrong cell lengths); model-contract violations (a filled
// negative-degree slot, l below the bound) surface as HolomorphyViolation.
HitchinPair parse_instance(const json& doc);
HitchinPair parse_instance_text(const std::string& text);
json emit_instance(const HitchinPair& pair);

json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& cell, int expected_degree, const std::string& where);
json matrix_to_json(const TwistedMatrix& m);

// Full analysis of one pair; every report key is always present (null when
// the stage does not apply). "limit"/"flow" are filled exactly for supported
// nilpotent pairs.
struct Analysis {
    HitchinPair pair;
    HitchinImage image;
    bool nilpotent = false;
    std::optional<int> order;
    std::optional<Classification> classification;
    std::optional<StabilityVerdict> verdict;
    std::optional<ConstraintReport> constraints;
    std::optional<HodgeBundle> limit;
    std::optional<flow::FlowReport> flow_report;
    std::optional<std::vector<int>> block_sizes;
};

Analysis analyze(const HitchinPair& pair);
json report_to_json(const Analysis& a);
std::string render_text_report(const Analysis& a);

json verdict_to_json(const StabilityVerdict& v);
json constraints_to_json(const ConstraintReport& c);
json flow_to_json(const flow::FlowReport& r, const std::vector<int>& block_sizes);
json limit_to_json(const HodgeBundle& h);

}  // namespace conelim::io
