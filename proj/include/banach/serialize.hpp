#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "banach/congruence.hpp"
#include "banach/matchbox.hpp"
#include "banach/proofreplay.hpp"
#include "banach/simulate.hpp"

namespace banach {

using ordered_json = nlohmann::ordered_json;

// JSON encodings.  Key order is fixed so identical runs print identical
// bytes.  Rationals are encoded as "num/den" strings, never as floats.
ordered_json to_json(const MatchboxDistribution& dist);
ordered_json to_json(const IdentityCheck& check);
ordered_json to_json(const CongruenceReport& report);
/// Summary object only; failures is the count, the records travel as
/// separate JSON lines.  elapsed is deliberately absent (it goes to stderr).
ordered_json to_json(const SweepReport& report);
ordered_json to_json(const ChainReport& report);
ordered_json to_json(const SimulationResult& result);

// Inverse decodings for the per-record types, for round-trip checks and
// downstream tooling.  Throw nlohmann/json exceptions on malformed input.
MatchboxDistribution distribution_from_json(const ordered_json& j);
IdentityCheck identity_check_from_json(const ordered_json& j);
CongruenceReport congruence_report_from_json(const ordered_json& j);
ChainReport chain_report_from_json(const ordered_json& j);
SimulationResult simulation_result_from_json(const ordered_json& j);

// CSV encodings, header-free.  Distribution rows are r,num,den; report rows
// mirror the JSON keys; the sweep summary row mirrors its JSON object.
std::vector<std::string> csv_rows(const MatchboxDistribution& dist);
std::string csv_row(const CongruenceReport& report);
std::string csv_summary_row(const SweepReport& report);

}  // namespace banach
