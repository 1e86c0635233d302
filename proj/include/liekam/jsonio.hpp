#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "liekam/constructions.hpp"
#include "liekam/kam.hpp"
#include "liekam/model.hpp"
#include "liekam/torus.hpp"
#include "liekam/verify.hpp"

namespace liekam {

using Json = nlohmann::json;  // object keys are sorted, which keeps dumps canonical

std::string rat_str(const Rat& r);

Json root_json(const Root& r);
Json algebra_json(const LieAlgebra& alg);
Json atlas_json(const AlgebraPtr& alg);
Json report_json(const Report& rep, bool timings = false);
Json audit_json(const ScheduleAudit& a);
Json chain_constants_json(const ConstantChain& c);
Json ledger_json(const LedgerReplay& r);
Json trajectory_json(const KamTrajectory& t, int head = 5);
Json smoothing_sweep_json(int d, int K, std::uint64_t seed);

std::string canonical_dump(const Json& j);

// Parses a model scenario file and replays the identity/tail-bound battery.
Json run_model_scenario(const Json& scenario, std::uint64_t seed);

std::string atlas_text(const AlgebraPtr& alg);
std::string report_text(const Report& rep);

}  // namespace liekam
