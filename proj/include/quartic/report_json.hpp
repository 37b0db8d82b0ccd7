#pragma once

#include <json.hpp>

#include "quartic/oracle.hpp"
#include "quartic/pell.hpp"
#include "quartic/solver.hpp"

// JSON shapes for the CLI and for round-trip tests. Every integer is
// serialized as a decimal string; P_n and friends outgrow 64-bit fast.

namespace quartic::json_io {

nlohmann::ordered_json to_json(const pell::CfExpansion& cf);
nlohmann::ordered_json to_json(const pell::PellUnit& unit);
nlohmann::ordered_json to_json(const pell::PellFundamental& fund);
nlohmann::ordered_json to_json(const solver::EquationInstance& inst);
nlohmann::ordered_json to_json(const solver::CandidateOutcome& outcome);
nlohmann::ordered_json to_json(const solver::SolutionRecord& rec);
nlohmann::ordered_json to_json(const solver::SolveReport& report);
nlohmann::ordered_json to_json(const oracle::ScanViolation& violation);

solver::SolveReport report_from_json(const nlohmann::json& j);

} // namespace quartic::json_io
