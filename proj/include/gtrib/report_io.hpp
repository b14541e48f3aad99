#pragma once

#include <json.hpp>

#include "gtrib/checks.hpp"

namespace gtrib {

/// Insertion-ordered JSON so that serialization is deterministic and
/// parse/re-serialize round-trips byte-identically.
using json = nlohmann::ordered_json;

/// {"v0": "...", "v1": "...", "v2": "...", "r": "...", "s": "...", "t": "..."}
/// with exact decimal strings.
json params_to_json(const sequence_params& p);

/// One record per report: identity, params, range, status, worst_residual,
/// failures, notes.
json report_to_json(const check_report& rep);

json reports_to_json(const std::vector<check_report>& reports);

}  // namespace gtrib
