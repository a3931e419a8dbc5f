#pragma once

#include <string>

#include "dlog2/halving.hpp"

namespace dlog2 {

/// Renders a report as JSON with the fields
///   {p, b, result, iterations, steps: [{kind, k?, b_before, b_after, out_after}]}
/// `k` is present on halve steps only; `steps` is null when no trace was
/// recorded. Timing is not serialized so golden files stay stable.
std::string report_to_json(const SolveReport& report, int indent = 2);

/// Parses the format written by report_to_json. Elapsed time comes back as
/// zero. Throws kBadInput on malformed documents.
SolveReport report_from_json(const std::string& text);

/// Human-readable step chain: one line per step with the operation, the value
/// before and after, and the running exponent, followed by the result line.
std::string report_to_text(const SolveReport& report);

}  // namespace dlog2
