#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "barnopt/assess.hpp"
#include "barnopt/fields.hpp"
#include "barnopt/oracle.hpp"

// Shared serializers. The CLI `--format json` output and the HTTP bodies are
// both produced by `to_body`, so the two front ends stay byte-identical.

namespace barn::io {

using nlohmann::json;

/// Shortest decimal string that round-trips to the same double.
std::string shortest(double value);

/// Fixed-point display with `decimals` digits.
std::string fixed(double value, int decimals);

/// Degrees for display, rounded to 1e-9 so that 30 degrees prints as 30.0.
double display_degrees(double alpha_rad);

json to_json(const FixedVolumeOptimum& opt);
json to_json(const FixedFloorOptimum& opt);
json to_json(const DesignAssessment& a);
json to_json(const ScalarField2D& field);
json to_json(const Curve1D& curve);
json to_json(const ContourSet& set);
json sweep_to_json(double volume, const std::vector<FixedVolumeOptimum>& rows);
json to_json(const VerifyReport& report);
json audit_to_json(const AuditResult& result);

/// Compact dump with sorted keys and a trailing newline.
std::string to_body(const json& j);

// CSV renderings (header row first, period decimals).
std::string to_csv(const FixedVolumeOptimum& opt);
std::string to_csv(const FixedFloorOptimum& opt);
std::string to_csv(const DesignAssessment& a);
std::string to_csv(const ScalarField2D& field);
std::string to_csv(const Curve1D& curve);
std::string to_csv(const ContourSet& set);
std::string sweep_to_csv(const std::vector<FixedVolumeOptimum>& rows);
std::string audit_volume_csv(const AuditResult& result);
std::string audit_floor_csv(const AuditResult& result);

// Human-readable reports.
std::string to_text(const FixedVolumeOptimum& opt);
std::string to_text(const FixedFloorOptimum& opt);
std::string to_text(const DesignAssessment& a);
std::string to_text(const VerifyReport& report);
std::string audit_to_text(const AuditResult& result);

}  // namespace barn::io
