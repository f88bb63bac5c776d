#pragma once

#include <string>
#include <vector>

#include "barnopt/compactness.hpp"
#include "barnopt/optimize_floor.hpp"

namespace barn {

/// One design measured against both optimization problems: the best barn of
/// the same volume, and the best footprint with the same floor area, wall
/// height and roof angle.
struct DesignAssessment {
  CompactnessReport fixed_volume;
  double floor = 0.0;
  FixedFloorOptimum fixed_floor;
  double floor_ratio = 0.0;     // S / S_min(F, H, alpha)
  double floor_headroom = 0.0;  // S - S_min(F, H, alpha)
};

DesignAssessment assess(const HouseParams& p);

/// Case-study input row: dimensions in meters, angle in degrees.
struct CaseInput {
  std::string name;
  double width = 0.0;
  double length = 0.0;
  double height = 0.0;
  double alpha_deg = 0.0;
};

struct CaseStudyRow {
  CaseInput input;
  DesignAssessment assessment;
};

struct RowError {
  int row = 0;   // 1-based data row (header excluded)
  int line = 0;  // 1-based line in the file
  std::string message;
};

struct AuditResult {
  std::vector<CaseStudyRow> rows;
  std::vector<RowError> errors;
};

/// Parses a `name,W,L,H,alpha_deg` CSV (header required) and assesses every
/// valid row. Invalid rows are collected in `errors`; the rest are still
/// audited in file order. Throws Error{kInvalidParameter, "csv"} when the
/// header is missing or wrong, or when the file has no data rows.
AuditResult audit_csv(std::string_view text);

}  // namespace barn
