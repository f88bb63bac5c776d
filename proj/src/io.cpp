#include "barnopt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "barnopt/angles.hpp"

namespace barn::io {

std::string shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

double display_degrees(double alpha_rad) {
  return std::round(rad_to_deg(alpha_rad) * 1e9) / 1e9;
}

namespace {

json axis_json(const Axis& axis) {
  return {{"name", axis.name}, {"unit", axis.unit}, {"values", axis.values}};
}

json design_json(const HouseParams& p) {
  return {{"W", p.width},
          {"L", p.length},
          {"H", p.height},
          {"alpha_deg", display_degrees(p.alpha)},
          {"alpha_rad", p.alpha}};
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

// Names may not contain separators in our own output.
std::string csv_name(const std::string& name) {
  if (name.find_first_of(",\"\n") == std::string::npos) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string line(const char* label, const std::string& value, const char* unit = "") {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "  %-10s %14s %s\n", label, value.c_str(), unit);
  std::string out = buf;
  while (out.size() > 1 && out[out.size() - 2] == ' ') out.erase(out.size() - 2, 1);
  return out;
}

}  // namespace

json to_json(const FixedVolumeOptimum& opt) {
  return {{"V", opt.volume},          {"alpha_deg", display_degrees(opt.alpha)},
          {"alpha_rad", opt.alpha},   {"r_min", opt.r_min},
          {"k_min", opt.k_min},       {"W_min", opt.width},
          {"L_min", opt.length},      {"H_min", opt.height},
          {"S_min", opt.surface_min}};
}

json to_json(const FixedFloorOptimum& opt) {
  return {{"F", opt.floor},
          {"H", opt.height},
          {"alpha_deg", display_degrees(opt.alpha)},
          {"alpha_rad", opt.alpha},
          {"W_min", opt.width},
          {"L_min", opt.length},
          {"S_min", opt.surface_min},
          {"cubic_residual", opt.cubic_residual},
          {"cubic_method", std::string(to_string(opt.method))},
          {"radical_condition", opt.radical_condition}};
}

json to_json(const DesignAssessment& a) {
  const CompactnessReport& v = a.fixed_volume;
  const EnvelopeBreakdown env = surface(v.design);
  return {
      {"design", design_json(v.design)},
      {"V", v.volume},
      {"F", a.floor},
      {"S", v.surface},
      {"envelope",
       {{"walls_long", env.walls_long},
        {"walls_short", env.walls_short},
        {"roof", env.roof},
        {"gables", env.gables},
        {"total", env.total}}},
      {"fixed_volume",
       {{"optimum", to_json(v.optimum)},
        {"S_min", v.surface_min},
        {"ratio", v.ratio},
        {"headroom", v.headroom}}},
      {"fixed_floor",
       {{"optimum", to_json(a.fixed_floor)},
        {"S_min", a.fixed_floor.surface_min},
        {"ratio", a.floor_ratio},
        {"headroom", a.floor_headroom}}},
  };
}

json to_json(const ScalarField2D& field) {
  json rows = json::array();
  const std::size_t nx = field.x.values.size();
  for (std::size_t i = 0; i < field.y.values.size(); ++i) {
    rows.push_back(std::vector<double>(field.values.begin() + i * nx,
                                       field.values.begin() + (i + 1) * nx));
  }
  json j = {{"x", axis_json(field.x)},
            {"y", axis_json(field.y)},
            {"quantity", {{"name", field.value_name}, {"unit", field.value_unit}}},
            {"values", std::move(rows)}};
  if (field.marker) {
    j["marker"] = {{"x", field.marker->x}, {"y", field.marker->y}, {"value", field.marker->value}};
  }
  return j;
}

json to_json(const Curve1D& curve) {
  json j = {{"x", axis_json(curve.x)},
            {"quantity", {{"name", curve.value_name}, {"unit", curve.value_unit}}},
            {"values", curve.values}};
  if (curve.marker) {
    j["marker"] = {{"x", curve.marker->x}, {"value", curve.marker->value}};
  }
  return j;
}

json to_json(const ContourSet& set) {
  json contours = json::array();
  for (const LevelContours& lc : set.contours) {
    json lines = json::array();
    for (const Polyline& pl : lc.polylines) {
      json pts = json::array();
      for (const auto& [x, y] : pl.points) pts.push_back({x, y});
      lines.push_back({{"closed", pl.closed}, {"points", std::move(pts)}});
    }
    contours.push_back({{"level", lc.level}, {"polylines", std::move(lines)}});
  }
  return {{"alpha_deg", display_degrees(set.alpha)},
          {"alpha_rad", set.alpha},
          {"x", "r"},
          {"y", "k"},
          {"levels", set.levels},
          {"contours", std::move(contours)},
          {"max_relative_residual", set.max_relative_residual}};
}

json sweep_to_json(double volume, const std::vector<FixedVolumeOptimum>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return {{"V", volume}, {"rows", std::move(arr)}};
}

json to_json(const VerifyReport& report) {
  json vol = json::array();
  for (const auto& c : report.volume_cases) {
    vol.push_back({{"V", c.volume},
                   {"alpha_deg", rad_to_deg(c.alpha)},
                   {"closed_form", {{"r", c.r_closed}, {"k", c.k_closed}, {"S_min", c.s_closed}}},
                   {"oracle", {{"r", c.r_oracle}, {"k", c.k_oracle}, {"S_min", c.s_oracle}}},
                   {"max_rel_error", c.max_rel_error},
                   {"iterations", c.iterations},
                   {"converged", c.converged},
                   {"closed_form_not_beaten", c.closed_form_not_beaten},
                   {"pass", c.pass}});
  }
  json flr = json::array();
  for (const auto& c : report.floor_cases) {
    flr.push_back({{"F", c.floor},
                   {"H", c.height},
                   {"alpha_deg", rad_to_deg(c.alpha)},
                   {"closed_form", {{"W", c.w_closed}, {"S_min", c.s_closed}}},
                   {"oracle", {{"W", c.w_oracle}, {"S_min", c.s_oracle}}},
                   {"max_rel_error", c.max_rel_error},
                   {"iterations", c.iterations},
                   {"converged", c.converged},
                   {"pass", c.pass}});
  }
  return {{"seed", report.options.seed},
          {"cases", report.options.cases},
          {"tolerance", report.options.tolerance},
          {"volume_cases", std::move(vol)},
          {"floor_cases", std::move(flr)},
          {"all_pass", report.all_pass}};
}

json audit_to_json(const AuditResult& result) {
  json rows = json::array();
  for (const auto& row : result.rows) {
    json j = to_json(row.assessment);
    j["name"] = row.input.name;
    rows.push_back(std::move(j));
  }
  json errors = json::array();
  for (const auto& e : result.errors) {
    errors.push_back({{"row", e.row}, {"line", e.line}, {"message", e.message}});
  }
  return {{"rows", std::move(rows)}, {"errors", std::move(errors)}};
}

std::string to_body(const json& j) { return j.dump() + "\n"; }

std::string to_csv(const FixedVolumeOptimum& o) {
  return csv_join({"V", "alpha_deg", "r_min", "k_min", "W_min", "L_min", "H_min", "S_min"}) +
         csv_join({shortest(o.volume), shortest(display_degrees(o.alpha)), shortest(o.r_min),
                   shortest(o.k_min), shortest(o.width), shortest(o.length), shortest(o.height),
                   shortest(o.surface_min)});
}

std::string to_csv(const FixedFloorOptimum& o) {
  return csv_join({"F", "H", "alpha_deg", "W_min", "L_min", "S_min", "cubic_residual"}) +
         csv_join({shortest(o.floor), shortest(o.height), shortest(display_degrees(o.alpha)),
                   shortest(o.width), shortest(o.length), shortest(o.surface_min),
                   shortest(o.cubic_residual)});
}

std::string to_csv(const DesignAssessment& a) {
  const CompactnessReport& v = a.fixed_volume;
  return csv_join({"W", "L", "H", "alpha_deg", "V", "F", "S", "S_min_volume", "ratio_volume",
                   "headroom_volume", "S_min_floor", "ratio_floor", "headroom_floor"}) +
         csv_join({shortest(v.design.width), shortest(v.design.length), shortest(v.design.height),
                   shortest(display_degrees(v.design.alpha)), shortest(v.volume),
                   shortest(a.floor), shortest(v.surface), shortest(v.surface_min),
                   shortest(v.ratio), shortest(v.headroom), shortest(a.fixed_floor.surface_min),
                   shortest(a.floor_ratio), shortest(a.floor_headroom)});
}

std::string to_csv(const ScalarField2D& field) {
  std::vector<std::string> header = {field.y.name + "/" + field.x.name};
  for (double x : field.x.values) header.push_back(shortest(x));
  std::string out = csv_join(header);
  const std::size_t nx = field.x.values.size();
  for (std::size_t i = 0; i < field.y.values.size(); ++i) {
    std::vector<std::string> row = {shortest(field.y.values[i])};
    for (std::size_t j = 0; j < nx; ++j) row.push_back(shortest(field.at(i, j)));
    out += csv_join(row);
  }
  return out;
}

std::string to_csv(const Curve1D& curve) {
  std::string out = csv_join({curve.x.name, curve.value_name});
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    out += csv_join({shortest(curve.x.values[i]), shortest(curve.values[i])});
  }
  return out;
}

std::string to_csv(const ContourSet& set) {
  std::string out = csv_join({"level", "polyline", "closed", "vertex", "r", "k"});
  for (const LevelContours& lc : set.contours) {
    for (std::size_t p = 0; p < lc.polylines.size(); ++p) {
      const Polyline& pl = lc.polylines[p];
      for (std::size_t v = 0; v < pl.points.size(); ++v) {
        out += csv_join({shortest(lc.level), std::to_string(p), pl.closed ? "1" : "0",
                         std::to_string(v), shortest(pl.points[v].first),
                         shortest(pl.points[v].second)});
      }
    }
  }
  return out;
}

std::string sweep_to_csv(const std::vector<FixedVolumeOptimum>& rows) {
  std::string out = csv_join({"alpha_deg", "r_min", "k_min", "W_min", "L_min", "H_min", "S_min"});
  for (const auto& o : rows) {
    out += csv_join({shortest(display_degrees(o.alpha)), shortest(o.r_min), shortest(o.k_min),
                     shortest(o.width), shortest(o.length), shortest(o.height),
                     shortest(o.surface_min)});
  }
  return out;
}

std::string audit_volume_csv(const AuditResult& result) {
  std::string out = csv_join({"name", "W", "L", "H", "alpha_deg", "V", "S", "W_min", "L_min",
                              "H_min", "S_min", "ratio", "headroom"});
  for (const auto& row : result.rows) {
    const CompactnessReport& v = row.assessment.fixed_volume;
    out += csv_join({csv_name(row.input.name), shortest(row.input.width),
                     shortest(row.input.length), shortest(row.input.height),
                     shortest(row.input.alpha_deg), shortest(v.volume), shortest(v.surface),
                     shortest(v.optimum.width), shortest(v.optimum.length),
                     shortest(v.optimum.height), shortest(v.surface_min), shortest(v.ratio),
                     shortest(v.headroom)});
  }
  return out;
}

std::string audit_floor_csv(const AuditResult& result) {
  std::string out = csv_join({"name", "W", "L", "H", "alpha_deg", "F", "S", "W_min", "L_min",
                              "S_min", "ratio", "headroom"});
  for (const auto& row : result.rows) {
    const DesignAssessment& a = row.assessment;
    out += csv_join({csv_name(row.input.name), shortest(row.input.width),
                     shortest(row.input.length), shortest(row.input.height),
                     shortest(row.input.alpha_deg), shortest(a.floor),
                     shortest(a.fixed_volume.surface), shortest(a.fixed_floor.width),
                     shortest(a.fixed_floor.length), shortest(a.fixed_floor.surface_min),
                     shortest(a.floor_ratio), shortest(a.floor_headroom)});
  }
  return out;
}

std::string to_text(const FixedVolumeOptimum& o) {
  return "Fixed-volume optimum\n" + line("V", fixed(o.volume, 4), "m^3") +
         line("alpha", fixed(rad_to_deg(o.alpha), 4), "deg") + line("r_min", fixed(o.r_min, 4)) +
         line("k_min", fixed(o.k_min, 4)) + line("W_min", fixed(o.width, 4), "m") +
         line("L_min", fixed(o.length, 4), "m") + line("H_min", fixed(o.height, 4), "m") +
         line("S_min", fixed(o.surface_min, 4), "m^2");
}

std::string to_text(const FixedFloorOptimum& o) {
  std::string out = "Fixed-floor optimum\n" + line("F", fixed(o.floor, 4), "m^2") +
                    line("H", fixed(o.height, 4), "m") +
                    line("alpha", fixed(rad_to_deg(o.alpha), 4), "deg") +
                    line("W_min", fixed(o.width, 4), "m") +
                    line("L_min", fixed(o.length, 4), "m") +
                    line("S_min", fixed(o.surface_min, 4), "m^2");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", o.cubic_residual);
  out += line("residual", buf) + line("method", std::string(to_string(o.method)));
  if (!o.radical_condition) {
    out += "  note: H >= tan(alpha) sqrt(27F/16); root found without real radicals\n";
  }
  return out;
}

std::string to_text(const DesignAssessment& a) {
  const CompactnessReport& v = a.fixed_volume;
  const HouseParams& p = v.design;
  std::string out = "Design\n" + line("W", fixed(p.width, 4), "m") +
                    line("L", fixed(p.length, 4), "m") + line("H", fixed(p.height, 4), "m") +
                    line("alpha", fixed(rad_to_deg(p.alpha), 4), "deg") +
                    line("V", fixed(v.volume, 4), "m^3") + line("F", fixed(a.floor, 4), "m^2") +
                    line("S", fixed(v.surface, 4), "m^2");
  out += "Fixed volume\n" + line("W_min", fixed(v.optimum.width, 4), "m") +
         line("L_min", fixed(v.optimum.length, 4), "m") +
         line("H_min", fixed(v.optimum.height, 4), "m") +
         line("S_min", fixed(v.surface_min, 4), "m^2") + line("S/S_min", fixed(v.ratio, 4)) +
         line("S-S_min", fixed(v.headroom, 4), "m^2");
  out += "Fixed floor area\n" + line("W_min", fixed(a.fixed_floor.width, 4), "m") +
         line("L_min", fixed(a.fixed_floor.length, 4), "m") +
         line("S_min", fixed(a.fixed_floor.surface_min, 4), "m^2") +
         line("S/S_min", fixed(a.floor_ratio, 4)) +
         line("S-S_min", fixed(a.floor_headroom, 4), "m^2");
  return out;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "seed " << report.options.seed << ", " << report.options.cases
     << " cases per problem, tolerance " << shortest(report.options.tolerance) << "\n";
  int failed = 0;
  for (std::size_t i = 0; i < report.volume_cases.size(); ++i) {
    const auto& c = report.volume_cases[i];
    char buf[200];
    std::snprintf(buf, sizeof(buf), "volume %2zu  V=%9.3f alpha=%7.3f  max_rel_err=%.2e  %s\n",
                  i, c.volume, rad_to_deg(c.alpha), c.max_rel_error, c.pass ? "ok" : "FAIL");
    os << buf;
    failed += !c.pass;
  }
  for (std::size_t i = 0; i < report.floor_cases.size(); ++i) {
    const auto& c = report.floor_cases[i];
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "floor  %2zu  F=%9.3f H=%6.3f alpha=%7.3f  max_rel_err=%.2e  %s\n", i,
                  c.floor, c.height, rad_to_deg(c.alpha), c.max_rel_error,
                  c.pass ? "ok" : "FAIL");
    os << buf;
    failed += !c.pass;
  }
  os << (report.all_pass ? "all cases agree\n" : std::to_string(failed) + " case(s) FAILED\n");
  return os.str();
}

std::string audit_to_text(const AuditResult& result) {
  std::ostringstream os;
  const auto cell = [](double v, int d, std::size_t w) { return pad(fixed(v, d), w); };
  os << "Fixed volume\n";
  os << pad("name", 12) << pad("W", 8) << pad("L", 8) << pad("H", 7) << pad("alpha", 7)
     << pad("V", 10) << pad("S", 9) << pad("W_min", 8) << pad("L_min", 8) << pad("H_min", 8)
     << pad("S_min", 9) << pad("S/S_min", 9) << pad("S-S_min", 9) << "\n";
  for (const auto& row : result.rows) {
    const CompactnessReport& v = row.assessment.fixed_volume;
    os << pad(row.input.name, 12) << cell(row.input.width, 2, 8) << cell(row.input.length, 2, 8)
       << cell(row.input.height, 2, 7) << cell(row.input.alpha_deg, 1, 7)
       << cell(v.volume, 2, 10) << cell(v.surface, 2, 9) << cell(v.optimum.width, 2, 8)
       << cell(v.optimum.length, 2, 8) << cell(v.optimum.height, 2, 8)
       << cell(v.surface_min, 2, 9) << cell(v.ratio, 4, 9) << cell(v.headroom, 2, 9) << "\n";
  }
  os << "\nFixed floor area\n";
  os << pad("name", 12) << pad("W", 8) << pad("L", 8) << pad("H", 7) << pad("alpha", 7)
     << pad("F", 10) << pad("S", 9) << pad("W_min", 8) << pad("L_min", 8) << pad("S_min", 9)
     << pad("S/S_min", 9) << pad("S-S_min", 9) << "\n";
  for (const auto& row : result.rows) {
    const DesignAssessment& a = row.assessment;
    os << pad(row.input.name, 12) << cell(row.input.width, 2, 8) << cell(row.input.length, 2, 8)
       << cell(row.input.height, 2, 7) << cell(row.input.alpha_deg, 1, 7) << cell(a.floor, 2, 10)
       << cell(a.fixed_volume.surface, 2, 9) << cell(a.fixed_floor.width, 2, 8)
       << cell(a.fixed_floor.length, 2, 8) << cell(a.fixed_floor.surface_min, 2, 9)
       << cell(a.floor_ratio, 4, 9) << cell(a.floor_headroom, 2, 9) << "\n";
  }
  return os.str();
}

}  // namespace barn::io
