#include "barnopt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "barnopt/angles.hpp"
#include "barnopt/assess.hpp"
#include "barnopt/error.hpp"
#include "barnopt/fields.hpp"
#include "barnopt/io.hpp"
#include "barnopt/optimize_floor.hpp"
#include "barnopt/optimize_volume.hpp"
#include "barnopt/oracle.hpp"
#include "barnopt/service.hpp"

namespace barn::cli {

namespace {

struct Rendered {
  std::string text;
  std::string json;
  std::string csv;
};

// Thrown for I/O problems; mapped to exit code 1.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library parameter names -> command-line flags.
std::string flag_for(const std::string& param) {
  static const std::map<std::string, std::string> flags = {
      {"volume", "--volume"},       {"floor", "--floor"},       {"height", "--height"},
      {"width", "--width"},         {"length", "--length"},     {"alpha", "--alpha"},
      {"resolution", "--resolution"}, {"samples", "--samples"}, {"levels", "--levels"},
      {"rmin", "--r-min"},          {"rmax", "--r-max"},        {"kmin", "--k-min"},
      {"kmax", "--k-max"},          {"wmin", "--w-min"},        {"wmax", "--w-max"},
      {"cases", "--cases"},         {"tolerance", "--tolerance"}};
  const auto it = flags.find(param);
  return it == flags.end() ? param : it->second;
}

struct Globals {
  std::string format = "text";
  std::string out_path = "-";
};

void emit(const Globals& g, const std::string& payload, std::ostream& out) {
  if (g.out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw IoFailure("cannot open output file " + g.out_path);
  file << payload;
  if (!file.flush()) throw IoFailure("cannot write output file " + g.out_path);
}

const std::string& pick(const Globals& g, const Rendered& r) {
  if (g.format == "json") return r.json;
  if (g.format == "csv") return r.csv;
  return r.text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::kInvalidParameter, "levels", "'" + item + "' is not a number");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidParameter, "levels", "no levels given");
  return out;
}

std::string field_summary(const ScalarField2D& f) {
  std::ostringstream os;
  os << f.value_name << " field: " << f.x.values.size() << " x " << f.y.values.size()
     << " nodes, " << f.x.name << " in [" << io::shortest(f.x.values.front()) << ", "
     << io::shortest(f.x.values.back()) << "], " << f.y.name << " in ["
     << io::shortest(f.y.values.front()) << ", " << io::shortest(f.y.values.back()) << "]\n";
  if (f.marker) {
    os << "marker: " << f.x.name << "=" << io::fixed(f.marker->x, 4) << " " << f.y.name << "="
       << io::fixed(f.marker->y, 4) << " value=" << io::fixed(f.marker->value, 4) << "\n";
  }
  return os.str();
}

std::string contour_summary(const ContourSet& set) {
  std::ostringstream os;
  for (const auto& lc : set.contours) {
    std::size_t vertices = 0;
    for (const auto& pl : lc.polylines) vertices += pl.points.size();
    os << "level " << io::shortest(lc.level) << ": " << lc.polylines.size() << " polyline(s), "
       << vertices << " vertices\n";
  }
  os << "max relative residual " << io::shortest(set.max_relative_residual) << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barn-house envelope optimizer", "barnopt"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out_path, "Output path, '-' for stdout");

  std::function<int()> action;

  // optimize-volume
  double volume = 0.0, alpha_deg = 0.0;
  auto* opt_vol = app.add_subcommand("optimize-volume", "Minimal envelope for fixed volume");
  opt_vol->add_option("--volume", volume, "Volume V [m^3]")->required();
  opt_vol->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  opt_vol->callback([&] {
    action = [&] {
      const auto opt = optimize_fixed_volume(volume, deg_to_rad(alpha_deg));
      emit(g, pick(g, {io::to_text(opt), io::to_body(io::to_json(opt)), io::to_csv(opt)}), out);
      return kExitOk;
    };
  });

  // optimize-floor
  double floor = 0.0, height = 0.0;
  auto* opt_floor =
      app.add_subcommand("optimize-floor", "Minimal envelope for fixed floor area and height");
  opt_floor->add_option("--floor", floor, "Floor area F [m^2]")->required();
  opt_floor->add_option("--height", height, "Wall height H [m]")->required();
  opt_floor->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  opt_floor->callback([&] {
    action = [&] {
      const auto opt = optimize_fixed_floor(floor, height, deg_to_rad(alpha_deg));
      emit(g, pick(g, {io::to_text(opt), io::to_body(io::to_json(opt)), io::to_csv(opt)}), out);
      return kExitOk;
    };
  });

  // assess
  double width = 0.0, length = 0.0;
  auto* assess_cmd = app.add_subcommand("assess", "Compare one design with both optima");
  assess_cmd->add_option("--width", width, "Width W [m]")->required();
  assess_cmd->add_option("--length", length, "Length L [m]")->required();
  assess_cmd->add_option("--height", height, "Wall height H [m]")->required();
  assess_cmd->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  assess_cmd->callback([&] {
    action = [&] {
      const auto a = assess({width, length, height, deg_to_rad(alpha_deg)});
      emit(g, pick(g, {io::to_text(a), io::to_body(io::to_json(a)), io::to_csv(a)}), out);
      return kExitOk;
    };
  });

  // audit
  std::string csv_path;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a CSV of designs (name,W,L,H,alpha_deg)");
  audit_cmd->add_option("input", csv_path, "CSV file")->required();
  audit_cmd->callback([&] {
    action = [&] {
      const AuditResult result = audit_csv(read_file(csv_path));
      emit(g,
           pick(g, {io::audit_to_text(result), io::to_body(io::audit_to_json(result)),
                    io::audit_volume_csv(result) + "\n" + io::audit_floor_csv(result)}),
           out);
      for (const auto& e : result.errors) {
        err << csv_path << ": row " << e.row << " (line " << e.line << "): " << e.message << "\n";
      }
      return result.errors.empty() ? kExitOk : kExitInvalid;
    };
  });

  // field
  std::string kind = "surface";
  Range r_range = kDefaultShapeRange, k_range = kDefaultShapeRange;
  int resolution = kDefaultFieldResolution;
  auto* field_cmd = app.add_subcommand("field", "Sample S(r,k) or S/S_min over (r,k)");
  field_cmd->add_option("--kind", kind, "surface or compactness")
      ->check(CLI::IsMember({"surface", "compactness"}));
  field_cmd->add_option("--volume", volume, "Volume V [m^3] (surface only)");
  field_cmd->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  field_cmd->add_option("--r-min", r_range.lo);
  field_cmd->add_option("--r-max", r_range.hi);
  field_cmd->add_option("--k-min", k_range.lo);
  field_cmd->add_option("--k-max", k_range.hi);
  field_cmd->add_option("--resolution", resolution, "Intervals per axis [16, 4096]");
  field_cmd->callback([&] {
    action = [&] {
      ScalarField2D field;
      if (kind == "surface") {
        if (field_cmd->count("--volume") == 0) {
          throw Error(ErrorCode::kInvalidParameter, "volume", "--volume is required for surface");
        }
        field = surface_field(volume, deg_to_rad(alpha_deg), r_range, k_range, resolution);
      } else {
        field = compactness_field(deg_to_rad(alpha_deg), r_range, k_range, resolution);
      }
      emit(g, pick(g, {field_summary(field), io::to_body(io::to_json(field)), io::to_csv(field)}),
           out);
      return kExitOk;
    };
  });

  // contours
  std::string levels_text;
  auto* contour_cmd = app.add_subcommand("contours", "Level curves of S/S_min");
  contour_cmd->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  contour_cmd->add_option("--levels", levels_text, "Comma-separated ascending levels");
  contour_cmd->add_option("--r-min", r_range.lo);
  contour_cmd->add_option("--r-max", r_range.hi);
  contour_cmd->add_option("--k-min", k_range.lo);
  contour_cmd->add_option("--k-max", k_range.hi);
  int contour_resolution = kDefaultContourResolution;
  contour_cmd->add_option("--resolution", contour_resolution, "Intervals per axis [16, 4096]");
  contour_cmd->callback([&] {
    action = [&] {
      const std::vector<double> levels =
          levels_text.empty() ? kDefaultContourLevels : parse_levels(levels_text);
      const ContourSet set = compactness_contours(deg_to_rad(alpha_deg), levels, r_range,
                                                  k_range, contour_resolution);
      emit(g, pick(g, {contour_summary(set), io::to_body(io::to_json(set)), io::to_csv(set)}),
           out);
      return kExitOk;
    };
  });

  // sweep
  double alpha_min_deg = kAlphaMinDeg, alpha_max_deg = kAlphaMaxDeg;
  int samples = kDefaultCurveSamples;
  auto* sweep_cmd = app.add_subcommand("sweep", "Optimal W, L, H as functions of alpha");
  sweep_cmd->add_option("--volume", volume, "Volume V [m^3]")->required();
  sweep_cmd->add_option("--alpha-min", alpha_min_deg, "Lowest roof slope [deg]");
  sweep_cmd->add_option("--alpha-max", alpha_max_deg, "Highest roof slope [deg]");
  sweep_cmd->add_option("--samples", samples, "Number of angles");
  sweep_cmd->callback([&] {
    action = [&] {
      const Range alphas{deg_to_rad(alpha_min_deg), deg_to_rad(alpha_max_deg)};
      try {
        require_solver_alpha(alphas.lo);
      } catch (const Error& e) {
        throw Error(e.code(), "--alpha-min", e.what());
      }
      try {
        require_solver_alpha(alphas.hi);
      } catch (const Error& e) {
        throw Error(e.code(), "--alpha-max", e.what());
      }
      const auto rows = sweep_curves(volume, alphas, samples);
      const std::string csv = io::sweep_to_csv(rows);
      emit(g, pick(g, {csv, io::to_body(io::sweep_to_json(volume, rows)), csv}), out);
      return kExitOk;
    };
  });

  // curve
  std::optional<double> w_lo, w_hi;
  auto* curve_cmd = app.add_subcommand("curve", "S(W) at fixed floor area and height");
  curve_cmd->add_option("--floor", floor, "Floor area F [m^2]")->required();
  curve_cmd->add_option("--height", height, "Wall height H [m]")->required();
  curve_cmd->add_option("--alpha", alpha_deg, "Roof slope [deg]")->required();
  curve_cmd->add_option("--w-min", w_lo, "Lowest width [m]");
  curve_cmd->add_option("--w-max", w_hi, "Highest width [m]");
  curve_cmd->add_option("--samples", samples, "Number of widths");
  curve_cmd->callback([&] {
    action = [&] {
      if (w_lo.has_value() != w_hi.has_value()) {
        throw Error(ErrorCode::kInvalidParameter, w_lo ? "wmax" : "wmin",
                    "--w-min and --w-max must be given together");
      }
      std::optional<Range> widths;
      if (w_lo) widths = Range{*w_lo, *w_hi};
      const Curve1D curve = floor_curve(floor, height, deg_to_rad(alpha_deg), widths, samples);
      const std::string csv = io::to_csv(curve);
      emit(g, pick(g, {csv, io::to_body(io::to_json(curve)), csv}), out);
      return kExitOk;
    };
  });

  // verify
  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the oracle");
  verify_cmd->add_option("--seed", verify_opts.seed, "Random seed");
  verify_cmd->add_option("--cases", verify_opts.cases, "Cases per problem");
  verify_cmd->add_option("--tolerance", verify_opts.tolerance, "Relative tolerance");
  // Test hook: scales closed-form values before comparison.
  verify_cmd->add_option("--inject-perturbation", verify_opts.perturbation)->group("");
  verify_cmd->callback([&] {
    action = [&] {
      const VerifyReport report = run_verification(verify_opts);
      emit(g,
           pick(g, {io::to_text(report), io::to_body(io::to_json(report)), io::to_text(report)}),
           out);
      if (report.all_pass) return kExitOk;
      for (std::size_t i = 0; i < report.volume_cases.size(); ++i) {
        const auto& c = report.volume_cases[i];
        if (c.pass) continue;
        err << "volume case " << i << " failed: V=" << io::shortest(c.volume)
            << " alpha_deg=" << io::shortest(rad_to_deg(c.alpha)) << " closed=("
            << io::shortest(c.r_closed) << ", " << io::shortest(c.k_closed) << ", "
            << io::shortest(c.s_closed) << ") oracle=(" << io::shortest(c.r_oracle) << ", "
            << io::shortest(c.k_oracle) << ", " << io::shortest(c.s_oracle)
            << ") max_rel_error=" << io::shortest(c.max_rel_error) << "\n";
      }
      for (std::size_t i = 0; i < report.floor_cases.size(); ++i) {
        const auto& c = report.floor_cases[i];
        if (c.pass) continue;
        err << "floor case " << i << " failed: F=" << io::shortest(c.floor)
            << " H=" << io::shortest(c.height) << " alpha_deg=" << io::shortest(rad_to_deg(c.alpha))
            << " closed=(" << io::shortest(c.w_closed) << ", " << io::shortest(c.s_closed)
            << ") oracle=(" << io::shortest(c.w_oracle) << ", " << io::shortest(c.s_oracle)
            << ") max_rel_error=" << io::shortest(c.max_rel_error) << "\n";
      }
      return kExitFailure;
    };
  });

  // serve
  service::ServiceConfig serve_cfg;
  std::string config_path;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON API");
  serve_cmd->add_option("--port", serve_cfg.port, "TCP port");
  serve_cmd->add_option("--bind", serve_cfg.bind, "Bind address");
  serve_cmd->add_option("--cors-allow", serve_cfg.cors_allow, "Allowed CORS origin (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  serve_cmd->add_option("--config", config_path, "JSON config file");
  serve_cmd->callback([&] {
    action = [&] {
      service::ServiceConfig cfg = serve_cfg;
      if (!config_path.empty()) cfg = service::load_config(config_path, cfg);
      service::Server server(cfg);
      const int port = server.bind();
      if (port < 0) throw IoFailure("cannot bind " + cfg.bind + ":" + std::to_string(cfg.port));
      err << "listening on http://" << cfg.bind << ":" << port << "\n";
      return server.listen() ? kExitOk : kExitFailure;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSolverFailure) {
      err << "internal error: " << e.what() << "\n";
      return kExitFailure;
    }
    err << "error: " << flag_for(e.param()) << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace barn::cli
