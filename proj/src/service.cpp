#include "barnopt/service.hpp"

#include <httplib.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>

#include "barnopt/angles.hpp"
#include "barnopt/assess.hpp"
#include "barnopt/error.hpp"
#include "barnopt/fields.hpp"
#include "barnopt/io.hpp"
#include "barnopt/optimize_floor.hpp"
#include "barnopt/optimize_volume.hpp"

namespace barn::service {

using nlohmann::json;

const char* to_string(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::kBadInput:
      return "BAD_INPUT";
    case ApiErrorCode::kOutOfDomain:
      return "OUT_OF_DOMAIN";
    case ApiErrorCode::kNotFound:
      return "NOT_FOUND";
    case ApiErrorCode::kMethodNotAllowed:
      return "METHOD_NOT_ALLOWED";
    case ApiErrorCode::kInternal:
      return "INTERNAL";
  }
  return "INTERNAL";
}

std::string error_body(const ApiError& error) {
  json j = {{"code", to_string(error.code)}, {"message", error.message}};
  if (error.field) j["field"] = *error.field;
  return io::to_body(j);
}

namespace {

struct ApiException {
  int status;
  ApiError error;
};

[[noreturn]] void bad_input(const std::string& field, const std::string& message) {
  throw ApiException{400, {ApiErrorCode::kBadInput, message, field}};
}

// Library parameter names -> public query names.
std::string public_name(const std::string& param) {
  static const std::map<std::string, std::string> names = {
      {"volume", "V"},      {"floor", "F"},      {"height", "H"},
      {"width", "W"},       {"length", "L"},     {"alpha", "alpha_deg"},
      {"resolution", "res"}};
  const auto it = names.find(param);
  return it == names.end() ? param : it->second;
}

ApiException from_library(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kOutOfDomain:
      return {400, {ApiErrorCode::kOutOfDomain, e.what(), public_name(e.param())}};
    case ErrorCode::kInvalidParameter:
      return {400, {ApiErrorCode::kBadInput, e.what(), public_name(e.param())}};
    case ErrorCode::kSolverFailure:
      break;
  }
  return {500, {ApiErrorCode::kInternal, e.what(), std::nullopt}};
}

class Params {
 public:
  Params(const Query& query, std::initializer_list<const char*> allowed) : query_(query) {
    const std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& [key, value] : query_) {
      if (!names.count(key)) bad_input(key, "unknown query parameter '" + key + "'");
      if (query_.count(key) > 1) bad_input(key, "duplicate query parameter '" + key + "'");
    }
  }

  double number(const char* name) const {
    const auto it = query_.find(name);
    if (it == query_.end()) bad_input(name, std::string("missing query parameter '") + name + "'");
    return parse_number(name, it->second);
  }

  double number_or(const char* name, double fallback) const {
    const auto it = query_.find(name);
    return it == query_.end() ? fallback : parse_number(name, it->second);
  }

  int integer_or(const char* name, int fallback) const {
    const auto it = query_.find(name);
    if (it == query_.end()) return fallback;
    const std::string& text = it->second;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      bad_input(name, std::string(name) + " must be an integer");
    }
    return value;
  }

  std::vector<double> list_or(const char* name, const std::vector<double>& fallback) const {
    const auto it = query_.find(name);
    if (it == query_.end()) return fallback;
    std::vector<double> out;
    std::string_view rest = it->second;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(parse_number(name, std::string(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return out;
  }

 private:
  static double parse_number(const char* name, const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
      bad_input(name, std::string(name) + " must be a finite number");
    }
    return value;
  }

  const Query& query_;
};

void check_resolution(int res) {
  if (res < kMinFieldResolution || res > kMaxHttpResolution) {
    bad_input("res", "res must lie in [16, 1024]");
  }
}

Range shape_range(const Params& p, const char* lo, const char* hi) {
  return {p.number_or(lo, kDefaultShapeRange.lo), p.number_or(hi, kDefaultShapeRange.hi)};
}

json optimize_volume(const Query& q) {
  const Params p(q, {"V", "alpha_deg"});
  return io::to_json(optimize_fixed_volume(p.number("V"), deg_to_rad(p.number("alpha_deg"))));
}

json optimize_floor(const Query& q) {
  const Params p(q, {"F", "H", "alpha_deg"});
  return io::to_json(
      optimize_fixed_floor(p.number("F"), p.number("H"), deg_to_rad(p.number("alpha_deg"))));
}

json assess_design(const std::string& body) {
  json in;
  try {
    in = json::parse(body);
  } catch (const json::parse_error&) {
    bad_input("body", "request body is not valid JSON");
  }
  if (!in.is_object()) bad_input("body", "request body must be a JSON object");
  static const std::set<std::string> keys = {"W", "L", "H", "alpha_deg"};
  for (const auto& item : in.items()) {
    if (!keys.count(item.key())) bad_input(item.key(), "unknown field '" + item.key() + "'");
  }
  const auto get = [&](const char* key) {
    if (!in.contains(key)) bad_input(key, std::string("missing field '") + key + "'");
    if (!in[key].is_number()) bad_input(key, std::string(key) + " must be a number");
    return in[key].get<double>();
  };
  const HouseParams design{get("W"), get("L"), get("H"), deg_to_rad(get("alpha_deg"))};
  return io::to_json(assess(design));
}

json compactness_field_json(const Query& q) {
  const Params p(q, {"alpha_deg", "rmin", "rmax", "kmin", "kmax", "res"});
  const int res = p.integer_or("res", kDefaultFieldResolution);
  check_resolution(res);
  return io::to_json(compactness_field(deg_to_rad(p.number("alpha_deg")),
                                       shape_range(p, "rmin", "rmax"),
                                       shape_range(p, "kmin", "kmax"), res));
}

json surface_field_json(const Query& q) {
  const Params p(q, {"V", "alpha_deg", "rmin", "rmax", "kmin", "kmax", "res"});
  const int res = p.integer_or("res", kDefaultFieldResolution);
  check_resolution(res);
  return io::to_json(surface_field(p.number("V"), deg_to_rad(p.number("alpha_deg")),
                                   shape_range(p, "rmin", "rmax"),
                                   shape_range(p, "kmin", "kmax"), res));
}

json contours_json(const Query& q) {
  const Params p(q, {"alpha_deg", "levels", "rmin", "rmax", "kmin", "kmax", "res"});
  const int res = p.integer_or("res", kDefaultContourResolution);
  check_resolution(res);
  return io::to_json(compactness_contours(
      deg_to_rad(p.number("alpha_deg")), p.list_or("levels", kDefaultContourLevels),
      shape_range(p, "rmin", "rmax"), shape_range(p, "kmin", "kmax"), res));
}

json sweep_json(const Query& q) {
  const Params p(q, {"V", "alpha_min_deg", "alpha_max_deg", "samples"});
  const double volume = p.number("V");
  const Range alphas{deg_to_rad(p.number_or("alpha_min_deg", kAlphaMinDeg)),
                     deg_to_rad(p.number_or("alpha_max_deg", kAlphaMaxDeg))};
  try {
    require_solver_alpha(alphas.lo);
  } catch (const Error& e) {
    throw ApiException{400, {ApiErrorCode::kOutOfDomain, e.what(), "alpha_min_deg"}};
  }
  try {
    require_solver_alpha(alphas.hi);
  } catch (const Error& e) {
    throw ApiException{400, {ApiErrorCode::kOutOfDomain, e.what(), "alpha_max_deg"}};
  }
  return io::sweep_to_json(volume,
                           sweep_curves(volume, alphas, p.integer_or("samples", kDefaultCurveSamples)));
}

json floor_curve_json(const Query& q) {
  const Params p(q, {"F", "H", "alpha_deg", "wmin", "wmax", "samples"});
  std::optional<Range> widths;
  if (q.count("wmin") || q.count("wmax")) {
    if (!q.count("wmin") || !q.count("wmax")) {
      bad_input(q.count("wmin") ? "wmax" : "wmin", "wmin and wmax must be given together");
    }
    widths = Range{p.number("wmin"), p.number("wmax")};
  }
  return io::to_json(floor_curve(p.number("F"), p.number("H"), deg_to_rad(p.number("alpha_deg")),
                                 widths, p.integer_or("samples", kDefaultCurveSamples)));
}

}  // namespace

ApiResponse handle(const std::string& method, const std::string& path, const Query& query,
                   const std::string& body) {
  using Getter = json (*)(const Query&);
  static const std::map<std::string, Getter> gets = {
      {"/api/v1/optimize/volume", optimize_volume},
      {"/api/v1/optimize/floor", optimize_floor},
      {"/api/v1/fields/compactness", compactness_field_json},
      {"/api/v1/fields/surface", surface_field_json},
      {"/api/v1/fields/contours", contours_json},
      {"/api/v1/sweep", sweep_json},
      {"/api/v1/curves/floor", floor_curve_json},
  };
  try {
    try {
      if (path == "/api/v1/assess") {
        if (method != "POST") {
          throw ApiException{405, {ApiErrorCode::kMethodNotAllowed, "use POST", std::nullopt}};
        }
        if (!query.empty()) bad_input(query.begin()->first, "assess takes no query parameters");
        return {200, io::to_body(assess_design(body))};
      }
      const auto it = gets.find(path);
      if (it == gets.end()) {
        throw ApiException{404, {ApiErrorCode::kNotFound, "no such endpoint: " + path, std::nullopt}};
      }
      if (method != "GET") {
        throw ApiException{405, {ApiErrorCode::kMethodNotAllowed, "use GET", std::nullopt}};
      }
      return {200, io::to_body(it->second(query))};
    } catch (const Error& e) {
      throw from_library(e);
    }
  } catch (const ApiException& e) {
    return {e.status, error_body(e.error)};
  } catch (const std::exception& e) {
    return {500, error_body({ApiErrorCode::kInternal, e.what(), std::nullopt})};
  }
}

ServiceConfig load_config(const std::string& path, ServiceConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidParameter, "config", "cannot open config file " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidParameter, "config", std::string("config: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidParameter, "config", "config must be a JSON object");
  }
  try {
    if (j.contains("cors_allow")) {
      for (const auto& origin : j.at("cors_allow")) {
        base.cors_allow.push_back(origin.get<std::string>());
      }
    }
    if (j.contains("bind")) base.bind = j.at("bind").get<std::string>();
    if (j.contains("port")) base.port = j.at("port").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidParameter, "config", std::string("config: ") + e.what());
  }
  return base;
}

std::optional<std::string> allowed_origin(const ServiceConfig& config, const std::string& origin) {
  static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:\d{1,5})?$)");
  if (std::regex_match(origin, local)) return origin;
  for (const auto& allowed : config.cors_allow) {
    if (allowed == "*") return std::string("*");
    if (allowed == origin) return origin;
  }
  return std::nullopt;
}

Server::Server(ServiceConfig config)
    : config_(std::move(config)), server_(std::make_unique<httplib::Server>()) {
  server_->set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
    if (req.has_header("Origin")) {
      if (auto origin = allowed_origin(config_, req.get_header_value("Origin"))) {
        res.set_header("Access-Control-Allow-Origin", *origin);
        res.set_header("Vary", "Origin");
      }
    }
    if (req.method == "OPTIONS") {
      res.status = 204;
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      return httplib::Server::HandlerResponse::Handled;
    }
    return httplib::Server::HandlerResponse::Unhandled;
  });
  // Routing lives in handle(); the body is only available in regular handlers.
  const auto dispatch = [](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse out = handle(req.method, req.path, req.params, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server_->Get(".*", dispatch);
  server_->Post(".*", dispatch);
  server_->Put(".*", dispatch);
  server_->Patch(".*", dispatch);
  server_->Delete(".*", dispatch);
}

Server::~Server() { stop(); }

int Server::bind() {
  if (config_.port == 0) return server_->bind_to_any_port(config_.bind);
  return server_->bind_to_port(config_.bind, config_.port) ? config_.port : -1;
}

bool Server::listen() { return server_->listen_after_bind(); }

void Server::stop() {
  if (server_) server_->stop();
}

}  // namespace barn::service
