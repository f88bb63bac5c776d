#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace barn::service {

inline constexpr int kDefaultPort = 8787;
inline constexpr const char* kDefaultBind = "127.0.0.1";
inline constexpr int kMaxHttpResolution = 1024;

/// Closed set of error codes returned in the `code` field of error bodies.
enum class ApiErrorCode { kBadInput, kOutOfDomain, kNotFound, kMethodNotAllowed, kInternal };

const char* to_string(ApiErrorCode code);

struct ApiError {
  ApiErrorCode code = ApiErrorCode::kBadInput;
  std::string message;
  std::optional<std::string> field;
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

using Query = std::multimap<std::string, std::string>;

/// Routes one request. Pure function of its arguments: no state is read or
/// written, so it is safe to call from any number of threads.
ApiResponse handle(const std::string& method, const std::string& path, const Query& query,
                   const std::string& body);

/// Serialized error body: {"code", "message", "field"?}.
std::string error_body(const ApiError& error);

struct ServiceConfig {
  std::string bind = kDefaultBind;
  int port = kDefaultPort;
  // Exact origins allowed in addition to http(s)://localhost[:port] and
  // http(s)://127.0.0.1[:port], which are always allowed.
  std::vector<std::string> cors_allow;
};

/// Reads {"cors_allow": ["https://..."], "bind": "...", "port": N} and
/// merges it over `base`. Missing keys keep the base value.
ServiceConfig load_config(const std::string& path, ServiceConfig base);

/// Value for Access-Control-Allow-Origin, or nothing if `origin` is not allowed.
std::optional<std::string> allowed_origin(const ServiceConfig& config, const std::string& origin);

/// Blocking HTTP server around `handle`. Requests are served from a thread pool.
class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket. Port 0 picks a free port. Returns the bound port or -1.
  int bind();
  /// Serves until stop() is called. Requires a successful bind().
  bool listen();
  void stop();

 private:
  ServiceConfig config_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace barn::service
