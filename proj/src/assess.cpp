#include "barnopt/assess.hpp"

#include <charconv>

#include "barnopt/angles.hpp"
#include "barnopt/error.hpp"

namespace barn {

DesignAssessment assess(const HouseParams& p) {
  DesignAssessment a;
  a.fixed_volume = compactness(p);
  a.floor = floor_area(p);
  a.fixed_floor = optimize_fixed_floor(a.floor, p.height, p.alpha);
  a.floor_ratio = a.fixed_volume.surface / a.fixed_floor.surface_min;
  a.floor_headroom = a.fixed_volume.surface - a.fixed_floor.surface_min;
  return a;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view text, const char* column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidParameter, column,
                std::string("column ") + column + ": '" + std::string(text) +
                    "' is not a number");
  }
  return value;
}

}  // namespace

AuditResult audit_csv(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (!trim(line).empty()) lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  if (lines.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "csv", "missing header row");
  }
  std::string_view header = lines.front().second;
  if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
  const std::vector<std::string_view> expected = {"name", "W", "L", "H", "alpha_deg"};
  if (split(header) != expected) {
    throw Error(ErrorCode::kInvalidParameter, "csv", "header must be name,W,L,H,alpha_deg");
  }
  if (lines.size() == 1) {
    throw Error(ErrorCode::kInvalidParameter, "csv", "no data rows");
  }

  AuditResult result;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int row = static_cast<int>(i);
    const int line = lines[i].first;
    try {
      const auto cells = split(lines[i].second);
      if (cells.size() != 5) {
        throw Error(ErrorCode::kInvalidParameter, "csv",
                    "expected 5 columns, found " + std::to_string(cells.size()));
      }
      CaseInput in;
      in.name = std::string(cells[0]);
      in.width = parse_number(cells[1], "W");
      in.length = parse_number(cells[2], "L");
      in.height = parse_number(cells[3], "H");
      in.alpha_deg = parse_number(cells[4], "alpha_deg");
      const HouseParams p{in.width, in.length, in.height, deg_to_rad(in.alpha_deg)};
      result.rows.push_back({in, assess(p)});
    } catch (const Error& e) {
      result.errors.push_back({row, line, e.what()});
    }
  }
  return result;
}

}  // namespace barn
