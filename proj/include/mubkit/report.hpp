// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// VerificationReport: a flat list of named numeric checks plus a summary,
// with deterministic JSON / CSV / text emitters.
//
// Check names are "<module>/<name>", so sorting by name sorts by module first.
// Floats are written with 12 significant digits (%.12g, which switches to
// scientific notation below 1e-4) and always carry a decimal point or
// exponent, so identical reports always emit identical bytes.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubkit/common.hpp"

namespace mubkit {

struct Check {
  std::string name;
  std::string paper_anchor;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  double deviation() const { return std::abs(measured - expected); }
  bool operator==(const Check&) const = default;
};

inline Check make_check(std::string name, std::string anchor, double measured, double expected, double tolerance) {
  const bool pass = std::isfinite(measured) && std::abs(measured - expected) <= tolerance;
  return {std::move(name), std::move(anchor), measured, expected, tolerance, pass};
}

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  double max_deviation = 0.0;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::vector<Check> checks) : checks_(std::move(checks)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string name, std::string anchor, double measured, double expected, double tolerance) {
    checks_.push_back(make_check(std::move(name), std::move(anchor), measured, expected, tolerance));
  }

  const std::vector<Check>& checks() const { return checks_; }
  bool empty() const { return checks_.empty(); }

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& c : checks_) {
      (c.pass ? s.pass : s.fail) += 1;
      if (std::isfinite(c.deviation())) s.max_deviation = std::max(s.max_deviation, c.deviation());
    }
    return s;
  }

  bool all_pass() const { return summary().fail == 0; }
  // 0 if every check passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }

  bool operator==(const VerificationReport&) const = default;

 private:
  std::vector<Check> checks_;
};

// Concatenates and sorts by name (stable, so equal names keep input order).
inline VerificationReport merge(std::span<const VerificationReport> reports) {
  std::vector<Check> all;
  for (const auto& r : reports) all.insert(all.end(), r.checks().begin(), r.checks().end());
  std::stable_sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return VerificationReport(std::move(all));
}

inline VerificationReport merge(std::initializer_list<VerificationReport> reports) {
  return merge(std::span<const VerificationReport>(reports.begin(), reports.size()));
}

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw InputError("unknown report format '" + s + "' (expected json, csv or text)");
}

// 12 significant digits; "0.0" for zero; non-finite values as "nan"/"inf".
inline std::string format_double(double v) {
  if (v == 0.0) return "0.0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_json(const VerificationReport& r) {
  std::string out = "{\"checks\":[";
  bool first = true;
  for (const auto& c : r.checks()) {
    if (!first) out += ",";
    first = false;
    out += "{\"expected\":" + detail::json_number(c.expected);
    out += ",\"measured\":" + detail::json_number(c.measured);
    out += ",\"name\":" + detail::json_string(c.name);
    out += std::string(",\"pass\":") + (c.pass ? "true" : "false");
    out += ",\"paper_anchor\":" + detail::json_string(c.paper_anchor);
    out += ",\"tolerance\":" + detail::json_number(c.tolerance) + "}";
  }
  const auto s = r.summary();
  out += "],\"summary\":{\"fail\":" + std::to_string(s.fail);
  out += ",\"max_deviation\":" + detail::json_number(s.max_deviation);
  out += ",\"pass\":" + std::to_string(s.pass) + "}}";
  return out;
}

inline std::string emit_csv(const VerificationReport& r) {
  std::string out = "name,paper_anchor,measured,expected,tolerance,pass\n";
  for (const auto& c : r.checks()) {
    out += detail::csv_field(c.name) + "," + detail::csv_field(c.paper_anchor) + "," + format_double(c.measured) +
           "," + format_double(c.expected) + "," + format_double(c.tolerance) + "," + (c.pass ? "true" : "false") +
           "\n";
  }
  return out;
}

inline std::string emit_text(const VerificationReport& r) {
  std::size_t width = 4;
  for (const auto& c : r.checks()) width = std::max(width, c.name.size());
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("name", width) << "  result  " << pad("measured", 20) << pad("expected", 20) << "tolerance\n";
  for (const auto& c : r.checks()) {
    os << pad(c.name, width) << "  " << (c.pass ? "PASS" : "FAIL") << "    " << pad(format_double(c.measured), 20)
       << pad(format_double(c.expected), 20) << format_double(c.tolerance) << "\n";
  }
  const auto s = r.summary();
  os << "summary: " << s.pass << " passed, " << s.fail << " failed, max deviation " << format_double(s.max_deviation)
     << "\n";
  return os.str();
}

inline std::string emit(const VerificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return emit_json(r);
    case ReportFormat::csv: return emit_csv(r);
    case ReportFormat::text: return emit_text(r);
  }
  throw InputError("unknown report format");
}

inline VerificationReport parse_report_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  auto num = [](const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  std::vector<Check> checks;
  for (const auto& c : j.at("checks")) {
    checks.push_back({c.at("name").get<std::string>(), c.at("paper_anchor").get<std::string>(), num(c.at("measured")),
                      num(c.at("expected")), num(c.at("tolerance")), c.at("pass").get<bool>()});
  }
  return VerificationReport(std::move(checks));
}

}  // namespace mubkit
