#include "chainscape/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chainscape {

namespace {

[[noreturn]] void parse_fail(const std::string& what, long long line, long long column) {
  fail(errc::parse_error,
       what + " at line " + std::to_string(line) + ", column " + std::to_string(column),
       line, column);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, long long line, long long column) {
  const std::string t = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    parse_fail("expected a number, got '" + t + "'", line, column);
  return v;
}

}  // namespace

MetricSpace load_space_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long lineno = 0;
  std::vector<std::string> labels;
  if (!std::getline(in, line)) parse_fail("empty input", 1, 1);
  ++lineno;
  for (auto& f : split_csv_line(line)) labels.push_back(trim(f));
  // Tolerate an empty corner cell before the labels.
  if (!labels.empty() && labels.front().empty()) labels.erase(labels.begin());
  const int n = static_cast<int>(labels.size());
  if (n == 0) parse_fail("header must list labels", 1, 1);
  for (int i = 0; i < n; ++i)
    if (labels[static_cast<std::size_t>(i)].empty())
      parse_fail("empty label", 1, i + 1);

  Matrix dist(n);
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line)) parse_fail("expected " + std::to_string(n) + " data rows", lineno + 1, 1);
    ++lineno;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != n + 1)
      parse_fail("expected label plus " + std::to_string(n) + " values", lineno, 1);
    if (trim(fields[0]) != labels[static_cast<std::size_t>(r)])
      parse_fail("row label '" + trim(fields[0]) + "' does not match header '" +
                     labels[static_cast<std::size_t>(r)] + "'",
                 lineno, 1);
    for (int c = 0; c < n; ++c)
      dist(r, c) = parse_number(fields[static_cast<std::size_t>(c + 1)], lineno, c + 2);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) parse_fail("unexpected trailing content", lineno, 1);
  }
  return validate_metric(dist, labels);
}

MetricSpace load_space_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("metric"))
    fail(errc::parse_error, "point cloud needs 'points' and 'metric'");
  const auto ambient = ambient_from_name(doc["metric"].get<std::string>());
  if (!ambient)
    fail(errc::parse_error, "unknown metric '" + doc["metric"].get<std::string>() + "'");
  std::vector<std::vector<double>> points;
  try {
    points = doc["points"].get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception&) {
    fail(errc::parse_error, "'points' must be an array of coordinate arrays");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    try {
      labels = doc["labels"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      fail(errc::parse_error, "'labels' must be an array of strings");
    }
    if (labels.size() != points.size())
      fail(errc::parse_error, "label count does not match point count");
  }
  return space_from_points(points, *ambient, labels);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

MetricSpace load_space(const std::string& path, std::optional<InputFormat> format) {
  if (!format) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
      format = InputFormat::json;
    else
      format = InputFormat::csv;
  }
  const std::string text = read_file(path);
  return *format == InputFormat::csv ? load_space_csv(text) : load_space_json(text);
}

std::string format_double(double v) {
  // Shortest decimal that round-trips; matches the JSON writer's style.
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) return buf;
  }
  return std::to_string(v);
}

std::string canonical_csv(const MetricSpace& space) {
  std::string out;
  for (int i = 0; i < space.size(); ++i) {
    if (i) out.push_back(',');
    out += space.label(i);
  }
  out.push_back('\n');
  for (int i = 0; i < space.size(); ++i) {
    out += space.label(i);
    for (int j = 0; j < space.size(); ++j) {
      out.push_back(',');
      out += format_double(space.dist(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

Modulus load_modulus_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("breakpoints"))
    fail(errc::parse_error, "modulus needs 'breakpoints'");
  std::vector<std::pair<double, double>> bp;
  try {
    for (const auto& pair : doc["breakpoints"]) {
      if (!pair.is_array() || pair.size() != 2)
        fail(errc::parse_error, "breakpoints must be [t, value] pairs");
      bp.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  } catch (const nlohmann::json::exception&) {
    fail(errc::parse_error, "breakpoints must be [t, value] pairs");
  }
  return Modulus(std::move(bp));
}

Modulus load_modulus_file(const std::string& path) {
  return load_modulus_json(read_file(path));
}

std::string modulus_to_json(const Modulus& m) {
  nlohmann::ordered_json doc;
  doc["breakpoints"] = nlohmann::ordered_json::array();
  for (const auto& [t, v] : m.breakpoints())
    doc["breakpoints"].push_back({t, v});
  return doc.dump();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(errc::invalid_argument, "digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace chainscape
