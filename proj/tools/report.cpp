// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <charconv>
#include <json.hpp>

namespace mwmcds::cli {

namespace {

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string to_text(const FieldValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::vector<VertexId>>) {
          return join_ids(v);
        } else {
          return std::to_string(v);
        }
      },
      value);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json to_json(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.fields()) {
    std::visit([&obj, &k = key](const auto& v) { obj[k] = v; }, value);
  }
  return obj;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json-lines") return Format::JsonLines;
  return std::nullopt;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string render(const std::vector<Record>& records, Format format) {
  std::string out;
  switch (format) {
    case Format::Text:
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (i != 0) out += '\n';
        for (const auto& [key, value] : records[i].fields()) {
          out += key + ": " + to_text(value) + '\n';
        }
      }
      break;
    case Format::Csv:
      if (records.empty()) break;
      for (std::size_t i = 0; i < records.front().fields().size(); ++i) {
        if (i != 0) out += ',';
        out += records.front().fields()[i].first;
      }
      out += '\n';
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields().size(); ++i) {
          if (i != 0) out += ',';
          out += csv_escape(to_text(r.fields()[i].second));
        }
        out += '\n';
      }
      break;
    case Format::JsonLines:
      for (const auto& r : records) out += to_json(r).dump() + '\n';
      break;
  }
  return out;
}

}  // namespace mwmcds::cli
