// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_TOOLS_REPORT_HPP
#define MWMCDS_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mwmcds/vertex_set.hpp"

namespace mwmcds::cli {

enum class Format { Text, Csv, JsonLines };

std::optional<Format> parse_format(std::string_view name) noexcept;

using FieldValue =
    std::variant<std::string, std::int64_t, std::uint64_t, double, bool, std::vector<VertexId>>;

/// Flat, ordered key-value record. Field names are the stable output schema.
class Record {
 public:
  Record& add(std::string key, FieldValue value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::vector<std::pair<std::string, FieldValue>>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::pair<std::string, FieldValue>> fields_;
};

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// text: "key: value" lines, records separated by a blank line.
/// csv: one header line from the first record, then one line per record.
/// json-lines: one JSON object per line.
std::string render(const std::vector<Record>& records, Format format);

inline std::string render(const Record& record, Format format) {
  return render(std::vector<Record>{record}, format);
}

}  // namespace mwmcds::cli

#endif  // MWMCDS_TOOLS_REPORT_HPP
