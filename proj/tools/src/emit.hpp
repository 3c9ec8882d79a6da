/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace carlitz_cli {

using Record = nlohmann::ordered_json;

/*
 * Streams records in one of the two wire formats. JSON-lines prints every
 * record as-is. CSV prints a fixed header once and projects data records
 * onto those columns; summary records are JSON-only since they do not fit
 * a rectangular table.
 */
class Emitter {
 public:
  Emitter(std::ostream& out, bool csv, std::vector<std::string> columns)
      : out_(out), csv_(csv), columns_(std::move(columns)) {}

  void record(const Record& rec) {
    if (!csv_) {
      out_ << rec.dump() << '\n';
      return;
    }
    if (!header_done_) {
      for (std::size_t i = 0; i < columns_.size(); ++i)
        out_ << (i ? "," : "") << escape(columns_[i]);
      out_ << '\n';
      header_done_ = true;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out_ << ',';
      auto it = rec.find(columns_[i]);
      if (it != rec.end()) out_ << escape(cell(*it));
    }
    out_ << '\n';
  }

  void summary(const Record& rec) {
    if (!csv_) out_ << rec.dump() << '\n';
  }

 private:
  static std::string cell(const Record& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }

  std::ostream& out_;
  bool csv_;
  std::vector<std::string> columns_;
  bool header_done_ = false;
};

}  // namespace carlitz_cli
