/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "carlitz/fq.hpp"
#include "json.hpp"

namespace carlitz_cli {

/*
 * One JSON file per cached value, named by the object kind plus a 64-bit
 * FNV-1a digest of the full key (p, e, field modulus, kind, parameters).
 * The key is stored inside the file too, so a digest collision or a stale
 * file is detected by comparing keys, and the caller re-verifies the value
 * text by parsing it before use. Anything suspicious counts as a miss.
 */
class DiskCache {
 public:
  /* No directory disables the cache; lookups miss and stores are dropped. */
  DiskCache(std::string dir, const carlitz::FieldPtr& field);

  bool enabled() const { return !dir_.empty(); }

  /* The stored value for this kind + parameters, or nullopt on miss,
   * key mismatch, or unreadable file. */
  std::optional<nlohmann::ordered_json> lookup(const std::string& kind,
                                               const nlohmann::ordered_json& params) const;

  void store(const std::string& kind, const nlohmann::ordered_json& params,
             const nlohmann::ordered_json& value) const;

  /* Every well-formed entry under the directory, sorted by file name;
   * each element is {file, key}. */
  static std::vector<std::pair<std::string, nlohmann::ordered_json>> entries(
      const std::string& dir);

  /* Removes this tool's cache files; returns how many. */
  static int clear(const std::string& dir);

 private:
  nlohmann::ordered_json key(const std::string& kind,
                             const nlohmann::ordered_json& params) const;
  std::string path_for(const nlohmann::ordered_json& key) const;

  std::string dir_;
  int p_ = 0;
  int e_ = 1;
  std::string modulus_;
};

}  // namespace carlitz_cli
