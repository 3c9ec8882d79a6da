/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cache.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace carlitz_cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

bool is_cache_file(const fs::path& p) {
  return p.extension() == ".json" &&
         p.filename().string().find("carlitz-") == 0;
}

}  // namespace

DiskCache::DiskCache(std::string dir, const carlitz::FieldPtr& field)
    : dir_(std::move(dir)) {
  if (field) {
    p_ = field->p();
    e_ = field->e();
    std::ostringstream m;
    for (std::size_t i = 0; i < field->modulus().size(); ++i)
      m << (i ? "," : "") << field->modulus()[i];
    modulus_ = m.str();
  }
}

ordered_json DiskCache::key(const std::string& kind, const ordered_json& params) const {
  ordered_json k;
  k["p"] = p_;
  k["e"] = e_;
  k["modulus"] = modulus_;
  k["kind"] = kind;
  k["params"] = params;
  return k;
}

std::string DiskCache::path_for(const ordered_json& k) const {
  return (fs::path(dir_) /
          ("carlitz-" + k["kind"].get<std::string>() + "-" + hex64(fnv1a(k.dump())) + ".json"))
      .string();
}

std::optional<ordered_json> DiskCache::lookup(const std::string& kind,
                                              const ordered_json& params) const {
  if (!enabled()) return std::nullopt;
  ordered_json k = key(kind, params);
  std::ifstream in(path_for(k));
  if (!in) return std::nullopt;
  ordered_json stored = ordered_json::parse(in, nullptr, false);
  if (stored.is_discarded() || !stored.is_object()) return std::nullopt;
  if (stored.value("key", ordered_json()) != k) return std::nullopt;
  if (!stored.contains("value")) return std::nullopt;
  return stored["value"];
}

void DiskCache::store(const std::string& kind, const ordered_json& params,
                      const ordered_json& value) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  ordered_json k = key(kind, params);
  ordered_json entry;
  entry["key"] = k;
  entry["value"] = value;
  std::ofstream out(path_for(k), std::ios::trunc);
  if (out) out << entry.dump() << '\n';
}

std::vector<std::pair<std::string, ordered_json>> DiskCache::entries(const std::string& dir) {
  std::vector<std::pair<std::string, ordered_json>> out;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir, ec)) {
    if (!de.is_regular_file() || !is_cache_file(de.path())) continue;
    std::ifstream in(de.path());
    ordered_json stored = ordered_json::parse(in, nullptr, false);
    if (stored.is_discarded() || !stored.contains("key")) continue;
    out.emplace_back(de.path().filename().string(), stored["key"]);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int DiskCache::clear(const std::string& dir) {
  int removed = 0;
  std::error_code ec;
  std::vector<fs::path> victims;
  for (const auto& de : fs::directory_iterator(dir, ec))
    if (de.is_regular_file() && is_cache_file(de.path())) victims.push_back(de.path());
  for (const fs::path& p : victims)
    if (fs::remove(p, ec)) ++removed;
  return removed;
}

}  // namespace carlitz_cli
