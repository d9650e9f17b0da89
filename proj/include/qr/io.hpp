// Output plumbing: fixed-precision numeric formatting, a timestamp-free
// content hash, and CSV/JSON writers that embed the full run configuration
// and seed so every artifact is reproducible byte-for-byte.
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../../vendor/json.hpp"

namespace qr::io {

inline constexpr const char* kToolVersion = "1.0.0";

// 15 significant digits for files, 6 for terminal summaries.
inline std::string fmt(double v, int sig = 15) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
  return buf;
}

// FNV-1a 64-bit over the payload bytes; hex-encoded.
inline std::string content_hash(const std::string& payload) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return buf;
}

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct Table {
  ConfigEcho config;  // includes the seed when one is used
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// CSV layout: '#'-prefixed metadata lines (version, config echo, content
// hash of the data section), then a header row and the data rows.
inline std::string to_csv(const Table& t) {
  std::string body;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) body += ',';
    body += t.columns[c];
  }
  body += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) body += ',';
      body += row[c];
    }
    body += '\n';
  }
  std::string head = "# version=" + std::string(kToolVersion) + "\n";
  for (const auto& [k, v] : t.config) head += "# " + k + "=" + v + "\n";
  head += "# content_hash=" + content_hash(body) + "\n";
  return head + body;
}

inline std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["version"] = kToolVersion;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : t.config) cfg[k] = v;
  j["config"] = cfg;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  j["content_hash"] = content_hash(j.dump());
  return j.dump(2) + "\n";
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << data;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qr::io
