#pragma once

#include <string>
#include <utility>
#include <vector>

namespace semitwist {

/// One executed check. Cardinalities and witnesses are data, not exceptions:
/// a verification campaign always completes and summarizes.
struct CheckRecord {
  std::string name;
  std::string digest;
  std::string status;  // "pass" | "fail"
  std::vector<std::pair<std::string, long long>> cardinalities;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double wall_ms = 0.0;

  bool passed() const { return status == "pass"; }
};

struct Report {
  std::string file;
  std::string instance_digest;
  std::vector<CheckRecord> records;

  bool all_pass() const;
};

/// Renderers are byte-deterministic for a fixed input and tool version; with
/// `deterministic` set, wall times are excluded entirely.
std::string render_text(const Report& rep, bool deterministic);
std::string render_json(const Report& rep, bool deterministic);

}  // namespace semitwist
