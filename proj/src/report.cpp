#include "semitwist/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "semitwist/version.hpp"

namespace semitwist {

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.passed(); });
}

std::string render_text(const Report& rep, bool deterministic) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << "\n";
  out << "file: " << rep.file << "\n";
  out << "instance: " << rep.instance_digest << "\n\n";

  size_t name_w = 5;
  for (const auto& r : rep.records) name_w = std::max(name_w, r.name.size());
  out << std::string(name_w, ' ') << "  status  details\n";
  for (const auto& r : rep.records) {
    out << r.name << std::string(name_w - r.name.size(), ' ') << "  "
        << (r.passed() ? "pass  " : "FAIL  ") << " ";
    bool first = true;
    for (const auto& [k, v] : r.cardinalities) {
      if (!first) out << " ";
      first = false;
      out << k << "=" << v;
    }
    if (!deterministic) {
      if (!first) out << " ";
      first = false;
      out << "wall_ms=" << (long long)std::llround(r.wall_ms);
    }
    if (first) out << "-";
    out << "\n";
    for (const auto& w : r.witnesses) out << std::string(name_w, ' ') << "  witness: " << w << "\n";
    for (const auto& n : r.notes) out << std::string(name_w, ' ') << "  note: " << n << "\n";
  }
  size_t n_pass = 0;
  for (const auto& r : rep.records) n_pass += r.passed();
  out << "\nsummary: " << n_pass << " pass, " << rep.records.size() - n_pass << " fail\n";
  return out.str();
}

std::string render_json(const Report& rep, bool deterministic) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["file"] = rep.file;
  j["instance"] = rep.instance_digest;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["digest"] = r.digest;
    c["status"] = r.status;
    nlohmann::ordered_json card = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.cardinalities) card[k] = v;
    c["cardinalities"] = card;
    c["witnesses"] = r.witnesses;
    c["notes"] = r.notes;
    if (!deterministic) c["wall_ms"] = std::llround(r.wall_ms);
    j["checks"].push_back(c);
  }
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace semitwist
