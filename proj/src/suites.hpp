#pragma once

#include <string>
#include <vector>

#include "scalar.hpp"

namespace ytw {

inline const char* kVersion = "0.1.0";

struct ReportItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::string config;  // canonical config string (hashed into the report)
  std::vector<ReportItem> items;
  std::string payload;   // command-specific JSON payload ("" if none)
  int exit_hint = -1;    // -1: derive from pass(); else 0/1/2/3
  bool pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
  int code() const { return exit_hint >= 0 ? exit_hint : (pass() ? 0 : 1); }
};

// Deterministic FNV-1a of the canonical config string.
std::string config_hash(const std::string& config);

std::string report_to_json(const Report& report);

struct VerifyConfig {
  std::string suite = "all";  // ternary|twisted|yangbaxter|fused|qdet|sdet|brauer|all
  std::string field = "Q";
  std::string flavor = "sp";
  int n = 1;
  int order = 10;
  uint64_t seed = 0x59414e47ull;
};

Report run_verify(const VerifyConfig& config);

// config: {"field":..., "spec": <yangian module spec>, "roundtrip": bool}
Report run_drinfeld(const std::string& config_json);

// config: {"spec": <stability spec>, "primes":[...], "compare_to_q": bool}
Report run_stability(const std::string& config_json);

// config: {"command":"compose"|"gram"|"evaluate", ...}
Report run_brauer(const std::string& config_json);

// config: {"field":..., "spec": <module build spec>, "order": k}
Report run_qdet(const std::string& config_json);
Report run_sdet(const std::string& config_json);

// Dispatch on {"command": ...}; the entry point behind the C API.
Report run_request(const std::string& request_json);

}  // namespace ytw
