#include "ytw/ytw.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "suites.hpp"

struct ytw_engine {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  if (out) memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int run_impl(ytw_engine* engine, const std::string& request, char** response_json) {
  if (!engine) return YTW_ERR_INTERNAL;
  engine->last_error.clear();
  if (response_json) *response_json = nullptr;
  try {
    ytw::Report report = ytw::run_request(request);
    if (response_json) *response_json = dup_string(ytw::report_to_json(report));
    return report.code();
  } catch (const ytw::config_error& e) {
    engine->last_error = e.what();
    return YTW_ERR_CONFIG;
  } catch (const ytw::math_error& e) {
    engine->last_error = e.what();
    return YTW_ERR_CHECK_FAILED;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return YTW_ERR_INTERNAL;
  }
}

int run_with_command(ytw_engine* engine, const char* command, const char* config_json,
                     char** response_json) {
  if (!engine || !config_json) return YTW_ERR_INTERNAL;
  nlohmann::json j = nlohmann::json::parse(config_json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    engine->last_error = "malformed JSON configuration";
    return YTW_ERR_CONFIG;
  }
  j["command"] = command;
  return run_impl(engine, j.dump(), response_json);
}

}  // namespace

extern "C" {

ytw_engine* ytw_engine_new(void) { return new (std::nothrow) ytw_engine(); }

void ytw_engine_free(ytw_engine* engine) { delete engine; }

const char* ytw_version(void) { return ytw::kVersion; }

const char* ytw_engine_last_error(const ytw_engine* engine) {
  return engine ? engine->last_error.c_str() : "";
}

int ytw_run(ytw_engine* engine, const char* request_json, char** response_json) {
  if (!engine || !request_json) return YTW_ERR_INTERNAL;
  return run_impl(engine, request_json, response_json);
}

int ytw_verify(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "verify", config, out);
}
int ytw_drinfeld(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "drinfeld", config, out);
}
int ytw_stability(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "stability", config, out);
}
int ytw_brauer(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "brauer", config, out);
}
int ytw_qdet(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "qdet", config, out);
}
int ytw_sdet(ytw_engine* engine, const char* config, char** out) {
  return run_with_command(engine, "sdet", config, out);
}

void ytw_string_free(char* text) { free(text); }

}  // extern "C"
