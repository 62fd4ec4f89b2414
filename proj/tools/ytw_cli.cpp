// ytw: command-line front door of the ytwist engine. Builds a JSON request
// from flags, hands it to the shared-library C API, prints the report.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ytw/ytw.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--spec", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int dispatch(const nlohmann::json& request, const std::string& out_path) {
  ytw_engine* engine = ytw_engine_new();
  char* response = nullptr;
  int code = ytw_run(engine, request.dump().c_str(), &response);
  if (response) {
    if (out_path.empty()) {
      printf("%s\n", response);
    } else {
      std::ofstream out(out_path);
      out << response << "\n";
    }
    ytw_string_free(response);
  } else {
    fprintf(stderr, "error: %s\n", ytw_engine_last_error(engine));
  }
  ytw_engine_free(engine);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ytwist: exact Yangian / twisted Yangian verification engine"};
  app.set_version_flag("--version", ytw_version());
  app.require_subcommand(1);

  std::string field = "Q", flavor = "sp", suite = "all", spec_path, out_path;
  int n = 1, order = 10;
  uint64_t seed = 0x59414e47ull;
  std::vector<uint32_t> primes = {101, 211, 307};
  bool roundtrip = false;

  auto add_common = [&](CLI::App* cmd, bool with_field = true) {
    if (with_field) cmd->add_option("--field", field, "Q or Fp:<prime>");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("--suite", suite,
                     "ternary|twisted|yangbaxter|fused|qdet|sdet|brauer|all");
  verify->add_option("--flavor", flavor, "o or sp");
  verify->add_option("--n", n, "rank (N = 2n)");
  verify->add_option("--order", order, "series truncation order");
  verify->add_option("--seed", seed, "seed for randomized probes");
  add_common(verify);

  CLI::App* drinfeld = app.add_subcommand("drinfeld", "extract Drinfeld data from a module spec");
  drinfeld->add_option("--spec", spec_path, "yangian module spec (JSON file)")->required();
  drinfeld->add_flag("--roundtrip", roundtrip, "rebuild from the data and re-extract");
  add_common(drinfeld);

  CLI::App* stability = app.add_subcommand("stability", "cross-characteristic stabilization panel");
  stability->add_option("--spec", spec_path, "stability spec (JSON file)")->required();
  stability->add_option("--primes", primes, "prime panel");
  add_common(stability, false);

  CLI::App* brauer = app.add_subcommand("brauer", "Brauer diagram calculus checks");
  brauer->add_option("--flavor", flavor, "o or sp");
  brauer->add_option("--n", n, "rank");
  brauer->add_option("--seed", seed, "seed");
  add_common(brauer);

  CLI::App* qdet = app.add_subcommand("qdet", "quantum determinant of a module spec");
  qdet->add_option("--spec", spec_path, "yangian module spec (JSON file)")->required();
  qdet->add_option("--order", order, "series order");
  add_common(qdet);

  CLI::App* sdet = app.add_subcommand("sdet", "Sklyanin determinant of a module spec");
  sdet->add_option("--spec", spec_path, "yangian module spec (JSON file)")->required();
  sdet->add_option("--order", order, "series order");
  add_common(sdet);

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json request;
    if (verify->parsed()) {
      request = {{"command", "verify"}, {"suite", suite},   {"field", field},
                 {"flavor", flavor},    {"n", n},           {"order", order},
                 {"seed", seed}};
    } else if (drinfeld->parsed()) {
      request = {{"command", "drinfeld"},
                 {"field", field},
                 {"spec", nlohmann::json::parse(read_file(spec_path))},
                 {"roundtrip", roundtrip}};
    } else if (stability->parsed()) {
      request = {{"command", "stability"},
                 {"spec", nlohmann::json::parse(read_file(spec_path))},
                 {"primes", primes}};
    } else if (brauer->parsed()) {
      request = {{"command", "brauer"}, {"field", field}, {"flavor", flavor},
                 {"n", n},              {"seed", seed}};
    } else if (qdet->parsed() || sdet->parsed()) {
      request = {{"command", qdet->parsed() ? "qdet" : "sdet"},
                 {"field", field},
                 {"order", order},
                 {"spec", nlohmann::json::parse(read_file(spec_path))}};
    }
    return dispatch(request, out_path);
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return YTW_ERR_CONFIG;
  }
}
