#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "ytw/ytw.h"

namespace {

struct Engine {
  ytw_engine* e = ytw_engine_new();
  ~Engine() { ytw_engine_free(e); }
};

struct Response {
  int code;
  nlohmann::json body;
};

Response call(ytw_engine* e, const std::string& request) {
  char* out = nullptr;
  int code = ytw_run(e, request.c_str(), &out);
  Response r{code, nlohmann::json()};
  if (out) {
    r.body = nlohmann::json::parse(out);
    ytw_string_free(out);
  }
  return r;
}

}  // namespace

TEST_CASE("version and lifecycle") {
  Engine eng;
  REQUIRE(eng.e != nullptr);
  CHECK(std::string(ytw_version()) == "0.1.0");
  CHECK(std::string(ytw_engine_last_error(eng.e)).empty());
}

TEST_CASE("verify through the C API") {
  Engine eng;
  Response r = call(eng.e, R"({"command":"verify","suite":"ternary","field":"Q","flavor":"sp","n":1})");
  CHECK(r.code == YTW_OK);
  CHECK(r.body["pass"] == true);
  CHECK(r.body["schema"] == "ytwist-report/1");
  CHECK(r.body["items"].size() == 3);
}

TEST_CASE("bad field spec gives YTW_ERR_CONFIG with a diagnostic") {
  Engine eng;
  char* out = nullptr;
  int code = ytw_verify(eng.e, R"({"field":"Fp:2"})", &out);
  CHECK(code == YTW_ERR_CONFIG);
  CHECK(out == nullptr);
  CHECK(std::string(ytw_engine_last_error(eng.e)).find("characteristic 2") != std::string::npos);
  code = ytw_verify(eng.e, R"({"field":"Fp:91"})", &out);
  CHECK(code == YTW_ERR_CONFIG);
  code = ytw_run(eng.e, "not json", &out);
  CHECK(code == YTW_ERR_CONFIG);
}

TEST_CASE("drinfeld pipeline with roundtrip") {
  Engine eng;
  Response r = call(eng.e, R"({
    "command":"drinfeld","field":"Q","roundtrip":true,
    "spec":{"flavor":"sp","n":1,"gl_factors":[{"base":[1,-1],"shift":"0"}]}
  })");
  CHECK(r.code == YTW_OK);
  CHECK(r.body["pass"] == true);
  // P_1 = u^2(u-1)^2 = u^2 - 2u^3 + u^4
  auto p = r.body["payload"]["P"][0];
  CHECK(p == nlohmann::json({"0", "0", "1", "-2", "1"}));
}

TEST_CASE("stability panel and hypothesis exit code") {
  Engine eng;
  Response ok = call(eng.e, R"({
    "command":"stability",
    "spec":{"name":"t1","flavor":"sp","tail":[["-1","1"]]},
    "primes":[101,211]
  })");
  CHECK(ok.code == YTW_OK);
  CHECK(ok.body["payload"]["verdict"] == "PASS");

  Response skip = call(eng.e, R"({
    "command":"stability",
    "spec":{"name":"t1","flavor":"sp","tail":[["-1","1"]]},
    "primes":[5]
  })");
  CHECK(skip.code == YTW_ERR_HYPOTHESIS);

  char* out = nullptr;
  int code = ytw_stability(eng.e, R"({"spec":{"name":"x","flavor":"sp","tail":[]},"primes":[]})", &out);
  CHECK(code == YTW_ERR_CONFIG);
}

TEST_CASE("sdet command emits coefficients") {
  Engine eng;
  Response r = call(eng.e, R"({
    "command":"sdet","field":"Fp:101","order":4,
    "spec":{"flavor":"o","n":1,"gl_factors":[{"base":[1,0],"shift":"0"}]}
  })");
  CHECK(r.code == YTW_OK);
  CHECK(r.body["payload"]["coefficients"].size() == 5);
}

TEST_CASE("identical configuration gives a byte-identical report") {
  Engine eng;
  const char* req = R"({"command":"verify","suite":"fused","field":"Q","flavor":"o","n":1,"seed":7})";
  char *a = nullptr, *b = nullptr;
  CHECK(ytw_run(eng.e, req, &a) == YTW_OK);
  CHECK(ytw_run(eng.e, req, &b) == YTW_OK);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(std::string(a) == std::string(b));
  ytw_string_free(a);
  ytw_string_free(b);
}

TEST_CASE("brauer command") {
  Engine eng;
  Response r = call(eng.e, R"({"command":"brauer","field":"Q","flavor":"sp","n":2})");
  CHECK(r.code == YTW_OK);
  Response g = call(eng.e, R"({"command":"brauer","op":"hom_dimension","r1":3,"r2":3})");
  CHECK(g.body["payload"]["dimension"] == 15);
}
