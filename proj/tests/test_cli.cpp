#include "rtea/cli.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.rfind("@", 0) == 0) a = std::string(RTEA_MODELS_DIR) + "/" + a.substr(1);
  }
  std::ostringstream out, err;
  int code = rtea::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  Result r = run(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("check reach") {
  json j = run_json({"check", "reach", "--model", "@satellite.rtea", "--x0", "50", "--time", "0"}, 0);
  CHECK(j["answer"] == true);
  CHECK(j["value"] == "0");
  CHECK(j["query"]["kind"] == "reach");

  json no = run_json(
      {"check", "reach", "--model", "@satellite.rtea", "--x0", "19", "--time", "1000000"}, 1);
  CHECK(no["answer"] == false);
  CHECK(no["value"] == "bot");
}

TEST_CASE("check cover") {
  json j = run_json({"check", "cover", "--model", "@satellite.rtea", "--x0", "50", "--time", "2",
                     "--target", "10", "--verify"},
                    0);
  CHECK(j["value"] == "10");
  CHECK(j["verify"]["value"] == "10");
  run_json({"check", "cover", "--model", "@satellite.rtea", "--x0", "50", "--time", "2",
            "--target", "21/2"},
           1);
  CHECK(run({"check", "cover", "--model", "@satellite.rtea", "--x0", "50", "--time", "2"}).code ==
        2);
}

TEST_CASE("check buchi") {
  json j = run_json({"check", "buchi", "--model", "@pump.rtea", "--x0", "3", "--time", "inf"}, 0);
  CHECK(j["answer"] == true);
  CHECK_FALSE(j.contains("note"));
  json z = run_json({"check", "buchi", "--model", "@pump.rtea", "--x0", "3", "--time", "1"}, 1);
  CHECK(z["note"] == "zeno");
  json v = run_json(
      {"check", "buchi", "--model", "@pump.rtea", "--x0", "3", "--time", "2", "--verify"}, 0);
  CHECK(v["verify"]["lasso_found"] == true);
}

TEST_CASE("eval, dump and normalize") {
  json e = run_json({"eval", "--model", "@satellite.rtea", "--x0", "20", "--time", "39/4"}, 0);
  CHECK(e["value"] == "bot");

  json d = run_json({"dump", "--model", "@satellite.rtea"}, 0);
  bool found = false;
  for (const auto& c : d["function"]["components"]) {
    for (const auto& p : c["pieces"]) {
      if (p.contains("value") && p["value"] == json{{"t", "5"}, {"x", "5/2"}, {"c", "-110"}}) {
        found = true;
      }
    }
  }
  CHECK(found);

  json s = run_json({"dump", "--model", "@star_example.rtea"}, 0);
  CHECK(s["function"]["components"].size() == 4);

  json ps = run_json({"dump", "--model", "@pump.rtea", "--what", "star"}, 0);
  REQUIRE(ps["entries"].size() == 1);
  CHECK(ps["entries"][0]["function"]["components"][0]["atoms"] == json::array());

  json n = run_json({"normalize", "0,-20,20", "2,-20,20", "5,-10,10"}, 0);
  CHECK(n["function"]["atoms"] == json({{"0", "0", "20"}, {"2", "0", "40"}, {"5", "-50", "50"}}));
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"dump", "--model", "@star_example.rtea", "--what", "star"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage and model errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "reach", "--model", "@satellite.rtea", "--x0", "abc", "--time", "0"}).code ==
        2);
  CHECK(run({"check", "reach", "--model", "@satellite.rtea", "--x0", "-1", "--time", "0"}).code ==
        2);
  CHECK(run({"check", "reach", "--model", "@missing.rtea", "--x0", "1", "--time", "0"}).code == 2);
  CHECK(run({"check", "walk", "--model", "@satellite.rtea", "--x0", "1", "--time", "0"}).code == 2);
  CHECK(run({"normalize", "1,2,3"}).code == 2);
  CHECK(run({"normalize", "1,2"}).code == 2);
  Result bad = run({"dump", "--model", "@../tests/data/bad_price.rtea"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("positive price") != std::string::npos);
}
