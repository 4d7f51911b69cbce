#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "igusa/cli.hpp"
#include "igusa/errors.hpp"
#include "igusa/json_io.hpp"

using namespace igusa;

namespace {

const std::filesystem::path kData = IGUSA_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args) {
  const Result r = cli(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

std::string data(const std::string& rel) { return (kData / rel).string(); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("igusa_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("model JSON round trip") {
  const GlobalModel m = load_global_model(data("models/x2my3_p3.json"));
  CHECK(m.cells.size() == 11);
  const GlobalModel again = parse_global_model(to_json(m));
  CHECK(to_json(again) == to_json(m));
  CHECK(assemble_zeta(again) == assemble_zeta(m));

  const CellMeasureModel c = load_cell_measure_model(data("measure/planted_a.json"));
  CHECK(to_json(parse_cell_measure_model(to_json(c))) == to_json(c));
}

TEST_CASE("schema violations") {
  Json j = read_json_file(data("models/x_p3.json"));
  j["extra"] = 1;
  CHECK_THROWS_AS(parse_global_model(j), SchemaError);
  j = read_json_file(data("models/x_p3.json"));
  j["schemaVersion"] = 2;
  CHECK_THROWS_AS(parse_global_model(j), SchemaError);
  j = read_json_file(data("models/x_p3.json"));
  j["cells"][0]["axes"][0] = Json{{"divisor", "E"}, {"unit", true}};
  CHECK_THROWS_AS(parse_global_model(j), SchemaError);
  j = read_json_file(data("x.json"));
  j["terms"][0][1] = Json::array({1, 2});
  CHECK_THROWS_AS(parse_polynomial(j), SchemaError);
  j = read_json_file(data("measure/planted_a.json"));
  j["cells"][0]["nu"] = "1/0";
  CHECK_THROWS_AS(parse_cell_measure_model(j), SchemaError);
  CHECK_THROWS_AS(read_json_file(write_temp("broken.json", "{\"schemaVersion\": ")), SchemaError);
}

TEST_CASE("cli: zeta check on the cusp") {
  const Json r = cli_json({"zeta", "check", "--poly", data("x2my3.json"), "--p", "3", "--kmax", "5"});
  CHECK(r["match"] == true);
  CHECK(r["order"] == 4);
  const Json naive =
      cli_json({"zeta", "check", "--poly", data("x2my3.json"), "--p", "3", "--kmax", "5", "--method", "naive"});
  CHECK(naive["counts"] == r["counts"]);
}

TEST_CASE("cli: rational output") {
  const Result r = cli({"zeta", "rational", "--model", data("models/b_q3.json"), "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\frac{2}{3 - t}\n");
  const Json v = cli_json({"zeta", "rational", "--poly", data("x.json"), "--p", "5", "--tau", "1"});
  CHECK(v["value"] == "1");
  const Result pole = cli({"zeta", "rational", "--model", data("models/b_q3.json"), "--tau", "3"});
  CHECK(pole.code == 4);
}

TEST_CASE("cli: series") {
  const Json s = cli_json({"zeta", "series", "--poly", data("x.json"), "--p", "3", "--kmax", "3"});
  CHECK(s["series"]["coeffs"] == Json::array({"2/3", "2/9", "2/27"}));
  const Json g = cli_json({"zeta", "series", "--points", data("points/linear_q3.json"), "--kmax", "4"});
  CHECK(g["normAtZero"] == "1/3");
  CHECK(g["normAtInfinity"] == "0");
}

TEST_CASE("cli: thresholds and q0") {
  const Json t = cli_json({"threshold", "--model", data("models/x2my3_p5.json")});
  CHECK(t["threshold"] == "5/6");
  CHECK(t["klt"] == true);
  const Json q = cli_json({"q0", "--betti", "4", "--dim", "1"});
  CHECK(q["q0"] == 14);
  CHECK(q["verifiedWindow"] == Json::array({14, 214}));
  const Json pp = cli_json({"q0", "--betti", "4", "--prime-power"});
  CHECK(pp["primePowerQ0"] == 16);
  CHECK(cli({"q0", "--betti", "4", "--dim", "2"}).code == 1);
}

TEST_CASE("cli: norm geometry") {
  const Json k = cli_json({"kequiv", "compare", "--model-a", data("measure/planted_a.json"), "--model-b",
                           data("measure/planted_b.json"), "--s", "2", "--r", "1"});
  CHECK(k["isometry"] == true);
  CHECK(k["proportional"] == true);
  CHECK(k["jacobianRatio"] == "q^1");
  CHECK(k["multiplicities"]["E"] == Json::array({3, 2}));
  const Json j = cli_json({"jacobian", "recover", "--model", data("measure/planted_a.json"), "--s", "2"});
  CHECK(j["jacobian"]["c0"] == "1");
  CHECK(j["jacobian"]["c3"] == "q^-8");
  CHECK(cli({"jacobian", "recover", "--model", data("measure/planted_a.json"), "--s", "1"}).code == 1);
  const Json n = cli_json({"norms", "reconstruct", "--data", data("norms/two_norms_q2.json"), "--tau", "1"});
  CHECK(n["exponents"]["v"] == 2);
  CHECK(n["value"] == "7/8");
}

TEST_CASE("cli: exit codes and determinism") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"zeta"}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"zeta", "check", "--poly", write_temp("bad.json", "{\"schemaVersion\":1,\"n\":1,\"terms\":[],\"x\":0}"),
             "--p", "3"})
            .code == 2);
  CHECK(cli({"zeta", "check", "--poly", data("xy.json"), "--p", "5", "--kmax", "6", "--method", "naive", "--guard",
             "1000"})
            .code == 3);
  CHECK(cli({"zeta", "check", "--poly", data("xy.json"), "--p", "7", "--kmax", "2"}).code == 2);
  const std::vector<std::string> args = {"zeta", "check", "--poly", data("x2py2m1.json"), "--p", "2", "--kmax", "6"};
  CHECK(cli(args).out == cli(args).out);
}
