#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superroot/cli.hpp"
#include "superroot/json_io.hpp"
#include "superroot/rootdata.hpp"

using namespace superroot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, std::string(r.out + r.err));
  return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("worked examples") {
  const auto uni = run_json({"unimodular", "--family", "p", "--n", "2", "--p", "3", "--r", "1"});
  CHECK(uni["verdict"] == false);
  CHECK(uni["odd_root_sum"] == Json::parse("[2,2]"));

  const auto dims = run_json({"dims", "--family", "q", "--n", "2", "--p", "3", "--r", "1"});
  CHECK(dims["dim_O_Gr"] == 1296);
  CHECK(dims["pbw_count"] == 1296);

  const auto dec = run_json({"decompose", "--family", "gl", "--m", "1", "--n", "1", "--p", "3", "--weight", "4,-2"});
  CHECK(dec["digits"] == Json::parse("[[1,1],[1,-1]]"));
  CHECK_FALSE(dec.contains("flatness"));
}

TEST_CASE("other verbs") {
  CHECK(run_json({"frobenius", "--family", "q", "--n", "3"})["all_frobenius_unimodular"] == true);
  CHECK(run_json({"delta", "--family", "q", "--n", "2", "--p", "3"})["delta_r"] == Json::parse("[-3,3]"));
  const auto adm = run_json({"admissible", "--family", "gl", "--m", "2", "--n", "1", "--psi-odd", "0,1,-1",
                             "--semantics", "strict"});
  CHECK(adm["ok"] == false);
  CHECK(adm["generation"] == false);
  CHECK(adm["semantics"] == "strict");
  const auto res = run_json({"restricted", "--family", "q", "--n", "2", "--p", "3", "--r", "2", "--weight=1,-2"});
  CHECK(res["verdict"] == true);
  CHECK(res["per_root"][0]["kform_value"] == -2);
  CHECK(res["per_root"][0]["bound"] == 9);
  const auto flat = run_json({"flatcheck", "--family", "q", "--n", "2", "--p", "3", "--weight", "1,1"});
  CHECK(flat["flat"] == false);
  const auto vc = run_json({"verify-commutator", "--M", "2", "--N", "2", "--degree", "6"});
  CHECK(vc["ok"] == true);
  const auto cl = run_json({"describe", "--family", "q", "--n", "2", "--weight=1,-2"});
  CHECK(cl["derived"]["clifford"]["gram"] == Json::parse("[[2,0],[0,-4]]"));
  CHECK(cl["derived"]["clifford"]["u_lambda_dim"] == 2);
  const auto p2 = run_json({"decompose", "--family", "p", "--n", "2", "--p", "3", "--weight", "4,1"});
  CHECK(p2["flatness"] == "unchecked");
}

TEST_CASE("character verbs") {
  const auto tw = run_json({"char", "--op", "twist", "--char", "1,0:2;0,1:1", "--p", "3"});
  CHECK(tw["terms"] == Json::parse(R"([{"weight":[0,3],"mult":1},{"weight":[3,0],"mult":2}])"));
  const auto st = run_json({"char", "--op", "steinberg", "--char", "1,1:1;0,0:1", "--char", "1,-1:1", "--p", "3"});
  CHECK(st["terms"].size() == 2);
  const auto path = temp_file("superroot_char.json", R"({"terms":[{"mult":4,"weight":[1,2]}]})");
  const auto shown = run_json({"char", "--op", "show", "--char-file", path.string()});
  CHECK(shown["terms"][0]["mult"] == 4);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  SUBCASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"dims", "--family", "q", "--n", "2", "--p", "3", "--bogus"}).code == 2);
    CHECK(run({"dims", "--family", "nope", "--n", "2", "--p", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
  SUBCASE("domain") {
    const auto r = run({"--json", "dims", "--family", "q", "--n", "2", "--p", "4"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["error"]["kind"] == "parameter");
    const auto order = run({"--json", "describe", "--family", "gl", "--m", "1", "--n", "1", "--order", "1,1"});
    CHECK(order.code == 1);
    CHECK(Json::parse(order.out)["error"]["kind"] == "invalid-order");
    const auto text = run({"restricted", "--family", "q", "--n", "2", "--p", "3", "--weight", "1,1"});
    CHECK(text.code == 1);
    CHECK(text.err.find("precondition") != std::string::npos);
    const auto bad = temp_file("superroot_bad.json", "{ not json");
    CHECK(run({"describe", "--family", "file", "--file", bad.string()}).code == 1);
    std::filesystem::remove(bad);
  }
}

TEST_CASE("datum round trip through a file") {
  for (const auto& d : {build_gl(2, 1), build_q(3), build_p(2), build_semidirect(build_reductive_gl(3),
                                                                                {Weight{1, 0, 0}, Weight{0, 0, 1},
                                                                                 Weight{0, 0, 0}})}) {
    const auto emitted = run_json({"describe", "--family", "file", "--file",
                                   temp_file("superroot_rt.json", datum_to_json(d).dump()).string()});
    CHECK(datum_from_json(emitted) == d);
    const auto again = run_json({"describe", "--family", "file", "--file",
                                 temp_file("superroot_rt2.json", emitted.dump()).string()});
    CHECK(again == emitted);
  }
  const auto builtin = run_json({"describe", "--family", "q", "--n", "2"});
  CHECK(datum_from_json(builtin) == build_q(2));
}

TEST_CASE("output is stable under key order") {
  const auto d = build_gl(1, 2);
  const Json j = datum_to_json(d);
  nlohmann::json reversed;
  for (auto it = j.rbegin(); it != j.rend(); ++it) reversed[it.key()] = *it;
  const auto a = run({"--json", "describe", "--family", "file", "--file",
                      temp_file("superroot_a.json", j.dump()).string()});
  const auto b = run({"--json", "describe", "--family", "file", "--file",
                      temp_file("superroot_b.json", reversed.dump(2)).string()});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("deterministic bytes") {
  const std::vector<std::string> args{"describe", "--family", "q", "--n", "3", "--weight", "3,1,-1"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("search radius from the environment") {
  const std::vector<std::string> args{"--json", "decompose", "--family", "q", "--n", "2", "--p", "3", "--weight",
                                      "3,3"};
  ::setenv("SUPERROOT_SEARCH_RADIUS", "0", 1);
  const auto narrow = run(args);
  ::unsetenv("SUPERROOT_SEARCH_RADIUS");
  CHECK(narrow.code == 1);
  const auto err = Json::parse(narrow.out)["error"];
  CHECK(err["kind"] == "decomposition-failure");
  CHECK(err["frontier"] == Json::parse(R"x(["(3,3)"])x"));
  CHECK(run(args).code == 0);
  CHECK(run({"--json", "decompose", "--family", "q", "--n", "2", "--p", "3", "--weight", "3,3", "--radius", "0"})
            .code == 1);
}

TEST_CASE("large integers are strings") {
  const auto r = run_json({"dims", "--family", "gl", "--m", "3", "--n", "3", "--p", "5", "--r", "2"});
  CHECK(r["dim_O_Gr"].is_string());
  CHECK(r["dim_O_Gr"] == r["pbw_count"]);
}
