#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "orbimirror/cli.hpp"
#include "orbimirror/serialize.hpp"

using namespace orbimirror;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weights parsing") {
  CHECK(parse_weights("1,2,2").mu() == 5);
  CHECK(parse_weights("7").n() == 0);
  for (const char* bad : {"", "0,2", "1,,2", "1.5,2", "a", "1,-2", "1,2,", "1000001"})
    CHECK_THROWS_AS(parse_weights(bad), std::invalid_argument);
  CHECK(parse_weights("1000000").mu() == 1000000);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"cup", "--weights", "0,2"}).code == kExitInput);
  CHECK(cli({"frobnicate", "--weights", "1,2"}).code == kExitInput);
  CHECK(cli({"cup"}).code == kExitInput);
  CHECK(cli({"basis", "--weights", "1,2", "--format", "xml"}).code == kExitInput);
  CHECK(cli({"reconstruct", "--weights", "1,1", "--max-length", "17"}).code == kExitInput);
  CHECK(cli({"reconstruct", "--weights", "1,1", "--max-length", "2"}).code == kExitInput);
  CHECK(cli({"basis", "--weights", "40,30"}).code == kExitInput);
  CHECK(cli({"basis", "--weights", "40,30", "--unsafe-large"}).code == kExitOk);
  CHECK(cli({"smallqc", "--weights", "3"}).code == kExitInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("basis output") {
  const auto r = cli({"basis", "--weights", "1,2"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["degree"] == "0");
  CHECK(j[1]["degree"] == "2");
  CHECK(j[2]["degree"] == "1");
  CHECK(j[2]["gamma"] == "1/2");
  CHECK(j[2]["d"] == 0);
  CHECK(r.out.rfind("[\n  {\n    \"gamma\": \"0\",\n    \"d\": 0,", 0) == 0);

  const auto tsv = cli({"basis", "--weights", "1,2", "--format", "tsv"});
  CHECK(tsv.out == "gamma\td\tdegree\txi\n0\t0\t0\t0\n0\t1\t2\t1\n1/2\t0\t1\t2\n");
}

TEST_CASE("cup output") {
  const auto r = cli({"cup", "--weights", "1,2,2,3,3,3", "--format", "tsv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("1/3\t0\t1/3\t0\t4\t2/3\t2\n") != std::string::npos);
  CHECK(r.out.find("1/2\t0\t1/2\t0\t27\t0\t4\n") != std::string::npos);
  CHECK(r.out.find("1/3\t0\t1/2\t0\t0\t0\t0\n") != std::string::npos);

  const auto j = nlohmann::json::parse(cli({"cup", "--weights", "1,2"}).out);
  REQUIRE(j.size() == 9);
  CHECK(j[0]["out"] == nlohmann::json{{"gamma", "0"}, {"d", 0}});
  CHECK(j[5]["out"].is_null());
  CHECK(j[5]["coeff"] == "0");
}

TEST_CASE("pairing, smallqc and bside output") {
  const auto pj = nlohmann::json::parse(cli({"pairing", "--weights", "1,2"}).out);
  CHECK(pj["matrix"][0][1] == "1/2");
  CHECK(pj["matrix"][2][2] == "1/2");

  const auto qj = nlohmann::json::parse(cli({"smallqc", "--weights", "1,2"}).out);
  CHECK(qj["hyperplane_product"][1]["product"][0]["coeff"][0] == nlohmann::json{{"q", "1/2"}, {"c", "1/2"}});
  CHECK(qj["a0"][1][0] == "3");

  const auto bj = nlohmann::json::parse(cli({"bside", "--weights", "1,2"}).out);
  CHECK(bj["char_poly"] == nlohmann::json{"-27/4", "0", "0", "1"});
  CHECK(bj["spectrum_ok"] == true);
  CHECK(bj["omega"][2]["u"] == nlohmann::json{1, 1});

  const auto tsv = cli({"bside", "--weights", "1,2", "--format", "tsv"}).out;
  CHECK(tsv.rfind("# omega\nk\ts\tsigma\tu_exponent\tw_power\n", 0) == 0);
}

TEST_CASE("mirror and selftest report PASS") {
  const auto r = cli({"mirror", "--weights", "1,2,2,3,3,3"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["classical"]["status"] == "PASS");
  CHECK(j["quantum"]["status"] == "PASS");

  const auto s = cli({"selftest", "--weights", "1,2"});
  CHECK(s.code == kExitOk);
  CHECK(nlohmann::json::parse(s.out)["status"] == "PASS");
}

TEST_CASE("reconstruct output") {
  const auto r = cli({"reconstruct", "--weights", "1,1,1", "--max-length", "11"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& row : j)
    if (row["alpha"] == nlohmann::json{0, 0, 8}) {
      found = true;
      CHECK(row["A"] == "12");
    }
  CHECK(found);
  const auto tsv = cli({"reconstruct", "--weights", "1,1", "--max-length", "4", "--format", "tsv"});
  CHECK(tsv.out == "alpha\tA\n0,3\t1\n2,1\t1\n0,4\t1\n");
}

TEST_CASE("output is deterministic and can go to a file") {
  CHECK(cli({"bside", "--weights", "2,3,5"}).out == cli({"bside", "--weights", "2,3,5"}).out);
  const auto path = std::filesystem::temp_directory_path() / "orbimirror_cli_test.json";
  const auto r = cli({"basis", "--weights", "1,2", "--output", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == cli({"basis", "--weights", "1,2"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("mu cap from the environment") {
  ::setenv("ORBIMIRROR_MAX_MU", "4", 1);
  CHECK(cli({"basis", "--weights", "1,2,2"}).code == kExitInput);
  CHECK(cli({"basis", "--weights", "1,2"}).code == kExitOk);
  ::setenv("ORBIMIRROR_MAX_MU", "nope", 1);
  CHECK(cli({"basis", "--weights", "1,2"}).code == kExitInput);
  ::unsetenv("ORBIMIRROR_MAX_MU");
}
