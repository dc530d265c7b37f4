#include <doctest.h>

#include <sstream>

#include "k3sesh/cli.hpp"
#include "k3sesh/serialize.hpp"

using namespace k3sesh;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "k3sesh");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table --degree 8 --json") {
  const auto r = run({"table", "--degree", "8", "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["value"] == "8/3");
  CHECK(j[1]["value"] == "5/2");
  CHECK(j[2]["value"] == "2");
  CHECK(j[0]["case_label"] == "b-i");
}

TEST_CASE("expected --l2-max 100 --n-max 10") {
  const auto r = run({"expected", "--l2-max", "100", "--n-max", "10"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);
  CHECK(r.out.find("    24    1    5") != std::string::npos);
}

TEST_CASE("analyze degree 6 with a degree-3 pencil lattice") {
  const auto r = run({"analyze", "--degree", "6", "--gram", "6 3; 3 0", "--very-ample", "--no-lines", "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["value"] == "3/2");
  CHECK(j["case_label"] == "a-ii");

  const auto text = run({"analyze", "--degree", "6", "--gram", "6 3; 3 0", "--very-ample", "--no-lines"});
  CHECK(text.out.find("3/2") != std::string::npos);
  CHECK(text.out.find("a-ii") != std::string::npos);
}

TEST_CASE("JSON output formatting") {
  const auto r = run({"analyze", "--degree", "8", "--gram", "8 5; 5 0", "--very-ample", "--no-lines",
                      "--quadrics-only", "true", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"value\":\"5/2\"") != std::string::npos);
  // keys are sorted
  CHECK(r.out.find("\"case_label\"") < r.out.find("\"certificates\""));
  CHECK(r.out.find("\"survivors\"") < r.out.find("\"value\""));

  SeshadriOutcome empty;
  empty.value = ExactReal(Rational(8, 3));
  const auto dumped = Json(empty).dump();
  CHECK(dumped.find("\"survivors\":[]") != std::string::npos);
  CHECK(dumped.find("\"value\":\"8/3\"") != std::string::npos);
}

TEST_CASE("exclude prints the auxiliary divisor sentences") {
  const auto r = run({"exclude", "--degree", "8", "--very-ample", "--no-lines", "--quadrics-only", "true"});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("(8,21,54)");
  REQUIRE(pos != std::string::npos);
  const auto line = r.out.substr(pos, r.out.find('\n', pos) - pos);
  CHECK(line.find("(0,3)") != std::string::npos);
  CHECK(line.find("Set D:=3L−C") != std::string::npos);
  CHECK(r.out.find("survivors     (1,2,-2) (2,4,0) (2,5,0)") != std::string::npos);
}

TEST_CASE("candidates and lattice subcommands") {
  auto r = run({"candidates", "--degree", "6", "--eps-max", "2", "--skip-m1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).get<std::vector<CandidateTriple>>() ==
        std::vector<CandidateTriple>{{2, 1, 0}, {2, 2, 0}, {2, 3, 0}, {3, 5, 4}});

  r = run({"lattice", "--gram", "8 5; 5 0", "--max-degree", "8", "--json"});
  REQUIRE(r.code == 0);
  const auto s = Json::parse(r.out).get<LatticeScanResult>();
  CHECK(s.box_radius == 5);
  CHECK(s.has_isotropic_of_degree(5));
  CHECK(s.has_minus_two_of_degree(3));

  r = run({"dichotomy", "--degree", "12", "--json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["matches_expected"] == true);
}

TEST_CASE("exit codes") {
  auto r = run({"table", "--degree", "7"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("even") != std::string::npos);

  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"table", "--degree", "10"}).code == cli::kExitUsage);
  CHECK(run({"candidates", "--degree", "8", "--eps-max", "3"}).code == cli::kExitUsage);
  CHECK(run({"lattice", "--gram", "4 1; 1 4"}).code == cli::kExitUsage);

  r = run({"analyze", "--degree", "8", "--very-ample", "--no-lines", "--has-line"});
  CHECK(r.code == cli::kExitInconsistent);
  CHECK(run({"analyze", "--degree", "8", "--quadrics-only", "true"}).code == cli::kExitInconsistent);

  CHECK(run({"lattice", "--gram", "2000000000000 0; 0 0"}).code == cli::kExitOverflow);
  CHECK(run({"analyze", "--degree", "4000000000000"}).code == cli::kExitOverflow);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("property: identical argv gives identical bytes, and JSON round-trips") {
  const std::vector<std::vector<const char*>> argvs = {
      {"analyze", "--degree", "8", "--very-ample", "--no-lines", "--quadrics-only", "true", "--json"},
      {"analyze", "--degree", "8", "--gram", "8 2; 2 -2", "--very-ample", "--no-lines", "--quadrics-only", "true",
       "--json"},
      {"analyze", "--degree", "12", "--very-ample", "--no-lines", "--json"},
      {"analyze", "--degree", "4", "--json"},
      {"analyze", "--degree", "16", "--picard-rank-one", "--very-ample", "--json"},
  };
  for (const auto& args : argvs) {
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto parsed = Json::parse(a.out).get<SeshadriOutcome>();
    CHECK(Json(parsed).dump() + "\n" == a.out);
    CHECK(Json::parse(Json(parsed).dump()).get<SeshadriOutcome>() == parsed);
  }
  const auto t = run({"table", "--degree", "6", "--json"});
  const auto rows = Json::parse(t.out).get<std::vector<TheoremCase>>();
  CHECK(Json(rows).dump() + "\n" == t.out);
}
