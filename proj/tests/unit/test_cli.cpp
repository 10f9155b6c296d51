#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "concord/cli.hpp"

using namespace concord::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  CommandResult result;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  auto r = run(args, out, err);
  return {r, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "concord_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli.commands") {
  TEST_CASE("gsp-bound") {
    auto r = invoke({"gsp-bound", "T(3,5)"});
    CHECK(r.result.status == Status::ok);
    CHECK(r.result.payload["lower"] == "4");
    CHECK(r.result.payload["upper"] == "4");
    CHECK(r.out.find("lower") != std::string::npos);
  }

  TEST_CASE("alexander with fox-milnor") {
    auto r = invoke({"alexander", "T(2,3) # -T(2,3)", "--fox-milnor"});
    CHECK(r.result.status == Status::ok);
    CHECK(r.result.payload["polynomial"] == "1*t^-2 + -2*t^-1 + 3*t^0 + -2*t^1 + 1*t^2");
    CHECK(r.result.payload["fox_milnor"]["passes"] == true);
  }

  TEST_CASE("upsilon-certify writes a lower-triangular matrix") {
    auto path = scratch("ups.json");
    auto r = invoke({"upsilon-certify", "--k", "2", "--max", "6", "--json", path.string()});
    CHECK(r.result.status == Status::ok);
    auto doc = read_json(path);
    CHECK(doc["command"] == "upsilon-certify");
    CHECK(doc["status"] == "ok");
    CHECK(doc["result"]["valid"] == true);
    auto m = doc["result"]["matrix"];
    REQUIRE(m.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(m[i][i] == "1");
      for (std::size_t j = i + 1; j < 5; ++j) CHECK(m[i][j] == "0");
      for (std::size_t j = 0; j < i; ++j) CHECK(m[i][j].is_null());
    }
    CHECK_FALSE(doc["provenance"].empty());
    CHECK(doc["provenance"][0]["origin"] == "published");
  }

  TEST_CASE("every command succeeds on a representative input") {
    std::vector<std::vector<std::string>> lines{
        {"alexander", "Cable(Wh(T(2,3));2,3)"},
        {"genus", "T(3,5)"},
        {"fox-milnor", "2t - 5 + 2t^-1"},
        {"factor", "t^4 - 1"},
        {"sig-jumps", "T(2,3)", "--at", "1/2"},
        {"sig-certify", "--pair", "5,7", "--pair", "11,13", "--k", "4"},
        {"upsilon", "T(3,4)"},
        {"upsilon-obstruct", "--jprime", "3", "--n", "2"},
        {"ordered-demo", "--trials", "100"},
        {"eps-obstruct", "--label", "J_6", "--n", "3"},
        {"eps-certify", "--k", "2", "--max", "8"},
        {"family", "L", "4"},
    };
    for (const auto& line : lines) {
      CAPTURE(line.front());
      auto r = invoke(line);
      CHECK(r.result.status == Status::ok);
      CHECK(r.result.command == line.front());
      CHECK_FALSE(r.out.empty());
    }
  }

  TEST_CASE("published data is tagged") {
    auto r = invoke({"eps-obstruct", "--label", "J_6", "--n", "3"});
    REQUIRE_FALSE(r.result.provenance.empty());
    CHECK(r.result.provenance[0].origin == concord::Origin::published);
    auto user = invoke({"eps-obstruct", "--a1", "1", "--a2", "6", "--n", "3"});
    CHECK(user.result.status == Status::ok);
    REQUIRE_FALSE(user.result.provenance.empty());
    CHECK(user.result.provenance[0].origin == concord::Origin::user_supplied);
  }

  TEST_CASE("factor payload") {
    auto r = invoke({"factor", "t^2 - 2t + 3 - 2t^-1 + t^-2"});
    REQUIRE(r.result.status == Status::ok);
    REQUIRE(r.result.payload["factors"].size() == 1);
    CHECK(r.result.payload["factors"][0]["multiplicity"] == 2);
    CHECK(r.result.payload["factors"][0]["cyclotomic_index"] == 6);
  }
}

TEST_SUITE("cli.status") {
  TEST_CASE("invalid and inconclusive outcomes exit 1") {
    auto cert = invoke({"sig-certify", "--pair", "5,7", "--pair", "11,13", "--k", "12"});
    CHECK(cert.result.status == Status::invalid);
    CHECK(exit_code(cert.result.status) == 1);

    auto fm = invoke({"fox-milnor", "t^2 + 1"});
    CHECK(fm.result.status == Status::invalid);
    CHECK(fm.result.payload["error"]["kind"] == "normalization_required");

    auto boundary = invoke({"eps-obstruct", "--a1", "1", "--a2", "5", "--n", "3"});
    CHECK(boundary.result.status == Status::inconclusive);
    CHECK(exit_code(boundary.result.status) == 1);

    auto parse = invoke({"alexander", "T(2,4)"});
    CHECK(parse.result.status == Status::invalid);
    CHECK(parse.result.payload["error"]["kind"] == "validation");
    CHECK_FALSE(parse.err.empty());

    auto range = invoke({"upsilon-certify", "--k", "2", "--max", "1"});
    CHECK(range.result.status == Status::invalid);
    CHECK(range.result.payload["error"]["kind"] == "range");
  }

  TEST_CASE("usage errors exit 2") {
    for (const auto& line : std::vector<std::vector<std::string>>{
             {"frobnicate"}, {}, {"gsp-bound"}, {"gsp-bound", "T(2,3)", "--bogus"}, {"upsilon-certify", "--k", "x"},
             {"genus", "T(2,3)", "--csv", "/tmp/x.csv"}}) {
      auto r = invoke(line);
      CHECK(r.result.status == Status::error);
      CHECK(exit_code(r.result.status) == 2);
    }
  }

  TEST_CASE("help is not an error") {
    auto r = invoke({"--help"});
    CHECK(r.result.status == Status::ok);
    CHECK(r.out.find("gsp-bound") != std::string::npos);
  }

  TEST_CASE("failure document is still written") {
    auto path = scratch("fail.json");
    auto r = invoke({"fox-milnor", "t^2 + 1", "--json", path.string()});
    CHECK(r.result.status == Status::invalid);
    auto doc = read_json(path);
    CHECK(doc["status"] == "invalid");
    CHECK(doc["result"]["error"]["kind"] == "normalization_required");
  }
}

TEST_SUITE("cli.artifacts") {
  TEST_CASE("csv and svg") {
    auto csv = scratch("t34.csv");
    auto svg = scratch("t34.svg");
    auto r = invoke({"upsilon", "T(3,4)", "--csv", csv.string(), "--svg", svg.string()});
    REQUIRE(r.result.status == Status::ok);
    CHECK(read_text(csv) == "t,value\n0,0\n2/3,-2\n4/3,-2\n2,0\n");
    auto plot = read_text(svg);
    CHECK(plot.find("<svg") != std::string::npos);
    CHECK(plot.find("0.666667,2.000000") != std::string::npos);
  }

  TEST_CASE("fixed seed gives identical documents") {
    auto a = scratch("demo_a.json");
    auto b = scratch("demo_b.json");
    invoke({"ordered-demo", "--trials", "50", "--seed", "99", "--json", a.string()});
    invoke({"ordered-demo", "--trials", "50", "--seed", "99", "--json", b.string()});
    CHECK(read_text(a) == read_text(b));
  }
}
