#include <catch_amalgamated.hpp>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "subgrowth/cli.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "subgrowth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = subgrowth::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SUBGROWTH_DATA_DIR) + "/" + name + ".gog"; }

}  // namespace

TEST_CASE("mu and chi") {
  auto r = run({"mu", data("s4_klein_amalgam")});
  CHECK(r.code == 0);
  CHECK(r.out == "1/4\n");
  r = run({"chi", data("triangle_d10")});
  CHECK(r.code == 0);
  CHECK(r.out == "-9/10\n");
  r = run({"mu", data("free2")});
  CHECK(r.out == "1\n");
}

TEST_CASE("json output") {
  auto r = run({"--json", "mu", data("s4_klein_amalgam")});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mu"]["num"] == "1");
  CHECK(j["mu"]["den"] == "4");

  r = run({"--json", "report", data("triangle_d10")});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["mu"]["num"] == "9");
  CHECK(j["lp"]["variables"] == 12);
  CHECK(j["vertices"].size() == 3);

  r = run({"--json", "subcount", data("modular"), "--n", "6"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["counts"][5]["subgroups"] == "22");

  r = run({"--json", "catalog", data("s3_amalgam_c2")});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).is_array());
}

TEST_CASE("report flags a mismatching expectation") {
  auto r = run({"report", data("triangle_d10")});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("mu\t9/10"));
  CHECK_THAT(r.out, ContainsSubstring("MISMATCH"));
  r = run({"report", data("s4_klein_amalgam"), "--slope", "4"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("slope diagnostic"));
  CHECK_THAT(r.out, !ContainsSubstring("MISMATCH"));
}

TEST_CASE("lp dump") {
  auto path = std::filesystem::temp_directory_path() / "subgrowth_test_dump.tsv";
  auto r = run({"report", data("s4_klein_amalgam"), "--dump-lp", path.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
}

TEST_CASE("counting commands") {
  auto r = run({"homcount", data("modular"), "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\t1\n2\t2\n3\t12\n");
  auto e = run({"homcount", data("modular"), "--n", "3", "--enumerate"});
  CHECK(e.out == r.out);
  r = run({"homcount", data("free1"), "--n", "2", "--per-type"});
  CHECK_THAT(r.out, ContainsSubstring("type\t"));
  r = run({"subcount", data("free2"), "--n", "5"});
  CHECK(r.out == "1\t1\n2\t3\n3\t13\n4\t71\n5\t461\n");
}

TEST_CASE("realize and family") {
  auto r = run({"realize", "9/10"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("predicted_mu=9/10"));
  r = run({"realize", "3/1", "--emit-gog"});
  CHECK_THAT(r.out, ContainsSubstring("edge f4 v v"));
  r = run({"family", "--p", "3", "--k", "5", "--l", "1"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("closed_form\t2/5"));
  CHECK_THAT(r.out, ContainsSubstring("agrees"));
  r = run({"family", "--p", "2", "--k", "5", "--l", "1"});
  CHECK_THAT(r.out, ContainsSubstring("DISAGREES"));
  r = run({"family", "--p", "2", "--k", "5", "--l", "1", "--alt"});
  CHECK(r.code == 1);
}

TEST_CASE("exit codes") {
  auto r = run({"mu", data("does_not_exist")});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  r = run({"--bogus", "mu", data("free1")});
  CHECK(r.code == 1);
  r = run({"realize", "-1/2"});
  CHECK(r.code == 1);
  r = run({"realize", "abc"});
  CHECK(r.code == 1);
  // unreduced targets are reduced first
  CHECK_THAT(run({"realize", "2/4"}).out, ContainsSubstring("target=1/2"));
  r = run({"homcount", data("free2"), "--n", "9"});
  CHECK(r.code == 2);
  r = run({"homcount", data("free2"), "--n", "6", "--enumerate"});
  CHECK(r.code == 2);
  r = run({"--max-group-order", "100", "mu", data("s4_klein_amalgam")});
  CHECK(r.code == 0);
  r = run({"--max-group-order", "10", "mu", data("s4_klein_amalgam")});
  CHECK(r.code == 2);
  r = run({});
  CHECK(r.code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"triangle_d10", "hnn_s3", "s4_klein_amalgam"}) {
    auto a = run({"--json", "report", data(name)});
    auto b = run({"--json", "report", data(name)});
    CHECK(a.out == b.out);
    auto c = run({"catalog", data(name)});
    auto d = run({"catalog", data(name)});
    CHECK(c.out == d.out);
  }
}
