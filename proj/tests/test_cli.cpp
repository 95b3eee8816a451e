#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sldrep/cli.hpp"
#include "sldrep/report.hpp"

using namespace sldrep;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  Json report;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.err = err.str();
  if (!out.str().empty() && out.str().front() == '{') o.report = Json::parse(out.str());
  return o;
}

std::string fixture(const std::string& name) { return std::string(SLDREP_FIXTURE_DIR) + "/" + name; }

/// True if any number anywhere in j is a float.
bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& x : j) {
      if (has_float(x)) return true;
    }
  }
  return false;
}

const char* kKeys[] = {"command", "error",        "wellformed", "b1",     "b2",    "components",
                       "checks",  "obstructions", "search",     "bundle", "canon", "diagnostics"};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check REF-1") {
    auto o = run({"check", fixture("ref1.sld")});
    CHECK(o.code == 0);
    CHECK(o.report["wellformed"] == true);
    CHECK(o.report["b1"] == 1);
    CHECK(o.report["b2"] == 4);
    for (const auto* name : {"genus0", "selfint", "relators", "sw"}) CHECK(o.report["checks"][name]["pass"] == true);
    CHECK(o.report["obstructions"]["psq"] == 0);
    CHECK(o.report["obstructions"]["verdict"] == "pass");
    CHECK(o.report["search"].is_null());
    CHECK(o.err.empty());
  }

  TEST_CASE("check failures and malformed input") {
    CHECK(run({"check", fixture("interleaved.sld")}).code == 1);
    CHECK(run({"check", fixture("lone_hopf.sld")}).code == 1);
    auto missing = run({"check", fixture("does_not_exist.sld")});
    CHECK(missing.code == 2);
    CHECK(missing.report["error"]["kind"] == "io");

    auto dir = std::filesystem::temp_directory_path() / "sldrep_cli_test";
    std::filesystem::create_directories(dir);
    auto bad = dir / "bad.sld";
    std::ofstream(bad) << "circle c\nknot k\n";
    auto parsed = run({"check", bad.string()});
    CHECK(parsed.code == 2);
    CHECK(parsed.report["error"]["line"] == 2);
    CHECK(parsed.report["error"]["column"] == 1);
    auto collide = dir / "collide.sld";
    std::ofstream(collide) << "circle c1\narc a1 from c1 slot 0 to c1 slot 0 word\n";
    auto c = run({"check", collide.string()});
    CHECK(c.code == 2);
    CHECK(c.report["wellformed"] == false);
    // Each diagnostic line on stderr is a JSON object.
    std::istringstream lines(c.err);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      CHECK(Json::parse(line).contains("diagnostic"));
      ++count;
    }
    CHECK(count >= 1);
  }

  TEST_CASE("search REF-1") {
    auto o = run({"search", fixture("ref1_undecorated.sld"), "--threads", "2"});
    CHECK(o.code == 0);
    CHECK(o.report["search"]["raw_solutions"].get<int>() > 0);
    CHECK(o.report["search"]["classes"] == 1);
    CHECK(o.report["search"]["group"] == "octahedral");
    auto none = run({"search", fixture("ref1_undecorated.sld"), "--dedup", "none"});
    CHECK(none.report["search"]["classes"] == 24);
    CHECK(run({"search", fixture("lone_hopf.sld")}).code == 1);
    CHECK(run({"search", fixture("ref1.sld"), "--group", "cubical"}).code == 2);
    CHECK(run({"search", fixture("ref1.sld"), "--dedup", "some"}).code == 2);
    auto tet = run({"search", fixture("ref1_undecorated.sld"), "--group", "tetrahedral"});
    CHECK(tet.report["search"]["group_order"] == 12);
  }

  TEST_CASE("search cache") {
    auto dir = std::filesystem::temp_directory_path() / "sldrep_cache_test";
    std::filesystem::remove_all(dir);
    auto first = run({"search", fixture("ref1_undecorated.sld"), "--cache-dir", dir.string()});
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    auto second = run({"search", fixture("ref1_undecorated.sld"), "--cache-dir", dir.string()});
    CHECK(first.report == second.report);
    CHECK(first.code == second.code);
    // The decorated file describes the same diagram, so it hits the same entry.
    run({"search", fixture("ref1.sld"), "--cache-dir", dir.string()});
    files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
  }

  TEST_CASE("obstruct") {
    auto z = run({"obstruct", "--summands", "1,1,1,1"});
    CHECK(z.code == 1);
    CHECK(z.report["obstructions"]["verdict"] == "fail");
    CHECK(run({"obstruct", "--b2", "8"}).code == 0);
    CHECK(run({"obstruct", "--b2", "6"}).code == 1);
    CHECK(run({"obstruct", "--summands", "4,8"}).code == 0);
    CHECK(run({"obstruct", "--b2", "5", "--summands", "4,8"}).code == 2);
    CHECK(run({"obstruct"}).code == 2);
    CHECK(run({"obstruct", "--b2", "0"}).code == 2);
  }

  TEST_CASE("bundle") {
    auto o = run({"bundle", "--b1", "1", "--b2", "4", "--c2", "-1"});
    CHECK(o.code == 0);
    CHECK(o.report["bundle"]["flat"] == true);
    CHECK(o.report["bundle"]["expected_dimension"] == 0);
    CHECK(o.report["bundle"]["energy"] == "0");
    auto q = run({"bundle", "--b1", "0", "--b2", "3", "--c2", "0"});
    CHECK(q.report["bundle"]["energy"] == "3/4");
    CHECK(q.report["bundle"]["compact"] == true);
    CHECK(run({"bundle", "--b1", "1", "--b2", "4"}).code == 2);
  }

  TEST_CASE("canon") {
    auto o = run({"canon", fixture("ref1.sld")});
    CHECK(o.code == 0);
    CHECK(o.report["canon"]["key"].is_string());
    auto other = run({"canon", fixture("ref1_double.sld")});
    CHECK(other.code == 0);
    CHECK(run({"canon", fixture("ref1_undecorated.sld")}).code == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    std::ostringstream out, err;
    CHECK(cli::run(std::vector<std::string>{"--help"}, out, err) == 0);
    CHECK(out.str().find("search") != std::string::npos);
  }

  TEST_CASE("reports share one schema and hold no floats") {
    std::vector<std::vector<std::string>> commands = {
        {"check", fixture("ref1.sld")},          {"search", fixture("tree.sld")},
        {"obstruct", "--summands", "1,1,1,1"},   {"bundle", "--b1", "2", "--b2", "5", "--c2", "3"},
        {"canon", fixture("ref1.sld")},          {"check", fixture("missing.sld")}};
    for (const auto& args : commands) {
      auto o = run(args);
      CAPTURE(args[0]);
      for (const auto* k : kKeys) CHECK(o.report.contains(k));
      CHECK(o.report.size() == std::size(kKeys));
      CHECK_FALSE(has_float(o.report));
      CHECK(report::exit_code(report::Json::parse(o.report.dump())) == o.code);
    }
  }

  TEST_CASE("fnv1a reference values") {
    CHECK(report::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(report::fnv1a_hex("a") == "af63dc4c8601ec8c");
  }
}
