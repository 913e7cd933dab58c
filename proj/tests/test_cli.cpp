#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/cli.hpp"
#include "algkit/json_io.hpp"
#include "algkit/validate.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result algctl(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = algkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ALGKIT_FIXTURES_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("algctl-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(algctl({"check", fixture("wk.json")}).code == algkit::cli::kPass);
  CHECK(algctl({"check", "two"}).code == algkit::cli::kPass);
  CHECK(algctl({"check", fixture("broken-ibsl.json")}).code == algkit::cli::kFail);
  CHECK(algctl({"check", fixture("nontransitive-system.json")}).code == algkit::cli::kFail);
  CHECK(algctl({"check", fixture("malformed.json")}).code == algkit::cli::kInputError);
  CHECK(algctl({"check", fixture("missing.json")}).code == algkit::cli::kInputError);
  CHECK(algctl({"frobnicate"}).code == algkit::cli::kInputError);
  CHECK(algctl({"gen", "--size", "0"}).code == algkit::cli::kInputError);
  CHECK(algctl({"--help"}).code == algkit::cli::kPass);
  const auto schema = temp_file("schema.json", R"({"kind":"ibsl","size":"three"})");
  const Result r = algctl({"check", schema});
  CHECK(r.code == algkit::cli::kInputError);
  CHECK(r.err.find("/size") != std::string::npos);
}

TEST_CASE("witnesses in check output") {
  const Result broken = algctl({"check", fixture("broken-ibsl.json")});
  CHECK(broken.out.find("FAIL  I6") != std::string::npos);
  CHECK(broken.out.find("[x=1, y=0]") != std::string::npos);
  CHECK(broken.out.find("result: fail") != std::string::npos);

  const Result sys = algctl({"check", fixture("nontransitive-system.json")});
  CHECK(sys.out.find("[i=0, j=1, k=2]") != std::string::npos);

  const Result malformed = algctl({"check", fixture("malformed.json")});
  CHECK(malformed.err.find("malformed.json:4:31") != std::string::npos);
}

TEST_CASE("json report") {
  const Result r = algctl({"--format", "json", "check", fixture("broken-ibsl.json")});
  CHECK(r.code == algkit::cli::kFail);
  const auto doc = algkit::parse_json(r.out);
  CHECK(doc["kind"] == "ibsl");
  CHECK(doc["size"] == 2);
  CHECK(doc["ok"] == false);
  CHECK_FALSE(doc.contains("timing_ms"));
  const auto timed = algkit::parse_json(algctl({"--format", "json", "--timing", "check", "wk"}).out);
  CHECK(timed.contains("timing_ms"));
  CHECK(timed["ok"] == true);
}

TEST_CASE("hom counts") {
  CHECK(algctl({"hom", "three", "three", "--count"}).out == "6\n");
  for (const char* a : {"two", "s2", "wk"})
    for (const char* b : {"two", "s2", "wk"}) {
      const auto expected = oracle::homs(algkit::builtin(a), algkit::builtin(b), oracle::ibsl).size();
      CHECK(algctl({"hom", a, b, "--count"}).out == std::to_string(expected) + "\n");
    }
  const Result listed = algctl({"hom", "three", "three", "--list"});
  CHECK(listed.code == algkit::cli::kPass);
  CHECK(algctl({"hom", "three", "three", "--count", "--list"}).code == algkit::cli::kInputError);
}

TEST_CASE("roundtrip and hasse goldens") {
  const Result rt = algctl({"roundtrip", fixture("wk.json")});
  CHECK(rt.code == algkit::cli::kPass);
  CHECK(rt.out.find("result: pass") != std::string::npos);

  const Result meet = algctl({"hasse", "wk", "--order", "meet"});
  CHECK(meet.code == algkit::cli::kPass);
  CHECK(meet.out.starts_with("digraph"));

  const auto path = (std::filesystem::temp_directory_path() / "algctl-test-hasse.dot").string();
  std::remove(path.c_str());
  CHECK(algctl({"hasse", "three", "-o", path}).code == algkit::cli::kPass);
  CHECK(std::filesystem::exists(path));
}

TEST_CASE("gen is deterministic") {
  for (const char* kind : {"ibsl", "bsl", "direct-system", "dl-system"}) {
    const Result a = algctl({"gen", "--kind", kind, "--seed", "17"});
    const Result b = algctl({"gen", "--kind", kind, "--seed", "17"});
    const Result c = algctl({"gen", "--kind", kind, "--seed", "18"});
    CHECK(a.code == algkit::cli::kPass);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
  }
}

TEST_CASE("emitted documents load again") {
  std::vector<std::string> docs;
  for (const char* kind : {"ibsl", "bsl", "direct-system", "dl-system"})
    for (const char* seed : {"1", "2", "3"}) docs.push_back(algctl({"gen", "--kind", kind, "--seed", seed}).out);
  for (const char* b : {"two", "s2", "wk", "three", "three-gr", "wk-gr"}) docs.push_back(algctl({"dual", b}).out);
  docs.push_back(algctl({"plonka", "decompose", "wk"}).out);
  docs.push_back(algctl({"plonka", "decompose", "three"}).out);

  int n = 0;
  for (const auto& text : docs) {
    REQUIRE_FALSE(text.empty());
    const auto path = temp_file("doc" + std::to_string(n++) + ".json", text);
    const Result r = algctl({"check", path});
    INFO(text);
    CHECK(r.code == algkit::cli::kPass);
    if (algkit::document_kind(algkit::parse_json(text)) == "direct-system") {
      const Result sum = algctl({"plonka", "sum", path});
      CHECK(sum.code == algkit::cli::kPass);
      CHECK(algctl({"check", temp_file("sum.json", sum.out)}).code == algkit::cli::kPass);
    }
  }
}
