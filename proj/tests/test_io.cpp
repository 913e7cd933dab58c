#include <doctest.h>

#include <string>

#include "algkit/duality.hpp"
#include "algkit/generate.hpp"
#include "algkit/json_io.hpp"
#include "algkit/lattice.hpp"
#include "algkit/plonka.hpp"
#include "algkit/validate.hpp"

using namespace algkit;

namespace {

std::string fixture(const std::string& name) { return std::string(ALGKIT_FIXTURES_DIR) + "/" + name; }

template <class Fn>
std::string schema_path(Fn&& fn) {
  try {
    fn();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"kind\": \"ibsl\",\n  \"size\": 3,,\n}", "doc.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 12);
    CHECK(std::string(e.what()).starts_with("doc.json:3:"));
  }
  CHECK_THROWS_AS(read_json_file(fixture("malformed.json")), ParseError);
  CHECK_THROWS_AS(read_json_file(fixture("no-such-file.json")), ParseError);
}

TEST_CASE("schema errors point at the offending value") {
  CHECK(schema_path([] { algebra_from_json(parse_json(R"({"kind":"ibsl"})")); }) == "");
  CHECK(schema_path([] { algebra_from_json(parse_json(R"({"kind":"ibsl","size":0,"ops":{}})")); }) == "/size");
  CHECK(schema_path([] { algebra_from_json(parse_json(R"({"kind":"frob","size":1,"ops":{}})")); }) == "/kind");
  CHECK(schema_path([] {
          algebra_from_json(parse_json(R"({"kind":"sl","size":2,"ops":{"join":[[0,1],[1]]}})"));
        }).starts_with("/ops/join"));
  CHECK(schema_path([] {
          algebra_from_json(parse_json(R"({"kind":"sl","size":2,"names":["a"],"ops":{}})"));
        }) == "/names");
  CHECK(schema_path([] { document_kind(parse_json(R"({"kind":3})")); }) == "/kind");
  CHECK(schema_path([] { document_kind(parse_json("[]")); }).size() <= 1);
}

TEST_CASE("algebra documents round trip") {
  for (const char* name : {"two", "s2", "wk", "three"}) {
    const FiniteAlgebra a = builtin(name);
    const Kind k = a.has_unary(op::neg) ? Kind::Ibsl : Kind::Bisemilattice;
    const Json doc = algebra_to_json(a, k);
    CHECK(algebra_from_json(doc) == a);
    CHECK(algebra_from_json(parse_json(dump(doc))) == a);
  }
  const FiniteAlgebra wk = algebra_from_json(read_json_file(fixture("wk.json")));
  CHECK(wk == builtin("wk"));
  CHECK(wk.name(2) == "α");

  for (const char* name : {"three-gr", "wk-gr"}) {
    const FiniteAlgebra g = builtin(name);
    const Kind k = g.has_unary(op::neg) ? Kind::Igr : Kind::Gr;
    CHECK(algebra_from_json(parse_json(dump(algebra_to_json(g, k)))) == g);
  }
}

TEST_CASE("dump is stable") {
  const Json doc = algebra_to_json(builtin("two"), Kind::Ibsl);
  const std::string text = dump(doc);
  CHECK(text.back() == '\n');
  CHECK(dump(parse_json(text)) == text);
}

TEST_CASE("poset and system documents round trip") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const FinitePoset p = random_poset(rng, rng.between(1, 6));
    CHECK(poset_from_json(parse_json(dump(poset_to_json(p)))) == p);

    const DirectSystem s = random_ba_system(rng, 3, 8);
    CHECK(direct_system_from_json(parse_json(dump(direct_system_to_json(s)))) == s);

    const DirectSystem d = random_dl_system(rng, 3, 8);
    CHECK(direct_system_from_json(parse_json(dump(direct_system_to_json(d)))) == d);

    const StoneSystem st = lift_functor_dir_to_inv(s);
    const auto back = inverse_system_from_json(parse_json(dump(inverse_system_to_json(st))));
    REQUIRE(std::holds_alternative<StoneSystem>(back));
    CHECK(std::get<StoneSystem>(back) == st);

    const PriestleySystem ps = bsl_to_inverse_system(plonka_sum(d));
    const auto pback = inverse_system_from_json(parse_json(dump(inverse_system_to_json(ps))));
    REQUIRE(std::holds_alternative<PriestleySystem>(pback));
    CHECK(std::get<PriestleySystem>(pback) == ps);
  }
}

TEST_CASE("invalid systems load as parts") {
  const Json doc = read_json_file(fixture("nontransitive-system.json"));
  CHECK_THROWS_AS(direct_system_from_json(doc), InvalidSystem);
  const auto parts = direct_system_parts_from_json(doc);
  CHECK(parts.fibers.size() == 3);
  CHECK(parts.transitions.size() == 3);
  const auto report = DirectSystem::check(parts.index, parts.fiber_kind, parts.fibers, parts.transitions);
  CHECK_FALSE(report.ok());
}
