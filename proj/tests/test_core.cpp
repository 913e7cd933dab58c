#include <doctest.h>
#include <algorithm>

#include "algkit/errors.hpp"
#include "algkit/homs.hpp"
#include "algkit/validate.hpp"
#include "oracles.hpp"

using namespace algkit;

namespace {

FiniteAlgebra product_ba() {
  FiniteAlgebra a(4, {"0", "a", "b", "1"});
  a.set_binary(op::join, {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3})
      .set_binary(op::meet, {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3})
      .set_unary(op::neg, {3, 2, 1, 0})
      .set_constant(op::zero, 0)
      .set_constant(op::one, 3);
  return a;
}

FiniteAlgebra one_element() {
  FiniteAlgebra a(1);
  a.set_binary(op::join, {0}).set_binary(op::meet, {0}).set_unary(op::neg, {0});
  a.set_constant(op::zero, 0).set_constant(op::one, 0);
  return a;
}

std::vector<int> leq_pairs(const FinitePoset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) out.push_back(p.leq(x, y) ? 1 : 0);
  return out;
}

}  // namespace

TEST_CASE("finite algebra tables") {
  FiniteAlgebra a(2);
  CHECK_THROWS_AS(a.set_binary(op::join, {0, 1, 2, 0}), InvalidAlgebra);
  CHECK_THROWS_AS(a.set_binary(op::join, {0, 1}), InvalidAlgebra);
  a.set_binary(op::join, {0, 1, 1, 1});
  CHECK_THROWS_AS(a.set_unary(op::join, {0, 1}), InvalidAlgebra);
  CHECK_THROWS_AS(a.unary_map(op::neg), MissingOperation);
  CHECK(a.apply(op::join, 0, 1) == 1);
  CHECK(a.name(1) == "1");
  CHECK_THROWS(FiniteAlgebra(0));
}

TEST_CASE("relabel transports every table") {
  const FiniteAlgebra wk = builtin("wk");
  const Map perm{2, 0, 1};
  const FiniteAlgebra r = relabel(wk, perm);
  for (int x = 0; x < 3; ++x) {
    CHECK(r.apply(op::neg, perm[x]) == perm[wk.apply(op::neg, x)]);
    for (int y = 0; y < 3; ++y) CHECK(r.apply(op::join, perm[x], perm[y]) == perm[wk.apply(op::join, x, y)]);
  }
  CHECK(oracle::is_hom(wk, r, perm, oracle::ibsl));
}

TEST_CASE("built-in weak Kleene tables") {
  const FiniteAlgebra three = builtin("three");
  const int a = 2;
  for (int x = 0; x < 3; ++x) {
    CHECK(three.apply(op::join, a, x) == a);
    CHECK(three.apply(op::join, x, a) == a);
    CHECK(three.apply(op::meet, a, x) == a);
  }
  CHECK(three.apply(op::meet, 0, a) == a);
  CHECK(three.apply(op::join, 0, 1) == 1);
  CHECK(three.apply(op::meet, 0, 1) == 0);

  const FiniteAlgebra wk = builtin("wk");
  CHECK(wk.apply(op::neg, 1) == 0);
  CHECK(wk.apply(op::neg, 0) == 1);
  CHECK(wk.apply(op::neg, a) == a);

  const FiniteAlgebra two = builtin("two");
  CHECK(two.apply(op::neg, 0) == 1);
  CHECK(two.apply(op::join, 0, 1) == 1);
  CHECK_THROWS_AS(builtin("four"), UnknownBuiltin);
}

TEST_CASE("validate_bisemilattice") {
  CHECK(validate_bisemilattice(builtin("three")).ok());
  CHECK(validate_bisemilattice(one_element()).ok());

  FiniteAlgebra bad(2);
  bad.set_binary(op::join, {0, 1, 1, 1}).set_binary(op::meet, {0, 0, 0, 0});
  const auto r = validate_bisemilattice(bad);
  CHECK_FALSE(r.ok());
  const Check* c = r.find("meet-idempotent");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(c->witness == std::vector<int>{1});

  FiniteAlgebra missing(2);
  missing.set_binary(op::join, {0, 1, 1, 1});
  CHECK_THROWS_AS(validate_bisemilattice(missing), MissingOperation);
}

TEST_CASE("validate_ibsl") {
  for (const char* name : {"wk", "two", "s2"}) {
    CAPTURE(name);
    const auto r = validate_ibsl(builtin(name));
    CHECK(r.ok());
    CHECK(oracle::is_ibsl(builtin(name)));
  }
  CHECK(validate_ibsl(one_element()).ok());

  FiniteAlgebra broken(2);
  broken.set_binary(op::join, {0, 1, 1, 1}).set_binary(op::meet, {0, 0, 0, 1}).set_unary(op::neg, {0, 1});
  broken.set_constant(op::zero, 0);
  const auto r = validate_ibsl(broken);
  const Check* i6 = r.find("I6");
  REQUIRE(i6 != nullptr);
  CHECK_FALSE(i6->passed);
  CHECK(i6->witness == std::vector<int>{1, 0});
  CHECK(format_witness(*i6, &broken) == "x=1, y=0");

  FiniteAlgebra minimal(3);
  minimal.set_binary(op::join, builtin("wk").binary_ops().at("join"));
  minimal.set_unary(op::neg, {1, 0, 2}).set_constant(op::zero, 0);
  CHECK(validate_ibsl(minimal).ok());

  FiniteAlgebra no_neg(2);
  no_neg.set_binary(op::join, {0, 1, 1, 1}).set_constant(op::zero, 0);
  CHECK_THROWS_AS(validate_ibsl(no_neg), MissingOperation);
}

TEST_CASE("ibsl reducts are bisemilattices") {
  for (const char* name : {"wk", "two", "s2"}) {
    const FiniteAlgebra b = prepare_for_kind(builtin(name), Kind::Ibsl);
    CHECK(validate_bisemilattice(b.reduct({op::join, op::meet})).ok());
  }
}

TEST_CASE("validate_boolean_algebra") {
  CHECK(validate_boolean_algebra(builtin("two")).ok());
  CHECK(validate_boolean_algebra(product_ba()).ok());

  FiniteAlgebra chain(3, {"0", "m", "1"});
  chain.set_binary(op::join, {0, 1, 2, 1, 1, 2, 2, 2, 2})
      .set_binary(op::meet, {0, 0, 0, 0, 1, 1, 0, 1, 2})
      .set_unary(op::neg, {2, 1, 0})
      .set_constant(op::zero, 0)
      .set_constant(op::one, 2);
  const auto r = validate_boolean_algebra(chain);
  CHECK_FALSE(r.ok());
  bool complement_witness = false;
  for (const auto& c : r.violations())
    if (c.witness == std::vector<int>{1}) complement_witness = true;
  CHECK(complement_witness);
  CHECK(oracle::count_atoms(product_ba()) == 2);
}

TEST_CASE("validate_distributive_lattice and join semilattice") {
  FiniteAlgebra chain(3);
  chain.set_binary(op::join, {0, 1, 2, 1, 1, 2, 2, 2, 2}).set_binary(op::meet, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  CHECK(validate_distributive_lattice(chain).ok());
  CHECK_FALSE(validate_distributive_lattice(builtin("three")).ok());

  FiniteAlgebra m3(5);
  std::vector<int> join(25), meet(25);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      int j, m;
      if (x == y) j = m = x;
      else if (x == 0 || y == 0) j = std::max(x, y), m = 0;
      else if (x == 4 || y == 4) j = 4, m = std::min(x, y);
      else j = 4, m = 0;
      join[x * 5 + y] = j;
      meet[x * 5 + y] = m;
    }
  m3.set_binary(op::join, join).set_binary(op::meet, meet);
  CHECK_FALSE(validate_distributive_lattice(m3).ok());

  FiniteAlgebra sl(3);
  sl.set_binary(op::join, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  CHECK(validate_join_semilattice(sl).ok());
  FiniteAlgebra reversed(2);
  reversed.set_binary(op::join, {0, 0, 0, 1});
  CHECK(validate_join_semilattice(reversed).ok());
  FiniteAlgebra two_minimal(3);
  two_minimal.set_binary(op::join, {0, 2, 2, 2, 1, 2, 2, 2, 2});
  CHECK_FALSE(validate_join_semilattice(two_minimal).ok());
}

TEST_CASE("join semilattice index") {
  const auto c = JoinSemilattice::chain(3);
  CHECK(c.bottom() == 0);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 1));
  FiniteAlgebra bad(2);
  bad.set_binary(op::join, {0, 0, 1, 1});
  CHECK_THROWS_AS(JoinSemilattice{bad}, InvalidSemilattice);
  FiniteAlgebra v(3);
  v.set_binary(op::join, {0, 2, 2, 2, 1, 2, 2, 2, 2});
  CHECK_THROWS_AS(JoinSemilattice{v}, InvalidSemilattice);
}

TEST_CASE("induced orders") {
  const auto [plus, dot] = induced_orders(builtin("three"));
  // 0 < 1 < a for +, a < 0 < 1 for the meet order.
  CHECK(leq_pairs(plus) == std::vector<int>{1, 1, 1, 0, 1, 1, 0, 0, 1});
  CHECK(leq_pairs(dot) == std::vector<int>{1, 1, 0, 0, 1, 0, 1, 1, 1});
  CHECK(plus.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(dot.covers() == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}});

  const auto [p1, d1] = induced_orders(one_element());
  CHECK(leq_pairs(p1) == std::vector<int>{1});
  CHECK(leq_pairs(d1) == std::vector<int>{1});

  const auto [pb, db] = induced_orders(product_ba());
  CHECK(pb == db);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(pb.leq(x, y) == ((x & ~y) == 0));
}

TEST_CASE("hom enumeration agrees with the all-maps oracle") {
  const std::vector<std::pair<std::string, Kind>> cases{
      {"two", Kind::Ibsl}, {"s2", Kind::Ibsl}, {"wk", Kind::Ibsl}, {"three", Kind::Bisemilattice}};
  for (const auto& [an, ak] : cases)
    for (const auto& [bn, bk] : cases) {
      CAPTURE(an);
      CAPTURE(bn);
      const Kind kind = ak == bk ? ak : Kind::Bisemilattice;
      const auto a = prepare_for_kind(builtin(an), kind);
      const auto b = prepare_for_kind(builtin(bn), kind);
      const auto& sym = kind == Kind::Ibsl ? oracle::ibsl : oracle::bsl;
      CHECK(enumerate_hom_maps(a, b, kind) == oracle::homs(a, b, sym));
    }
}

TEST_CASE("enumerate_homs examples") {
  const auto three = builtin("three");
  const auto homs33 = enumerate_hom_maps(three, three, Kind::Bisemilattice);
  // The identity, the three constants, and 0,1 -> c with a -> a for c in {0, 1}.
  CHECK(homs33 == std::vector<Map>{{0, 0, 0}, {0, 0, 2}, {0, 1, 2}, {1, 1, 1}, {1, 1, 2}, {2, 2, 2}});
  CHECK(oracle::homs(three, three, oracle::bsl).size() == 6);

  CHECK(enumerate_homs(builtin("wk"), builtin("two"), Kind::Ibsl).empty());
  CHECK(enumerate_hom_maps(builtin("two"), builtin("two"), Kind::Boolean) == std::vector<Map>{{0, 1}});
}

TEST_CASE("hom sets contain the identity and are closed under composition") {
  for (const char* name : {"two", "s2", "wk", "three"}) {
    const Kind kind = std::string(name) == "three" ? Kind::Bisemilattice : Kind::Ibsl;
    const auto a = prepare_for_kind(builtin(name), kind);
    const auto hs = enumerate_hom_maps(a, a, kind);
    CHECK(std::find(hs.begin(), hs.end(), identity_map(a.size())) != hs.end());
    for (const auto& f : hs)
      for (const auto& g : hs) CHECK(std::find(hs.begin(), hs.end(), compose_maps(g, f)) != hs.end());
  }
}

TEST_CASE("morphism validation and composition") {
  const auto two = builtin("two");
  const auto wk = builtin("wk");
  CHECK_NOTHROW(Morphism(two, wk, {0, 1}, Kind::Ibsl));
  CHECK_THROWS_AS(Morphism(two, wk, {1, 0}, Kind::Ibsl), InvalidMorphism);
  CHECK_THROWS_AS(Morphism(two, wk, {0}, Kind::Ibsl), InvalidMorphism);
  const Morphism f(two, wk, {0, 1}, Kind::Ibsl);
  const Morphism g(wk, builtin("s2"), {0, 0, 1}, Kind::Ibsl);
  const Morphism gf = compose(g, f);
  CHECK(gf.map() == Map{0, 0});
  CHECK_THROWS_AS(compose(f, g), DomainMismatch);
  CHECK(Morphism::identity(wk, Kind::Ibsl).is_isomorphism());
  CHECK_FALSE(f.is_bijective());
}

TEST_CASE("find_isomorphism") {
  const auto wk = builtin("wk");
  const auto iso = find_isomorphism(wk, wk, Kind::Ibsl);
  REQUIRE(iso.has_value());
  CHECK(iso->map() == identity_map(3));
  CHECK_FALSE(find_isomorphism(wk, builtin("s2"), Kind::Ibsl).has_value());

  // Swapping the atoms is an automorphism, so the identity comes first and the
  // transposition is the only other bijective hom.
  const auto ba = product_ba();
  auto swapped = relabel(ba, {0, 2, 1, 3});
  swapped.set_names({"0", "b", "a", "1"});
  const auto t = find_isomorphism(ba, swapped, Kind::Boolean);
  REQUIRE(t.has_value());
  CHECK(t->map() == identity_map(4));
  std::vector<Map> bijective;
  for (const auto& h : enumerate_hom_maps(ba, swapped, Kind::Boolean))
    if (is_bijection(h, 4)) bijective.push_back(h);
  CHECK(bijective == std::vector<Map>{{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK(oracle::isomorphic(ba, swapped, oracle::ba));

  const auto shifted = relabel(ba, {1, 0, 3, 2});
  const auto s = find_isomorphism(ba, shifted, Kind::Boolean);
  REQUIRE(s.has_value());
  CHECK(s->map() == Map{1, 0, 3, 2});

  // Success is symmetric.
  for (const char* x : {"two", "s2", "wk"})
    for (const char* y : {"two", "s2", "wk"}) {
      const auto a = prepare_for_kind(builtin(x), Kind::Ibsl);
      const auto b = prepare_for_kind(builtin(y), Kind::Ibsl);
      CHECK(find_isomorphism(a, b, Kind::Ibsl).has_value() == find_isomorphism(b, a, Kind::Ibsl).has_value());
      CHECK(find_isomorphism(a, b, Kind::Ibsl).has_value() == oracle::isomorphic(a, b, oracle::ibsl));
    }
}

TEST_CASE("kind names") {
  for (Kind k : {Kind::Semilattice, Kind::Boolean, Kind::Bisemilattice, Kind::Ibsl, Kind::Lattice, Kind::Gr, Kind::Igr,
                 Kind::Poset})
    CHECK(kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(kind_from_string("group"), KindMismatch);
  CHECK_THROWS_AS(prepare_for_kind(builtin("three"), Kind::Ibsl), KindMismatch);
}

TEST_CASE("boolean algebra sizes are powers of two") {
  CHECK(oracle::count_atoms(builtin("two")) == 1);
  CHECK((1 << oracle::count_atoms(product_ba())) == product_ba().size());
}
