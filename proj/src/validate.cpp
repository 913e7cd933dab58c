#include "algkit/validate.hpp"

#include "algkit/errors.hpp"
#include "algkit/homs.hpp"

namespace algkit {

using detail::check_law;
using Tuple = std::vector<int>;

namespace {

void require(const FiniteAlgebra& a, std::initializer_list<std::string_view> binary,
             std::initializer_list<std::string_view> unary = {},
             std::initializer_list<std::string_view> constants = {}) {
  for (auto s : binary)
    if (!a.has_binary(s)) throw MissingOperation("missing binary operation '" + std::string(s) + "'");
  for (auto s : unary)
    if (!a.has_unary(s)) throw MissingOperation("missing unary operation '" + std::string(s) + "'");
  for (auto s : constants)
    if (!a.has_constant(s)) throw MissingOperation("missing constant '" + std::string(s) + "'");
}

// Semilattice laws for one binary operation, named with a symbol such as "+".
void semilattice_laws(ValidationReport& r, const FiniteAlgebra& a, std::string_view opname,
                      const std::string& sym, const std::string& prefix) {
  const int n = a.size();
  auto f = [&](int x, int y) { return a.apply(opname, x, y); };
  r.add(check_law(prefix + "idempotent", "axiom", "x" + sym + "x = x", "x", n,
                  [&](const Tuple& t) { return f(t[0], t[0]) == t[0]; }));
  r.add(check_law(prefix + "commutative", "axiom", "x" + sym + "y = y" + sym + "x", "xy", n,
                  [&](const Tuple& t) { return f(t[0], t[1]) == f(t[1], t[0]); }));
  r.add(check_law(prefix + "associative", "axiom",
                  "x" + sym + "(y" + sym + "z) = (x" + sym + "y)" + sym + "z", "xyz", n,
                  [&](const Tuple& t) { return f(t[0], f(t[1], t[2])) == f(f(t[0], t[1]), t[2]); }));
}

}  // namespace

ValidationReport validate_bisemilattice(const FiniteAlgebra& a) {
  require(a, {op::join, op::meet});
  ValidationReport r;
  const int n = a.size();
  auto j = [&](int x, int y) { return a.apply(op::join, x, y); };
  auto m = [&](int x, int y) { return a.apply(op::meet, x, y); };
  semilattice_laws(r, a, op::join, "+", "join-");
  semilattice_laws(r, a, op::meet, ".", "meet-");
  r.add(check_law("join-distributes", "axiom", "x+(y.z) = (x+y).(x+z)", "xyz", n,
                  [&](const Tuple& t) { return j(t[0], m(t[1], t[2])) == m(j(t[0], t[1]), j(t[0], t[2])); }));
  r.add(check_law("meet-distributes", "axiom", "x.(y+z) = (x.y)+(x.z)", "xyz", n,
                  [&](const Tuple& t) { return m(t[0], j(t[1], t[2])) == j(m(t[0], t[1]), m(t[0], t[2])); }));
  return r;
}

ValidationReport validate_ibsl(const FiniteAlgebra& a) {
  require(a, {op::join}, {op::neg}, {op::zero});
  const FiniteAlgebra full = prepare_for_kind(a, Kind::Ibsl);
  const int n = a.size();
  const int zero = full.constant(op::zero);
  const int one = full.constant(op::one);
  auto j = [&](int x, int y) { return full.apply(op::join, x, y); };
  auto m = [&](int x, int y) { return full.apply(op::meet, x, y); };
  auto c = [&](int x) { return full.apply(op::neg, x); };

  ValidationReport r;
  r.add(check_law("I1", "axiom", "x+x = x", "x", n, [&](const Tuple& t) { return j(t[0], t[0]) == t[0]; }));
  r.add(check_law("I2", "axiom", "x+y = y+x", "xy", n,
                  [&](const Tuple& t) { return j(t[0], t[1]) == j(t[1], t[0]); }));
  r.add(check_law("I3", "axiom", "x+(y+z) = (x+y)+z", "xyz", n,
                  [&](const Tuple& t) { return j(t[0], j(t[1], t[2])) == j(j(t[0], t[1]), t[2]); }));
  r.add(check_law("I4", "axiom", "x'' = x", "x", n, [&](const Tuple& t) { return c(c(t[0])) == t[0]; }));
  r.add(check_law("I5", "axiom", "x.y = (x'+y')'", "xy", n,
                  [&](const Tuple& t) { return m(t[0], t[1]) == c(j(c(t[0]), c(t[1]))); }));
  r.add(check_law("I6", "axiom", "x.(x'+y) = x.y", "xy", n,
                  [&](const Tuple& t) { return m(t[0], j(c(t[0]), t[1])) == m(t[0], t[1]); }));
  r.add(check_law("I7", "axiom", "0+x = x", "x", n, [&](const Tuple& t) { return j(zero, t[0]) == t[0]; }));
  {
    Check i8{"I8", "axiom", "1 = 0'", one == c(zero), "", {}, {}};
    if (!i8.passed) i8.note = "1 is " + a.name(one) + " but 0' is " + a.name(c(zero));
    r.add(std::move(i8));
  }
  r.add(check_law("D1", "derived", "x+y = (x'.y')'", "xy", n,
                  [&](const Tuple& t) { return j(t[0], t[1]) == c(m(c(t[0]), c(t[1]))); }));
  r.add(check_law("D2", "derived", "x+y = x+(x'.y)", "xy", n,
                  [&](const Tuple& t) { return j(t[0], t[1]) == j(t[0], m(c(t[0]), t[1])); }));
  return r;
}

ValidationReport validate_distributive_lattice(const FiniteAlgebra& a) {
  require(a, {op::join, op::meet});
  ValidationReport r;
  const int n = a.size();
  auto j = [&](int x, int y) { return a.apply(op::join, x, y); };
  auto m = [&](int x, int y) { return a.apply(op::meet, x, y); };
  semilattice_laws(r, a, op::join, "+", "join-");
  semilattice_laws(r, a, op::meet, ".", "meet-");
  r.add(check_law("absorption-join", "axiom", "x+(x.y) = x", "xy", n,
                  [&](const Tuple& t) { return j(t[0], m(t[0], t[1])) == t[0]; }));
  r.add(check_law("absorption-meet", "axiom", "x.(x+y) = x", "xy", n,
                  [&](const Tuple& t) { return m(t[0], j(t[0], t[1])) == t[0]; }));
  r.add(check_law("distributive", "axiom", "x.(y+z) = (x.y)+(x.z)", "xyz", n,
                  [&](const Tuple& t) { return m(t[0], j(t[1], t[2])) == j(m(t[0], t[1]), m(t[0], t[2])); }));
  return r;
}

ValidationReport validate_boolean_algebra(const FiniteAlgebra& a) {
  require(a, {op::join, op::meet}, {op::neg}, {op::zero, op::one});
  ValidationReport r = validate_distributive_lattice(a);
  const int n = a.size();
  const int zero = a.constant(op::zero);
  const int one = a.constant(op::one);
  auto j = [&](int x, int y) { return a.apply(op::join, x, y); };
  auto m = [&](int x, int y) { return a.apply(op::meet, x, y); };
  auto c = [&](int x) { return a.apply(op::neg, x); };
  r.add(check_law("bottom", "axiom", "0+x = x", "x", n, [&](const Tuple& t) { return j(zero, t[0]) == t[0]; }));
  r.add(check_law("top", "axiom", "1.x = x", "x", n, [&](const Tuple& t) { return m(one, t[0]) == t[0]; }));
  r.add(check_law("complement-join", "axiom", "x+x' = 1", "x", n,
                  [&](const Tuple& t) { return j(t[0], c(t[0])) == one; }));
  r.add(check_law("complement-meet", "axiom", "x.x' = 0", "x", n,
                  [&](const Tuple& t) { return m(t[0], c(t[0])) == zero; }));
  if (r.ok()) {
    int atoms = 0;
    for (int x = 0; x < n; ++x) {
      if (x == zero) continue;
      bool atom = true;
      for (int y = 0; y < n && atom; ++y)
        if (y != zero && y != x && m(y, x) == y) atom = false;
      atoms += atom ? 1 : 0;
    }
    Check size{"size", "derived", "|B| = 2^atoms", atoms < 31 && n == (1 << atoms), "", {}, {}};
    r.add(std::move(size));
  }
  return r;
}

ValidationReport validate_join_semilattice(const FiniteAlgebra& a) {
  require(a, {op::join});
  ValidationReport r;
  const int n = a.size();
  semilattice_laws(r, a, op::join, "+", "");
  Check bottom{"bottom", "axiom", "i0+x = x", true, "x", {}, {}};
  if (a.has_constant(op::bottom)) {
    const int b = a.constant(op::bottom);
    bottom = check_law("bottom", "axiom", "i0+x = x", "x", n,
                       [&](const Tuple& t) { return a.apply(op::join, b, t[0]) == t[0]; });
  } else {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) {
      bool least = true;
      for (int x = 0; x < n && least; ++x) least = a.apply(op::join, b, x) == x;
      found = least;
    }
    bottom.passed = found;
    bottom.variables.clear();
    if (!found) bottom.note = "no least element";
  }
  r.add(std::move(bottom));
  return r;
}

namespace {
FinitePoset order_from(const FiniteAlgebra& a, std::string_view opname, bool join_style) {
  const int n = a.size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n * n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = a.apply(opname, x, y);
      m[static_cast<std::size_t>(x * n + y)] = (join_style ? v == y : v == x) ? 1 : 0;
    }
  return FinitePoset(n, std::move(m));
}
}  // namespace

FinitePoset join_order(const FiniteAlgebra& a) { return order_from(a, op::join, true); }
FinitePoset meet_order(const FiniteAlgebra& a) { return order_from(a, op::meet, false); }

std::pair<FinitePoset, FinitePoset> induced_orders(const FiniteAlgebra& a) {
  auto r = validate_bisemilattice(a);
  if (!r.ok()) throw NotBisemilattice("induced orders need a bisemilattice: " + r.summary());
  return {join_order(a), meet_order(a)};
}

FiniteAlgebra builtin(std::string_view name) {
  // Carrier of the three-element algebras: 0, 1, alpha.
  const std::vector<std::string> three_names{"0", "1", "α"};
  const std::vector<int> wk_join{0, 1, 2, 1, 1, 2, 2, 2, 2};
  const std::vector<int> wk_meet{0, 0, 2, 0, 1, 2, 2, 2, 2};
  const std::vector<int> wk_neg{1, 0, 2};
  if (name == "three") {
    FiniteAlgebra a(3, three_names);
    a.set_binary(op::join, wk_join).set_binary(op::meet, wk_meet);
    return a;
  }
  if (name == "wk") {
    FiniteAlgebra a(3, three_names);
    a.set_binary(op::join, wk_join).set_binary(op::meet, wk_meet).set_unary(op::neg, wk_neg);
    a.set_constant(op::zero, 0).set_constant(op::one, 1);
    return a;
  }
  if (name == "two") {
    FiniteAlgebra a(2, {"0", "1"});
    a.set_binary(op::join, {0, 1, 1, 1}).set_binary(op::meet, {0, 0, 0, 1}).set_unary(op::neg, {1, 0});
    a.set_constant(op::zero, 0).set_constant(op::one, 1);
    return a;
  }
  if (name == "s2") {
    // 0 = 1 at the bottom, a on top; negation is the identity.
    FiniteAlgebra a(2, {"0", "a"});
    a.set_binary(op::join, {0, 1, 1, 1}).set_binary(op::meet, {0, 1, 1, 1}).set_unary(op::neg, {0, 1});
    a.set_constant(op::zero, 0).set_constant(op::one, 0);
    return a;
  }
  if (name == "three-gr" || name == "wk-gr") {
    // a * b = a unless b = alpha; order is the meet order alpha < 0 < 1.
    FiniteAlgebra a(3, three_names);
    a.set_binary(op::star, {0, 0, 2, 1, 1, 2, 2, 2, 2});
    a.set_relation(op::leq, {1, 1, 0, 0, 1, 0, 1, 1, 1});
    a.set_constant(op::c0, 0).set_constant(op::c1, 1).set_constant(op::calpha, 2);
    if (name == "wk-gr") a.set_unary(op::neg, wk_neg);
    return a;
  }
  throw UnknownBuiltin("unknown built-in algebra '" + std::string(name) + "'");
}

JoinSemilattice::JoinSemilattice(const FiniteAlgebra& algebra) : algebra_(algebra.reduct({op::join, op::bottom})) {
  if (!algebra_.has_binary(op::join)) throw InvalidSemilattice("index semilattice needs a join table");
  auto r = validate_join_semilattice(algebra_);
  if (!r.ok()) throw InvalidSemilattice("invalid join semilattice: " + r.summary());
  if (!algebra_.has_constant(op::bottom)) algebra_ = prepare_for_kind(algebra_, Kind::Semilattice);
}

JoinSemilattice JoinSemilattice::chain(int n) {
  FiniteAlgebra a(n);
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i * n + j)] = std::max(i, j);
  a.set_binary(op::join, std::move(t)).set_constant(op::bottom, 0);
  return JoinSemilattice(a);
}

}  // namespace algkit
