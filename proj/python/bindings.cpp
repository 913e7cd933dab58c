#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "algkit/cli.hpp"
#include "algkit/duality.hpp"
#include "algkit/generate.hpp"
#include "algkit/json_io.hpp"
#include "algkit/lattice.hpp"
#include "algkit/plonka.hpp"
#include "algkit/validate.hpp"

namespace py = pybind11;
using namespace algkit;

namespace {

// An algebra together with the kind its morphisms and duals are taken in.
struct PyAlgebra {
  FiniteAlgebra algebra;
  Kind kind;
};

PyAlgebra from_document(const Json& doc) {
  FiniteAlgebra a = algebra_from_json(doc);
  Kind k = kind_from_string(document_kind(doc));
  if (k == Kind::Gr && a.has_unary(op::neg)) k = Kind::Igr;
  return {std::move(a), k};
}

PyAlgebra builtin_algebra(const std::string& name) {
  FiniteAlgebra a = builtin(name);
  Kind k = Kind::Bisemilattice;
  if (a.has_binary(op::star))
    k = a.has_unary(op::neg) ? Kind::Igr : Kind::Gr;
  else if (a.has_unary(op::neg))
    k = Kind::Ibsl;
  return {std::move(a), k};
}

Kind kind_arg(const std::string& kind, const PyAlgebra& fallback) {
  return kind.empty() ? fallback.kind : kind_from_string(kind);
}

py::dict report_dict(const ValidationReport& r, const FiniteAlgebra& names) {
  py::list checks;
  for (const auto& c : r.checks()) {
    py::dict d;
    d["name"] = c.name;
    d["statement"] = c.statement;
    d["passed"] = c.passed;
    d["witness"] = c.witness;
    d["witness_text"] = c.passed ? std::string() : format_witness(c, &names);
    d["note"] = c.note;
    checks.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["checks"] = checks;
  return out;
}

ValidationReport validate_as(const FiniteAlgebra& a, Kind k) {
  switch (k) {
    case Kind::Ibsl: return validate_ibsl(a);
    case Kind::Boolean: return validate_boolean_algebra(a);
    case Kind::Bisemilattice: return validate_bisemilattice(a);
    case Kind::Lattice: return validate_distributive_lattice(a);
    case Kind::Semilattice: return validate_join_semilattice(a);
    case Kind::Gr: return validate_gr(a);
    case Kind::Igr: return validate_igr(a);
    case Kind::Poset: break;
  }
  throw KindMismatch("no validator for kind " + std::string(to_string(k)));
}

PyAlgebra dual_algebra(const PyAlgebra& a) {
  switch (a.kind) {
    case Kind::Ibsl: return {dual_of_ibsl(a.algebra), Kind::Igr};
    case Kind::Bisemilattice: return {dual_of_bsl(a.algebra), Kind::Gr};
    case Kind::Gr: return {dual_of_gr(a.algebra), Kind::Bisemilattice};
    case Kind::Igr: return {dual_of_gr(a.algebra), Kind::Ibsl};
    default: break;
  }
  throw KindMismatch("dual needs an ibsl, bsl, gr or igr algebra");
}

py::dict table_dict(const FiniteAlgebra& a) {
  py::dict d;
  for (const auto& [name, t] : a.binary_ops()) d[py::str(name)] = t;
  for (const auto& [name, m] : a.unary_ops()) d[py::str(name)] = m;
  for (const auto& [name, c] : a.constants()) d[py::str(name)] = c;
  for (const auto& [name, r] : a.relations()) d[py::str(name)] = std::vector<int>(r.begin(), r.end());
  return d;
}

}  // namespace

PYBIND11_MODULE(algkit, m) {
  m.doc() = "Finite involutive bisemilattices, Płonka sums and their duals";

  auto base = py::register_exception<Error>(m, "AlgkitError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static("from_json", [](const std::string& text) { return from_document(parse_json(text)); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return from_document(read_json_file(path)); }, py::arg("path"))
      .def_static("builtin", &builtin_algebra, py::arg("name"))
      .def_property_readonly("size", [](const PyAlgebra& a) { return a.algebra.size(); })
      .def_property_readonly("kind", [](const PyAlgebra& a) { return std::string(to_string(a.kind)); })
      .def_property_readonly("names", [](const PyAlgebra& a) {
        std::vector<std::string> out;
        for (int x = 0; x < a.algebra.size(); ++x) out.push_back(a.algebra.name(x));
        return out;
      })
      .def_property_readonly("ops", [](const PyAlgebra& a) { return table_dict(a.algebra); })
      .def("apply", [](const PyAlgebra& a, const std::string& op, int x, int y) { return a.algebra.apply(op, x, y); })
      .def("to_json", [](const PyAlgebra& a) { return dump(algebra_to_json(a.algebra, a.kind)); })
      .def("__len__", [](const PyAlgebra& a) { return a.algebra.size(); })
      .def("__eq__", [](const PyAlgebra& a, const PyAlgebra& b) { return a.kind == b.kind && a.algebra == b.algebra; })
      .def("__repr__", [](const PyAlgebra& a) {
        return "<Algebra " + std::string(to_string(a.kind)) + " with " + std::to_string(a.algebra.size()) +
               " elements>";
      });

  m.def("builtin", &builtin_algebra, py::arg("name"));

  m.def(
      "validate",
      [](const PyAlgebra& a, const std::string& kind) {
        return report_dict(validate_as(a.algebra, kind_arg(kind, a)), a.algebra);
      },
      py::arg("algebra"), py::arg("kind") = "");

  m.def(
      "homs",
      [](const PyAlgebra& a, const PyAlgebra& b, const std::string& kind) {
        return enumerate_hom_maps(a.algebra, b.algebra, kind_arg(kind, a));
      },
      py::arg("a"), py::arg("b"), py::arg("kind") = "");
  m.def(
      "count_homs",
      [](const PyAlgebra& a, const PyAlgebra& b, const std::string& kind) {
        return count_homs(a.algebra, b.algebra, kind_arg(kind, a));
      },
      py::arg("a"), py::arg("b"), py::arg("kind") = "");
  m.def(
      "find_isomorphism",
      [](const PyAlgebra& a, const PyAlgebra& b, const std::string& kind) -> std::optional<Map> {
        auto iso = find_isomorphism(a.algebra, b.algebra, kind_arg(kind, a));
        if (!iso) return std::nullopt;
        return iso->map();
      },
      py::arg("a"), py::arg("b"), py::arg("kind") = "");

  m.def(
      "plonka_decompose",
      [](const PyAlgebra& a) {
        if (a.kind == Kind::Bisemilattice) return dump(direct_system_to_json(plonka_decompose_bsl(a.algebra)));
        return dump(direct_system_to_json(plonka_decompose(a.algebra)));
      },
      py::arg("algebra"), "Direct system of the algebra, as a JSON document.");
  m.def(
      "plonka_sum",
      [](const std::string& system_json) {
        const DirectSystem s = direct_system_from_json(parse_json(system_json));
        return PyAlgebra{plonka_sum(s), sum_kind(s.fiber_kind())};
      },
      py::arg("system_json"));

  m.def("dual", &dual_algebra, py::arg("algebra"));
  m.def(
      "eps_is_isomorphism", [](const PyAlgebra& a) { return eps_iso(a.algebra).is_isomorphism(); },
      py::arg("algebra"));
  m.def(
      "delta_is_isomorphism", [](const PyAlgebra& g) { return delta_iso(g.algebra).is_isomorphism(); },
      py::arg("space"));
  m.def(
      "dual_hom",
      [](const PyAlgebra& a, const PyAlgebra& b, const Map& f) {
        if (a.kind == Kind::Igr || a.kind == Kind::Gr)
          return dual_of_gr_hom(Morphism(a.algebra, b.algebra, f, a.kind)).map();
        return dual_of_ibsl_hom(Morphism(a.algebra, b.algebra, f, a.kind)).map();
      },
      py::arg("a"), py::arg("b"), py::arg("map"));

  m.def(
      "priestley_dual",
      [](const PyAlgebra& l) {
        const FinitePoset p = priestley_dual(l.algebra);
        return py::make_tuple(p.size(), std::vector<int>(p.matrix().begin(), p.matrix().end()));
      },
      py::arg("lattice"), "Join-irreducibles as (size, row-major order matrix).");
  m.def(
      "dl_of_poset",
      [](int n, const std::vector<int>& leq) {
        return PyAlgebra{dl_of_poset(FinitePoset(n, std::vector<std::uint8_t>(leq.begin(), leq.end()))), Kind::Lattice};
      },
      py::arg("size"), py::arg("leq"));

  m.def(
      "gen",
      [](const std::string& kind, int size, int fibers, std::uint64_t seed) {
        Rng rng(seed);
        if (kind == "ibsl") return dump(algebra_to_json(random_ibsl(rng, fibers, size), Kind::Ibsl));
        if (kind == "bsl") return dump(algebra_to_json(random_bisemilattice(rng, fibers, size), Kind::Bisemilattice));
        if (kind == "direct-system") return dump(direct_system_to_json(random_ba_system(rng, fibers, size)));
        if (kind == "dl-system") return dump(direct_system_to_json(random_dl_system(rng, fibers, size)));
        throw KindMismatch("unknown generator kind " + kind);
      },
      py::arg("kind") = "ibsl", py::arg("size") = 8, py::arg("fibers") = 3, py::arg("seed") = 0);

  m.def(
      "algctl",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit code, stdout, stderr).");
}
