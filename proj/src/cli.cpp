#include "algkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "algkit/dot.hpp"
#include "algkit/duality.hpp"
#include "algkit/generate.hpp"
#include "algkit/json_io.hpp"
#include "algkit/lattice.hpp"
#include "algkit/plonka.hpp"
#include "algkit/validate.hpp"

namespace algkit::cli {

namespace {

struct Options {
  std::string format = "text";
  bool timing = false;
  bool color = false;
};

// --- input -----------------------------------------------------------------

std::optional<Kind> builtin_kind(const std::string& name) {
  if (name == "two" || name == "s2" || name == "wk") return Kind::Ibsl;
  if (name == "three") return Kind::Bisemilattice;
  if (name == "three-gr") return Kind::Gr;
  if (name == "wk-gr") return Kind::Igr;
  return std::nullopt;
}

// A file path, or the name of a built-in algebra when no such file exists.
Json load(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    if (auto k = builtin_kind(arg)) return algebra_to_json(builtin(arg), *k);
  }
  return read_json_file(arg);
}

int space_size(const Json& doc) {
  if (!doc.contains("size") || !doc["size"].is_number_integer() || doc["size"].get<int>() < 0)
    throw SchemaError("/size", "expected a non-negative integer");
  return doc["size"].get<int>();
}

bool is_algebra_kind(const std::string& k) {
  return k == "ibsl" || k == "ba" || k == "bsl" || k == "dl" || k == "sl" || k == "gr" || k == "igr" || k == "poset";
}

Kind algebra_kind(const Json& doc, const FiniteAlgebra& a) {
  const std::string k = document_kind(doc);
  if (k == "gr" || k == "igr") return a.has_unary(op::neg) ? Kind::Igr : Kind::Gr;
  return kind_from_string(k);
}

struct LoadedAlgebra {
  FiniteAlgebra algebra;
  Kind kind;
};

LoadedAlgebra load_algebra(const std::string& arg) {
  const Json doc = load(arg);
  const std::string k = document_kind(doc);
  if (!is_algebra_kind(k)) throw KindMismatch(arg + ": expected an algebra document, got \"" + k + "\"");
  FiniteAlgebra a = algebra_from_json(doc);
  const Kind kind = algebra_kind(doc, a);
  return LoadedAlgebra{std::move(a), kind};
}

// --- output ----------------------------------------------------------------

std::string paint(const Options& o, bool ok, const std::string& s) {
  if (!o.color) return s;
  return std::string(ok ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

void print_report(std::ostream& out, const Options& o, const std::string& subject, const std::string& kind,
                  const ValidationReport& r, const FiniteAlgebra* names, double millis) {
  const int size = names ? names->size() : -1;
  if (o.format == "json") {
    Json j = Json::object();
    j["subject"] = subject;
    j["kind"] = kind;
    if (size >= 0) j["size"] = size;
    const Json body = report_to_json(r, names);
    j["ok"] = body["ok"];
    j["checks"] = body["checks"];
    if (o.timing) j["timing_ms"] = millis;
    out << dump(j);
    return;
  }
  out << subject << ": " << kind;
  if (size >= 0) out << ", " << size << (size == 1 ? " element" : " elements");
  out << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks()) width = std::max(width, c.name.size());
  int failed = 0;
  for (const auto& c : r.checks()) {
    failed += c.passed ? 0 : 1;
    out << "  " << paint(o, c.passed, c.passed ? "PASS" : "FAIL") << "  " << c.name
        << std::string(width - c.name.size() + 2, ' ') << c.statement;
    if (!c.witness.empty() && !c.passed) out << "  [" << format_witness(c, names) << "]";
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  out << "result: " << paint(o, failed == 0, failed == 0 ? "pass" : "fail") << " (" << r.checks().size()
      << " checks, " << failed << " failed)\n";
  if (o.timing) out << "time: " << millis << " ms\n";
}

// Runs `body`, returning its report and elapsed milliseconds.
template <class F>
std::pair<ValidationReport, double> timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  ValidationReport r = body();
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(r), std::chrono::duration<double, std::milli>(stop - start).count()};
}

// --- check -----------------------------------------------------------------

ValidationReport validate_as(const FiniteAlgebra& a, Kind kind) {
  switch (kind) {
    case Kind::Ibsl: return validate_ibsl(a);
    case Kind::Boolean: return validate_boolean_algebra(a);
    case Kind::Bisemilattice: return validate_bisemilattice(a);
    case Kind::Lattice: return validate_distributive_lattice(a);
    case Kind::Semilattice: return validate_join_semilattice(a);
    case Kind::Gr: return validate_gr(a);
    case Kind::Igr: return validate_igr(a);
    case Kind::Poset: {
      if (!a.has_relation(op::leq)) throw MissingOperation("missing relation 'leq'");
      const auto m = a.relation_matrix(op::leq);
      return FinitePoset::check(a.size(), std::vector<std::uint8_t>(m.begin(), m.end()));
    }
  }
  throw KindMismatch("unsupported kind");
}

int cmd_check(const std::string& file, const std::string& kind_flag, const Options& o, std::ostream& out) {
  const Json doc = load(file);
  const std::string k = document_kind(doc);
  if (k == "direct-system" || k == "inverse-system" || k == "space") {
    if (!kind_flag.empty() && kind_flag != k) throw KindMismatch("document is a " + k + ", not " + kind_flag);
    auto [r, ms] = timed([&] {
      if (k == "space") {
        ValidationReport rep;
        rep.add(Check{"size", "structure", "size >= 0", true, "", {}, {}});
        return rep;
      }
      if (k == "direct-system") {
        const auto p = direct_system_parts_from_json(doc);
        return DirectSystem::check(p.index, p.fiber_kind, p.fibers, p.transitions);
      }
      const auto p = inverse_system_parts_from_json(doc);
      if (auto* spaces = std::get_if<std::vector<FiniteSpace>>(&p.terms))
        return StoneSystem::check(p.index, *spaces, p.bondings);
      return PriestleySystem::check(p.index, std::get<std::vector<FinitePoset>>(p.terms), p.bondings);
    });
    print_report(out, o, file, k, r, nullptr, ms);
    return r.ok() ? kPass : kFail;
  }
  if (!is_algebra_kind(k)) throw SchemaError("/kind", "unknown document kind \"" + k + "\"");
  const FiniteAlgebra a = algebra_from_json(doc);
  const Kind kind = kind_flag.empty() ? algebra_kind(doc, a) : kind_from_string(kind_flag);
  auto [r, ms] = timed([&] { return validate_as(a, kind); });
  print_report(out, o, file, std::string(to_string(kind)), r, &a, ms);
  return r.ok() ? kPass : kFail;
}

// --- dual ------------------------------------------------------------------

int cmd_dual(const std::string& file, std::ostream& out) {
  const Json doc = load(file);
  const std::string k = document_kind(doc);
  if (k == "direct-system") {
    const DirectSystem s = direct_system_from_json(doc);
    if (s.fiber_kind() == Kind::Boolean) {
      out << dump(inverse_system_to_json(lift_functor_dir_to_inv(s)));
      return kPass;
    }
    if (s.fiber_kind() == Kind::Lattice) {
      std::vector<FinitePoset> terms;
      for (const auto& f : s.fibers()) terms.push_back(priestley_dual(f));
      ArrowMap bondings;
      for (const auto& [key, p] : s.transitions())
        bondings.emplace(key, priestley_dual_hom(Morphism(s.fiber(key.first), s.fiber(key.second), p, Kind::Lattice)));
      out << dump(inverse_system_to_json(PriestleySystem(s.index(), std::move(terms), std::move(bondings))));
      return kPass;
    }
    throw KindMismatch("dual of a direct system needs ba or dl fibers");
  }
  if (k == "inverse-system") {
    const auto s = inverse_system_from_json(doc);
    if (auto* stone = std::get_if<StoneSystem>(&s))
      out << dump(direct_system_to_json(lift_functor_inv_to_dir(*stone)));
    else
      out << dump(direct_system_to_json(lift_priestley_to_dir(std::get<PriestleySystem>(s))));
    return kPass;
  }
  if (k == "space") {
    out << dump(algebra_to_json(ba_of_space(FiniteSpace{space_size(doc)}), Kind::Boolean));
    return kPass;
  }
  const auto [a, kind] = load_algebra(file);
  switch (kind) {
    case Kind::Ibsl: out << dump(algebra_to_json(dual_of_ibsl(a), Kind::Igr)); break;
    case Kind::Bisemilattice: out << dump(algebra_to_json(dual_of_bsl(a), Kind::Gr)); break;
    case Kind::Gr: out << dump(algebra_to_json(dual_of_gr(a), Kind::Bisemilattice)); break;
    case Kind::Igr: out << dump(algebra_to_json(dual_of_gr(a), Kind::Ibsl)); break;
    case Kind::Boolean: {
      Json j = Json::object();
      j["kind"] = "space";
      j["size"] = stone_dual(a).size;
      out << dump(j);
      break;
    }
    case Kind::Lattice: out << dump(poset_to_json(priestley_dual(a))); break;
    case Kind::Poset: {
      const auto m = a.relation_matrix(op::leq);
      out << dump(algebra_to_json(dl_of_poset(FinitePoset(a.size(), {m.begin(), m.end()})), Kind::Lattice));
      break;
    }
    default: throw KindMismatch("no dual for kind " + std::string(to_string(kind)));
  }
  return kPass;
}

// --- plonka ----------------------------------------------------------------

int cmd_plonka(const std::string& action, const std::string& file, std::ostream& out) {
  if (action == "sum") {
    const DirectSystem s = direct_system_from_json(load(file));
    out << dump(algebra_to_json(plonka_sum(s), sum_kind(s.fiber_kind())));
    return kPass;
  }
  const auto [a, kind] = load_algebra(file);
  if (kind == Kind::Ibsl) {
    out << dump(direct_system_to_json(plonka_decompose(a)));
  } else if (kind == Kind::Bisemilattice || kind == Kind::Lattice) {
    out << dump(direct_system_to_json(plonka_decompose_bsl(a)));
  } else {
    throw KindMismatch("plonka decompose needs an ibsl, bsl or dl document");
  }
  return kPass;
}

// --- hom / iso -------------------------------------------------------------

Kind pair_kind(const LoadedAlgebra& a, const LoadedAlgebra& b, const std::string& flag) {
  if (!flag.empty()) return kind_from_string(flag);
  if (a.kind != b.kind)
    throw KindMismatch("documents have kinds " + std::string(to_string(a.kind)) + " and " +
                       std::string(to_string(b.kind)) + "; pass --kind");
  return a.kind;
}

Json named_map(const Map& m, const FiniteAlgebra& target) {
  Json j = Json::array();
  for (int v : m) j.push_back(target.name(v));
  return j;
}

int cmd_hom(const std::string& fa, const std::string& fb, const std::string& kind_flag, bool list, const Options& o,
            std::ostream& out) {
  const auto a = load_algebra(fa);
  const auto b = load_algebra(fb);
  const Kind kind = pair_kind(a, b, kind_flag);
  const auto homs = enumerate_hom_maps(prepare_for_kind(a.algebra, kind), prepare_for_kind(b.algebra, kind), kind);
  if (o.format == "json") {
    Json j = Json::object();
    j["kind"] = std::string(to_string(kind));
    j["count"] = homs.size();
    if (list) {
      Json arr = Json::array();
      for (const auto& h : homs) arr.push_back(map_to_json(h));
      j["homs"] = std::move(arr);
    }
    out << dump(j);
    return kPass;
  }
  if (!list) {
    out << homs.size() << "\n";
    return kPass;
  }
  for (const auto& h : homs) out << named_map(h, b.algebra).dump() << "\n";
  return kPass;
}

int cmd_iso(const std::string& fa, const std::string& fb, const std::string& kind_flag, const Options& o,
            std::ostream& out) {
  const auto a = load_algebra(fa);
  const auto b = load_algebra(fb);
  const Kind kind = pair_kind(a, b, kind_flag);
  const auto iso = find_isomorphism(prepare_for_kind(a.algebra, kind), prepare_for_kind(b.algebra, kind), kind);
  if (o.format == "json") {
    Json j = Json::object();
    j["found"] = iso.has_value();
    if (iso) j["map"] = map_to_json(iso->map());
    out << dump(j);
  } else if (iso) {
    out << "isomorphism: " << named_map(iso->map(), b.algebra).dump() << "\n";
  } else {
    out << "no isomorphism\n";
  }
  return iso ? kPass : kFail;
}

// --- roundtrip -------------------------------------------------------------

Check attempt(const std::string& name, const std::string& statement, const std::function<bool()>& body) {
  Check c{name, "roundtrip", statement, false, "", {}, {}};
  try {
    c.passed = body();
  } catch (const UnboundedTransition& e) {
    c.passed = true;
    c.category = "skipped";
    c.note = e.what();
  } catch (const Error& e) {
    c.note = e.what();
  }
  return c;
}

bool embedding_is_iso(const Decomposition& d, const FiniteAlgebra& b, Kind kind) {
  return Morphism(prepare_for_kind(b, kind), prepare_for_kind(plonka_sum(d.system), kind), d.embedding, kind)
      .is_isomorphism();
}

bool system_roundtrip(const DirectSystem& s) {
  const FiniteAlgebra sum = plonka_sum(s);
  auto original = std::make_shared<const DirectSystem>(s);
  auto again = std::make_shared<const DirectSystem>(s.fiber_kind() == Kind::Boolean ? plonka_decompose(sum)
                                                                                    : plonka_decompose_bsl(sum));
  return find_system_isomorphism(original, again).has_value();
}

ValidationReport roundtrip_report(const Json& doc) {
  ValidationReport r;
  const std::string k = document_kind(doc);
  if (k == "direct-system") {
    const DirectSystem s = direct_system_from_json(doc);
    auto sp = std::make_shared<const DirectSystem>(s);
    r.add(attempt("sum-decompose", "decompose(sum(S)) is isomorphic to S", [&] { return system_roundtrip(s); }));
    if (s.fiber_kind() == Kind::Boolean)
      r.add(attempt("stone-lift", "G(F(S)) is isomorphic to S componentwise", [&] {
        stone_unit_system(sp);
        return true;
      }));
    return r;
  }
  if (k == "space") {
    const FiniteSpace x{space_size(doc)};
    r.add(attempt("stone", "stone_dual(P(X)) has |X| points", [&] { return stone_dual(ba_of_space(x)) == x; }));
    return r;
  }
  FiniteAlgebra a = algebra_from_json(doc);
  const Kind kind = algebra_kind(doc, a);
  switch (kind) {
    case Kind::Ibsl: {
      r.add(attempt("valid", "axioms I1-I8 hold", [&] { return validate_ibsl(a).ok(); }));
      r.add(attempt("decompose-sum", "sum(decompose(B)) is isomorphic to B",
                    [&] { return embedding_is_iso(plonka_decompose_with_embedding(a), a, Kind::Ibsl); }));
      r.add(attempt("sum-decompose", "decompose(sum(decompose(B))) is isomorphic to decompose(B)",
                    [&] { return system_roundtrip(plonka_decompose(a)); }));
      r.add(attempt("stone-lift", "sum(G(F(decompose(B)))) is isomorphic to B", [&] {
        const FiniteAlgebra back = inverse_system_to_ibsl(ibsl_to_inverse_system(a));
        return find_isomorphism(prepare_for_kind(a, Kind::Ibsl), back, Kind::Ibsl).has_value();
      }));
      r.add(attempt("epsilon", "evaluation B -> dual(dual(B)) is an isomorphism", [&] {
        eps_iso(a);
        return true;
      }));
      r.add(attempt("delta", "evaluation X -> dual(dual(X)) is an isomorphism on X = dual(B)", [&] {
        delta_iso(dual_of_ibsl(a));
        return true;
      }));
      break;
    }
    case Kind::Bisemilattice:
    case Kind::Lattice: {
      r.add(attempt("valid", "bisemilattice laws hold", [&] { return validate_bisemilattice(a).ok(); }));
      r.add(attempt("decompose-sum", "sum(decompose(B)) is isomorphic to B", [&] {
        return embedding_is_iso(plonka_decompose_bsl_with_embedding(a), a, Kind::Bisemilattice);
      }));
      r.add(attempt("priestley-lift", "sum(G(P(decompose(B)))) is isomorphic to B", [&] {
        const FiniteAlgebra back = inverse_system_to_bsl(bsl_to_inverse_system(a));
        return find_isomorphism(a.reduct({op::join, op::meet}), back, Kind::Bisemilattice).has_value();
      }));
      r.add(attempt("epsilon", "evaluation B -> dual(dual(B)) is an isomorphism", [&] {
        eps_iso(a.reduct({op::join, op::meet}));
        return true;
      }));
      if (kind == Kind::Lattice)
        r.add(attempt("birkhoff", "L is isomorphic to the down-sets of its join-irreducibles", [&] {
          birkhoff_unit(a);
          return true;
        }));
      break;
    }
    case Kind::Boolean:
      r.add(attempt("stone", "B is isomorphic to the power set of its atoms", [&] {
        stone_unit(a);
        return true;
      }));
      break;
    case Kind::Gr:
    case Kind::Igr:
      r.add(attempt("delta", "evaluation X -> dual(dual(X)) is an isomorphism", [&] {
        delta_iso(a);
        return true;
      }));
      break;
    case Kind::Poset: {
      const auto m = a.relation_matrix(op::leq);
      const FinitePoset p(a.size(), {m.begin(), m.end()});
      r.add(attempt("birkhoff", "P is isomorphic to the join-irreducibles of its down-sets", [&] {
        poset_unit(p);
        return true;
      }));
      break;
    }
    default: throw KindMismatch("no round trip for kind " + std::string(to_string(kind)));
  }
  return r;
}

int cmd_roundtrip(const std::string& file, const Options& o, std::ostream& out) {
  const Json doc = load(file);
  auto [r, ms] = timed([&] { return roundtrip_report(doc); });
  print_report(out, o, file, document_kind(doc), r, nullptr, ms);
  return r.ok() ? kPass : kFail;
}

// --- hasse -----------------------------------------------------------------

int cmd_hasse(const std::string& file, std::string order, const std::string& output, std::ostream& out) {
  const auto [a, kind] = load_algebra(file);
  if (order.empty()) order = a.has_binary(op::join) ? "join" : "leq";
  std::optional<FinitePoset> p;
  if (order == "join") {
    p = join_order(a);
  } else if (order == "meet") {
    p = meet_order(a.has_binary(op::meet) ? a : prepare_for_kind(a, Kind::Ibsl));
  } else if (order == "box") {
    p = box_order(a);
  } else {
    if (!a.has_relation(op::leq)) throw KindMismatch("document has no leq relation");
    const auto m = a.relation_matrix(op::leq);
    p = FinitePoset(a.size(), {m.begin(), m.end()});
  }
  std::vector<std::string> labels;
  for (int x = 0; x < a.size(); ++x) labels.push_back(a.name(x));
  const std::string dot = hasse_dot(*p, labels, order);
  if (output.empty()) {
    out << dot;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw ParseError(output + ": cannot write file", 0, 0);
    f << dot;
  }
  return kPass;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(int size, int fibers, std::uint64_t seed, const std::string& kind, std::ostream& out) {
  Rng rng(seed);
  if (kind == "ibsl") {
    out << dump(algebra_to_json(random_ibsl(rng, fibers, size), Kind::Ibsl));
  } else if (kind == "bsl") {
    out << dump(algebra_to_json(random_bisemilattice(rng, fibers, size), Kind::Bisemilattice));
  } else if (kind == "direct-system") {
    out << dump(direct_system_to_json(random_ba_system(rng, fibers, size)));
  } else {
    out << dump(direct_system_to_json(random_dl_system(rng, fibers, size)));
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite involutive bisemilattices, Płonka sums and their duals", "algctl"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", o.timing, "Report elapsed time");
  if (const char* c = std::getenv("ALGCTL_COLOR")) o.color = std::string(c) == "1";

  std::string file, file_b, kind, order, output, action;
  bool count = false, list = false;
  int size = 8, fibers = 3;
  std::uint64_t seed = 0;
  std::string gen_kind = "ibsl";

  auto* check = app.add_subcommand("check", "Validate a document against the axioms of its kind");
  check->add_option("file", file, "Document path or built-in name")->required();
  check->add_option("--kind", kind, "Validate as this kind");

  auto* dual = app.add_subcommand("dual", "Dual object of a document");
  dual->add_option("file", file)->required();

  auto* plonka = app.add_subcommand("plonka", "Płonka sum of a direct system, or decomposition of an algebra");
  plonka->add_option("action", action)->required()->check(CLI::IsMember({"sum", "decompose"}));
  plonka->add_option("file", file)->required();

  auto* hom = app.add_subcommand("hom", "Count or list homomorphisms");
  hom->add_option("a", file)->required();
  hom->add_option("b", file_b)->required();
  hom->add_option("--kind", kind);
  auto* count_flag = hom->add_flag("--count", count, "Print the number of homomorphisms");
  hom->add_flag("--list", list, "Print every homomorphism")->excludes(count_flag);

  auto* iso = app.add_subcommand("iso", "Find an isomorphism");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();
  iso->add_option("--kind", kind);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check representation and duality round trips");
  roundtrip->add_option("file", file)->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT");
  hasse->add_option("file", file)->required();
  hasse->add_option("--order", order)->check(CLI::IsMember({"join", "meet", "box", "leq"}));
  hasse->add_option("-o,--output", output, "Write the diagram to this path");

  auto* gen = app.add_subcommand("gen", "Random document built as a Płonka sum");
  gen->add_option("--size", size, "Largest fiber size")->check(CLI::Range(1, 64));
  gen->add_option("--fibers", fibers, "Largest index size")->check(CLI::Range(1, 8));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"ibsl", "bsl", "direct-system", "dl-system"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(file, kind, o, out);
    if (*dual) return cmd_dual(file, out);
    if (*plonka) return cmd_plonka(action, file, out);
    if (*hom) return cmd_hom(file, file_b, kind, list, o, out);
    if (*iso) return cmd_iso(file, file_b, kind, o, out);
    if (*roundtrip) return cmd_roundtrip(file, o, out);
    if (*hasse) return cmd_hasse(file, order, output, out);
    if (*gen) return cmd_gen(size, fibers, seed, gen_kind, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SchemaError& e) {
    err << "error: schema: " << e.what() << "\n";
    return kInputError;
  } catch (const KindMismatch& e) {
    err << "error: kind mismatch: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}

}  // namespace algkit::cli
