#include "algkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace algkit {

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

int get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > 1'000'000) throw SchemaError(path, "integer out of range");
  return static_cast<int>(x);
}

const Json& field(const Json& doc, std::string_view key, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
  auto it = doc.find(std::string(key));
  if (it == doc.end()) throw SchemaError(path, "missing field '" + std::string(key) + "'");
  return *it;
}

std::vector<int> int_vector(const Json& v, int len, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  if (len >= 0 && static_cast<int>(v.size()) != len)
    throw SchemaError(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], child(path, i)));
  return out;
}

std::vector<int> square_table(const Json& v, int n, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto row = int_vector(v[i], n, child(path, i));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::uint8_t> relation(const Json& v, int n, const std::string& path) {
  std::vector<std::uint8_t> out;
  for (int x : square_table(v, n, path)) {
    if (x > 1) throw SchemaError(path, "relation entries must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(x));
  }
  return out;
}

Json table_json(std::span<const int> t, int n) {
  Json rows = Json::array();
  for (int x = 0; x < n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < n; ++y) row.push_back(t[static_cast<std::size_t>(x * n + y)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json relation_json(std::span<const std::uint8_t> r, int n) {
  Json rows = Json::array();
  for (int x = 0; x < n; ++x) {
    Json row = Json::array();
    for (int y = 0; y < n; ++y) row.push_back(static_cast<int>(r[static_cast<std::size_t>(x * n + y)]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> read_names(const Json& doc, int n, const std::string& path) {
  auto it = doc.find("names");
  if (it == doc.end()) return {};
  if (!it->is_array() || static_cast<int>(it->size()) != n)
    throw SchemaError(child(path, "names"), "expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) throw SchemaError(child(child(path, "names"), i), "expected a string");
    names.push_back((*it)[i].get<std::string>());
  }
  return names;
}

int read_size(const Json& doc, const std::string& path, bool allow_zero) {
  const int n = get_int(field(doc, "size", path), child(path, "size"));
  if (n == 0 && !allow_zero) throw SchemaError(child(path, "size"), "size must be positive");
  return n;
}

// Runs a setter, turning library validation errors into schema errors at `path`.
template <class F>
void at(const std::string& path, F&& f) {
  try {
    f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

FiniteAlgebra gr_from_json(const Json& doc, const std::string& path) {
  const int n = read_size(doc, path, false);
  FiniteAlgebra a(n, read_names(doc, n, path));
  at(child(path, "star"), [&] { a.set_binary(op::star, square_table(field(doc, "star", path), n, child(path, "star"))); });
  at(child(path, "leq"), [&] { a.set_relation(op::leq, relation(field(doc, "leq", path), n, child(path, "leq"))); });
  for (auto c : {op::c0, op::c1, op::calpha}) {
    const std::string p = child(path, c);
    at(p, [&] { a.set_constant(c, get_int(field(doc, c, path), p)); });
  }
  if (doc.contains("neg"))
    at(child(path, "neg"), [&] { a.set_unary(op::neg, int_vector(doc["neg"], n, child(path, "neg"))); });
  return a;
}

FiniteAlgebra algebra_from_json_at(const Json& doc, const std::string& path) {
  const std::string kind = field(doc, "kind", path).is_string() ? doc["kind"].get<std::string>() : "";
  if (kind == "gr" || kind == "igr") return gr_from_json(doc, path);
  if (kind == "poset") {
    const int n = read_size(doc, path, true);
    if (n == 0) throw SchemaError(child(path, "size"), "an empty poset has no algebra form");
    FiniteAlgebra a(n, read_names(doc, n, path));
    at(child(path, "leq"), [&] { a.set_relation(op::leq, relation(field(doc, "leq", path), n, child(path, "leq"))); });
    return a;
  }
  if (kind != "ibsl" && kind != "ba" && kind != "bsl" && kind != "dl" && kind != "sl")
    throw SchemaError(child(path, "kind"), "expected an algebra kind (ibsl, ba, bsl, dl, sl, gr, poset)");
  const int n = read_size(doc, path, false);
  FiniteAlgebra a(n, read_names(doc, n, path));
  const Json& ops = field(doc, "ops", path);
  if (!ops.is_object()) throw SchemaError(child(path, "ops"), "expected an object");
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    const std::string p = child(child(path, "ops"), it.key());
    const Json& v = it.value();
    at(p, [&] {
      if (v.is_number()) {
        a.set_constant(it.key(), get_int(v, p));
      } else if (v.is_array() && !v.empty() && v[0].is_array()) {
        a.set_binary(it.key(), square_table(v, n, p));
      } else if (v.is_array()) {
        a.set_unary(it.key(), int_vector(v, n, p));
      } else {
        throw SchemaError(p, "expected a table, a map or a constant");
      }
    });
  }
  return a;
}

std::pair<int, int> parse_arrow(const std::string& key, const std::string& path) {
  const auto pos = key.find("->");
  if (pos == std::string::npos) throw SchemaError(path, "arrow keys look like \"i->j\"");
  try {
    std::size_t used = 0;
    const int i = std::stoi(key.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument(key);
    const std::string rest = key.substr(pos + 2);
    const int j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw SchemaError(path, "arrow keys look like \"i->j\"");
  }
}

ArrowMap arrows_from_json(const Json& v, const std::string& path) {
  if (!v.is_object()) throw SchemaError(path, "expected an object of arrows");
  ArrowMap out;
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string p = child(path, it.key());
    out.emplace(parse_arrow(it.key(), p), int_vector(it.value(), -1, p));
  }
  return out;
}

Json arrows_json(const ArrowMap& arrows) {
  Json out = Json::object();
  for (const auto& [key, f] : arrows) {
    if (key.first == key.second) continue;
    out[std::to_string(key.first) + "->" + std::to_string(key.second)] = map_to_json(f);
  }
  return out;
}

template <class T>
std::vector<T> indexed_objects(const Json& v, int k, const std::string& path, T (*load)(const Json&, const std::string&)) {
  if (!v.is_object()) throw SchemaError(path, "expected an object keyed by index element");
  if (static_cast<int>(v.size()) != k)
    throw SchemaError(path, "expected one entry per index element (" + std::to_string(k) + ")");
  std::vector<T> out;
  for (int i = 0; i < k; ++i) {
    const std::string key = std::to_string(i);
    if (!v.contains(key)) throw SchemaError(path, "missing entry \"" + key + "\"");
    out.push_back(load(v[key], child(path, key)));
  }
  return out;
}

FinitePoset poset_at(const Json& doc, const std::string& path) {
  const int n = read_size(doc, path, true);
  std::vector<std::uint8_t> leq = n == 0 ? std::vector<std::uint8_t>{} : relation(field(doc, "leq", path), n, child(path, "leq"));
  try {
    return FinitePoset(n, std::move(leq));
  } catch (const Error& e) {
    throw SchemaError(child(path, "leq"), e.what());
  }
}

FiniteSpace space_at(const Json& doc, const std::string& path) { return FiniteSpace{read_size(doc, path, true)}; }

JoinSemilattice semilattice_at(const Json& doc, const std::string& path) {
  FiniteAlgebra a = algebra_from_json_at(doc, path);
  try {
    return JoinSemilattice(a);
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

void require_kind(const Json& doc, std::string_view kind) {
  const std::string k = document_kind(doc);
  if (k != kind) throw SchemaError("/kind", "expected \"" + std::string(kind) + "\", got \"" + k + "\"");
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    const int column = static_cast<int>(byte - line_start) + 1;
    std::string reason = e.what();
    if (auto pos = reason.find(": ", reason.find("column")); pos != std::string::npos) reason = reason.substr(pos + 2);
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason,
                     line, column);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string document_kind(const Json& doc) {
  const Json& k = field(doc, "kind", "");
  if (!k.is_string()) throw SchemaError("/kind", "expected a string");
  return k.get<std::string>();
}

FiniteAlgebra algebra_from_json(const Json& doc) { return algebra_from_json_at(doc, ""); }

Json algebra_to_json(const FiniteAlgebra& a, Kind kind) {
  Json out = Json::object();
  const int n = a.size();
  if (kind == Kind::Gr || kind == Kind::Igr) {
    out["kind"] = "gr";
    out["size"] = n;
    if (a.has_names()) out["names"] = a.names();
    out["star"] = table_json(a.binary_table(op::star), n);
    out["leq"] = relation_json(a.relation_matrix(op::leq), n);
    out["c0"] = a.constant(op::c0);
    out["c1"] = a.constant(op::c1);
    out["calpha"] = a.constant(op::calpha);
    if (a.has_unary(op::neg)) out["neg"] = map_to_json(Map(a.unary_map(op::neg).begin(), a.unary_map(op::neg).end()));
    return out;
  }
  if (kind == Kind::Poset) {
    out["kind"] = "poset";
    out["size"] = n;
    if (a.has_names()) out["names"] = a.names();
    out["leq"] = relation_json(a.relation_matrix(op::leq), n);
    return out;
  }
  out["kind"] = std::string(to_string(kind));
  out["size"] = n;
  if (a.has_names()) out["names"] = a.names();
  Json ops = Json::object();
  for (const auto& [name, t] : a.binary_ops()) ops[name] = table_json(t, n);
  for (const auto& [name, u] : a.unary_ops()) ops[name] = map_to_json(u);
  for (const auto& [name, c] : a.constants()) ops[name] = c;
  out["ops"] = std::move(ops);
  return out;
}

FinitePoset poset_from_json(const Json& doc) {
  require_kind(doc, "poset");
  return poset_at(doc, "");
}

Json poset_to_json(const FinitePoset& p) {
  Json out = Json::object();
  out["kind"] = "poset";
  out["size"] = p.size();
  out["leq"] = relation_json(p.matrix(), p.size());
  return out;
}

JoinSemilattice semilattice_from_json(const Json& doc) { return semilattice_at(doc, ""); }

DirectSystemParts direct_system_parts_from_json(const Json& doc) {
  require_kind(doc, "direct-system");
  JoinSemilattice index = semilattice_at(field(doc, "index", ""), "/index");
  const int k = index.size();
  const Json& fibers_json = field(doc, "fibers", "");
  auto load = [](const Json& v, const std::string& p) { return algebra_from_json_at(v, p); };
  std::vector<FiniteAlgebra> fibers = indexed_objects<FiniteAlgebra>(fibers_json, k, "/fibers", +load);
  Kind kind = Kind::Boolean;
  const bool explicit_kind = doc.contains("fiber_kind");
  const std::string path = explicit_kind ? "/fiber_kind" : "/fibers/0/kind";
  const Json& tag = explicit_kind ? doc["fiber_kind"] : fibers_json["0"]["kind"];
  if (!tag.is_string()) throw SchemaError(path, "expected a string");
  try {
    kind = kind_from_string(tag.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
  ArrowMap transitions = doc.contains("transitions") ? arrows_from_json(doc["transitions"], "/transitions") : ArrowMap{};
  return DirectSystemParts{std::move(index), kind, std::move(fibers), std::move(transitions)};
}

DirectSystem direct_system_from_json(const Json& doc) {
  DirectSystemParts p = direct_system_parts_from_json(doc);
  return DirectSystem(std::move(p.index), p.fiber_kind, std::move(p.fibers), std::move(p.transitions));
}

Json direct_system_to_json(const DirectSystem& s) {
  Json out = Json::object();
  out["kind"] = "direct-system";
  out["fiber_kind"] = std::string(to_string(s.fiber_kind()));
  out["index"] = algebra_to_json(s.index().algebra(), Kind::Semilattice);
  Json fibers = Json::object();
  for (int i = 0; i < s.index().size(); ++i) fibers[std::to_string(i)] = algebra_to_json(s.fiber(i), s.fiber_kind());
  out["fibers"] = std::move(fibers);
  out["transitions"] = arrows_json(s.transitions());
  return out;
}

InverseSystemParts inverse_system_parts_from_json(const Json& doc) {
  require_kind(doc, "inverse-system");
  JoinSemilattice index = semilattice_at(field(doc, "index", ""), "/index");
  const int k = index.size();
  const Json& terms_json = field(doc, "terms", "");
  ArrowMap bondings = doc.contains("bondings") ? arrows_from_json(doc["bondings"], "/bondings") : ArrowMap{};
  bool posets = false;
  if (terms_json.is_object())
    for (const auto& t : terms_json)
      if (t.is_object() && t.contains("kind") && t["kind"] == "poset") posets = true;
  if (posets) {
    auto load = [](const Json& v, const std::string& p) { return poset_at(v, p); };
    return InverseSystemParts{std::move(index), indexed_objects<FinitePoset>(terms_json, k, "/terms", +load),
                              std::move(bondings)};
  }
  auto load = [](const Json& v, const std::string& p) { return space_at(v, p); };
  return InverseSystemParts{std::move(index), indexed_objects<FiniteSpace>(terms_json, k, "/terms", +load),
                            std::move(bondings)};
}

AnyInverseSystem inverse_system_from_json(const Json& doc) {
  InverseSystemParts p = inverse_system_parts_from_json(doc);
  if (auto* spaces = std::get_if<std::vector<FiniteSpace>>(&p.terms))
    return StoneSystem(std::move(p.index), std::move(*spaces), std::move(p.bondings));
  return PriestleySystem(std::move(p.index), std::get<std::vector<FinitePoset>>(std::move(p.terms)),
                         std::move(p.bondings));
}

Json inverse_system_to_json(const StoneSystem& s) {
  Json out = Json::object();
  out["kind"] = "inverse-system";
  out["index"] = algebra_to_json(s.index().algebra(), Kind::Semilattice);
  Json terms = Json::object();
  for (int i = 0; i < s.index().size(); ++i) {
    Json t = Json::object();
    t["kind"] = "space";
    t["size"] = s.term(i).size;
    terms[std::to_string(i)] = std::move(t);
  }
  out["terms"] = std::move(terms);
  out["bondings"] = arrows_json(s.bondings());
  return out;
}

Json inverse_system_to_json(const PriestleySystem& s) {
  Json out = Json::object();
  out["kind"] = "inverse-system";
  out["index"] = algebra_to_json(s.index().algebra(), Kind::Semilattice);
  Json terms = Json::object();
  for (int i = 0; i < s.index().size(); ++i) terms[std::to_string(i)] = poset_to_json(s.term(i));
  out["terms"] = std::move(terms);
  out["bondings"] = arrows_json(s.bondings());
  return out;
}

Json map_to_json(const Map& m) {
  Json out = Json::array();
  for (int v : m) out.push_back(v);
  return out;
}

Json report_to_json(const ValidationReport& r, const FiniteAlgebra* names_from) {
  Json out = Json::object();
  out["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json j = Json::object();
    j["name"] = c.name;
    j["category"] = c.category;
    j["statement"] = c.statement;
    j["passed"] = c.passed;
    if (!c.witness.empty()) {
      j["witness"] = map_to_json(c.witness);
      j["witness_text"] = format_witness(c, names_from);
    }
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace algkit
