#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "algkit/algebra.hpp"
#include "algkit/errors.hpp"
#include "algkit/homs.hpp"
#include "algkit/order.hpp"
#include "algkit/report.hpp"
#include "algkit/systems.hpp"

namespace algkit {

using Json = nlohmann::ordered_json;

/// Malformed JSON text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column) : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed JSON that does not match the document schema. `path` is a
/// JSON pointer to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Parses text; `source` names the input in messages.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::string& path);

/// Value of the "kind" field. Throws SchemaError.
std::string document_kind(const Json& doc);

/// Algebra documents of kind ibsl, ba, bsl, dl, sl, as well as gr and poset
/// documents, loaded as a FiniteAlgebra.
FiniteAlgebra algebra_from_json(const Json& doc);
/// Kind tag selects the layout: gr and igr use the GR layout (kind "gr"),
/// poset the poset layout, everything else the "ops" layout.
Json algebra_to_json(const FiniteAlgebra& a, Kind kind);

FinitePoset poset_from_json(const Json& doc);
Json poset_to_json(const FinitePoset& p);

JoinSemilattice semilattice_from_json(const Json& doc);

/// Unvalidated pieces of a system document, for reporting rather than throwing.
struct DirectSystemParts {
  JoinSemilattice index;
  Kind fiber_kind;
  std::vector<FiniteAlgebra> fibers;
  ArrowMap transitions;
};
struct InverseSystemParts {
  JoinSemilattice index;
  std::variant<std::vector<FiniteSpace>, std::vector<FinitePoset>> terms;
  ArrowMap bondings;
};
DirectSystemParts direct_system_parts_from_json(const Json& doc);
InverseSystemParts inverse_system_parts_from_json(const Json& doc);

DirectSystem direct_system_from_json(const Json& doc);
Json direct_system_to_json(const DirectSystem& s);

using AnyInverseSystem = std::variant<StoneSystem, PriestleySystem>;
/// Terms given as {"size": n} (or {"kind":"space",...}) make a Stone system,
/// poset documents a Priestley system.
AnyInverseSystem inverse_system_from_json(const Json& doc);
Json inverse_system_to_json(const StoneSystem& s);
Json inverse_system_to_json(const PriestleySystem& s);

Json map_to_json(const Map& m);
Json report_to_json(const ValidationReport& r, const FiniteAlgebra* names_from = nullptr);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace algkit
