#include "algkit/report.hpp"

#include <sstream>

#include "algkit/algebra.hpp"

namespace algkit {

void ValidationReport::add_all(const ValidationReport& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = std::string(prefix) + c.name;
    checks_.push_back(std::move(c));
  }
}

bool ValidationReport::ok() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::vector<Check> ValidationReport::violations() const {
  std::vector<Check> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

const Check* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks_) {
    if (c.passed) continue;
    if (!first) os << "; ";
    first = false;
    os << c.name << " (" << c.statement << ")";
    if (!c.witness.empty()) os << " at " << format_witness(c);
    if (!c.note.empty()) os << ": " << c.note;
  }
  return os.str();
}

std::string format_witness(const Check& c, const FiniteAlgebra* names_from) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.witness.size(); ++i) {
    if (i) os << ", ";
    if (i < c.variables.size())
      os << c.variables[i] << "=";
    const int v = c.witness[i];
    if (names_from && v >= 0 && v < names_from->size())
      os << names_from->name(v);
    else
      os << v;
  }
  return os.str();
}

}  // namespace algkit
