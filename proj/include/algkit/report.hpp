#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace algkit {

class FiniteAlgebra;

/// Outcome of one identity or structural condition.
struct Check {
  std::string name;       // short id, e.g. "I6"
  std::string category;   // "axiom", "derived", "structure", ...
  std::string statement;  // human-readable law
  bool passed = true;
  std::string variables;  // one letter per witness position, e.g. "xy"
  std::vector<int> witness;
  std::string note;
};

/// Ordered list of checks. At most one witness per check: the
/// lexicographically first violating tuple.
class ValidationReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add_all(const ValidationReport& other, std::string_view prefix = {});

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check> violations() const;
  const Check* find(std::string_view name) const;

  /// One line per failed check, for exception messages.
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

/// Renders a witness as "x=1, y=0", using element names when available.
std::string format_witness(const Check& c, const FiniteAlgebra* names_from = nullptr);

namespace detail {

/// Runs `holds` over all tuples of {0..n-1}^arity in lexicographic order and
/// records the first failing tuple.
template <class Pred>
Check check_law(std::string name, std::string category, std::string statement,
                std::string variables, int n, Pred&& holds) {
  Check c{std::move(name), std::move(category), std::move(statement), true,
          std::move(variables), {}, {}};
  const int arity = static_cast<int>(c.variables.size());
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  if (n <= 0) return c;
  while (true) {
    if (!holds(static_cast<const std::vector<int>&>(t))) {
      c.passed = false;
      c.witness = t;
      return c;
    }
    int k = arity - 1;
    while (k >= 0 && ++t[static_cast<std::size_t>(k)] == n) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return c;
  }
}

}  // namespace detail
}  // namespace algkit
