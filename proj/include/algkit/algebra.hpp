#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace algkit {

/// A total function between carriers {0..n-1} -> {0..m-1}, stored as its value vector.
using Map = std::vector<int>;

/// Conventional operation names shared by every algebra kind.
namespace op {
inline constexpr std::string_view join = "join";
inline constexpr std::string_view meet = "meet";
inline constexpr std::string_view neg = "neg";
inline constexpr std::string_view zero = "zero";
inline constexpr std::string_view one = "one";
inline constexpr std::string_view bottom = "bottom";
inline constexpr std::string_view star = "star";
inline constexpr std::string_view c0 = "c0";
inline constexpr std::string_view c1 = "c1";
inline constexpr std::string_view calpha = "calpha";
inline constexpr std::string_view leq = "leq";
}  // namespace op

/// Finite structure on the carrier {0, ..., size-1}.
///
/// Holds named binary tables (row-major, row = first argument), unary maps,
/// constants and binary relations. Every structure the library manipulates,
/// from Boolean algebras to GR spaces, is encoded this way; display names are
/// metadata and never take part in equality of tables.
class FiniteAlgebra {
 public:
  template <class T>
  using Named = std::map<std::string, T, std::less<>>;

  explicit FiniteAlgebra(int size, std::vector<std::string> names = {});

  int size() const { return size_; }
  const std::vector<std::string>& names() const { return names_; }
  bool has_names() const { return !names_.empty(); }
  /// Display label of an element, falling back to its index.
  std::string name(int x) const;
  void set_names(std::vector<std::string> names);

  FiniteAlgebra& set_binary(std::string_view name, std::vector<int> table);
  FiniteAlgebra& set_unary(std::string_view name, std::vector<int> map);
  FiniteAlgebra& set_constant(std::string_view name, int value);
  FiniteAlgebra& set_relation(std::string_view name, std::vector<std::uint8_t> matrix);

  bool has_binary(std::string_view name) const { return binary_.contains(name); }
  bool has_unary(std::string_view name) const { return unary_.contains(name); }
  bool has_constant(std::string_view name) const { return constants_.contains(name); }
  bool has_relation(std::string_view name) const { return relations_.contains(name); }

  // Lookups throw MissingOperation when the symbol is absent.
  std::span<const int> binary_table(std::string_view name) const;
  std::span<const int> unary_map(std::string_view name) const;
  std::span<const std::uint8_t> relation_matrix(std::string_view name) const;
  int constant(std::string_view name) const;

  int apply(std::string_view name, int x, int y) const {
    return binary_table(name)[static_cast<std::size_t>(x * size_ + y)];
  }
  int apply(std::string_view name, int x) const {
    return unary_map(name)[static_cast<std::size_t>(x)];
  }
  bool related(std::string_view name, int x, int y) const {
    return relation_matrix(name)[static_cast<std::size_t>(x * size_ + y)] != 0;
  }

  const Named<std::vector<int>>& binary_ops() const { return binary_; }
  const Named<std::vector<int>>& unary_ops() const { return unary_; }
  const Named<int>& constants() const { return constants_; }
  const Named<std::vector<std::uint8_t>>& relations() const { return relations_; }

  /// Copy keeping only the listed symbols (any of the four symbol classes).
  FiniteAlgebra reduct(std::initializer_list<std::string_view> keep) const;

  /// Equality of size and all symbol tables; names are ignored.
  bool same_structure(const FiniteAlgebra& other) const;
  bool operator==(const FiniteAlgebra& other) const = default;

 private:
  void claim_symbol(std::string_view name) const;
  void check_element(int x, std::string_view what) const;

  int size_;
  std::vector<std::string> names_;
  Named<std::vector<int>> binary_;
  Named<std::vector<int>> unary_;
  Named<int> constants_;
  Named<std::vector<std::uint8_t>> relations_;
};

/// Identity map on {0..n-1}.
Map identity_map(int n);
/// (g . f)(x) = g(f(x)).
Map compose_maps(const Map& g, const Map& f);
bool is_bijection(const Map& f, int codomain_size);
Map inverse_map(const Map& bijection);

/// Transport an algebra along a bijection `perm` (old element x becomes perm[x]).
FiniteAlgebra relabel(const FiniteAlgebra& a, const Map& perm);

}  // namespace algkit
