#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/report.hpp"

namespace algkit {

/// Finite partially ordered set on {0..size-1}; size 0 is allowed (the empty poset).
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Validates reflexivity, antisymmetry and transitivity; throws NotPoset.
  FinitePoset(int size, std::vector<std::uint8_t> leq);

  static FinitePoset antichain(int size);
  static FinitePoset chain(int size);
  /// Checks the partial-order laws without throwing.
  static ValidationReport check(int size, const std::vector<std::uint8_t>& leq);

  int size() const { return size_; }
  bool leq(int x, int y) const {
    return leq_[static_cast<std::size_t>(x * size_ + y)] != 0;
  }
  const std::vector<std::uint8_t>& matrix() const { return leq_; }

  /// Covering pairs (x, y): x < y with nothing strictly between, sorted.
  std::vector<std::pair<int, int>> covers() const;
  bool is_down_set(std::uint64_t mask) const;
  bool is_up_set(std::uint64_t mask) const;
  bool monotone(const Map& f, const FinitePoset& target) const;

  bool operator==(const FinitePoset&) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// Order isomorphism search (bijections preserving and reflecting order), first
/// in lexicographic order of the value vector.
std::optional<Map> find_order_isomorphism(const FinitePoset& a, const FinitePoset& b);

}  // namespace algkit
