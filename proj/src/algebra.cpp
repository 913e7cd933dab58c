#include "algkit/algebra.hpp"

#include <algorithm>

#include "algkit/errors.hpp"

namespace algkit {

FiniteAlgebra::FiniteAlgebra(int size, std::vector<std::string> names) : size_(size) {
  if (size < 1) throw InvalidAlgebra("algebra size must be positive");
  set_names(std::move(names));
}

std::string FiniteAlgebra::name(int x) const {
  if (!names_.empty()) return names_.at(static_cast<std::size_t>(x));
  return std::to_string(x);
}

void FiniteAlgebra::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != size_)
    throw InvalidAlgebra("names array has " + std::to_string(names.size()) +
                         " entries, expected " + std::to_string(size_));
  names_ = std::move(names);
}

void FiniteAlgebra::claim_symbol(std::string_view name) const {
  if (name.empty()) throw InvalidAlgebra("operation name must not be empty");
  if (has_binary(name) || has_unary(name) || has_constant(name) || has_relation(name))
    throw InvalidAlgebra("duplicate operation name '" + std::string(name) + "'");
}

void FiniteAlgebra::check_element(int x, std::string_view what) const {
  if (x < 0 || x >= size_)
    throw InvalidAlgebra(std::string(what) + ": value " + std::to_string(x) +
                         " outside carrier of size " + std::to_string(size_));
}

FiniteAlgebra& FiniteAlgebra::set_binary(std::string_view name, std::vector<int> table) {
  claim_symbol(name);
  if (table.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_))
    throw InvalidAlgebra("binary table '" + std::string(name) + "' has wrong shape");
  for (int v : table) check_element(v, name);
  binary_.emplace(std::string(name), std::move(table));
  return *this;
}

FiniteAlgebra& FiniteAlgebra::set_unary(std::string_view name, std::vector<int> map) {
  claim_symbol(name);
  if (map.size() != static_cast<std::size_t>(size_))
    throw InvalidAlgebra("unary map '" + std::string(name) + "' has wrong length");
  for (int v : map) check_element(v, name);
  unary_.emplace(std::string(name), std::move(map));
  return *this;
}

FiniteAlgebra& FiniteAlgebra::set_constant(std::string_view name, int value) {
  claim_symbol(name);
  check_element(value, name);
  constants_.emplace(std::string(name), value);
  return *this;
}

FiniteAlgebra& FiniteAlgebra::set_relation(std::string_view name,
                                           std::vector<std::uint8_t> matrix) {
  claim_symbol(name);
  if (matrix.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_))
    throw InvalidAlgebra("relation '" + std::string(name) + "' has wrong shape");
  for (auto& v : matrix) {
    if (v > 1) throw InvalidAlgebra("relation '" + std::string(name) + "' must be 0/1");
  }
  relations_.emplace(std::string(name), std::move(matrix));
  return *this;
}

namespace {
template <class M>
const auto& lookup(const M& m, std::string_view name, std::string_view what) {
  auto it = m.find(name);
  if (it == m.end())
    throw MissingOperation("missing " + std::string(what) + " '" + std::string(name) + "'");
  return it->second;
}
}  // namespace

std::span<const int> FiniteAlgebra::binary_table(std::string_view name) const {
  return lookup(binary_, name, "binary operation");
}

std::span<const int> FiniteAlgebra::unary_map(std::string_view name) const {
  return lookup(unary_, name, "unary operation");
}

std::span<const std::uint8_t> FiniteAlgebra::relation_matrix(std::string_view name) const {
  return lookup(relations_, name, "relation");
}

int FiniteAlgebra::constant(std::string_view name) const {
  return lookup(constants_, name, "constant");
}

FiniteAlgebra FiniteAlgebra::reduct(std::initializer_list<std::string_view> keep) const {
  FiniteAlgebra out(size_, names_);
  for (auto k : keep) {
    if (auto it = binary_.find(k); it != binary_.end()) out.binary_.emplace(it->first, it->second);
    if (auto it = unary_.find(k); it != unary_.end()) out.unary_.emplace(it->first, it->second);
    if (auto it = constants_.find(k); it != constants_.end())
      out.constants_.emplace(it->first, it->second);
    if (auto it = relations_.find(k); it != relations_.end())
      out.relations_.emplace(it->first, it->second);
  }
  return out;
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const {
  return size_ == other.size_ && binary_ == other.binary_ && unary_ == other.unary_ &&
         constants_ == other.constants_ && relations_ == other.relations_;
}

Map identity_map(int n) {
  Map m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return m;
}

Map compose_maps(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(static_cast<std::size_t>(f[i]));
  return out;
}

bool is_bijection(const Map& f, int codomain_size) {
  if (static_cast<int>(f.size()) != codomain_size) return false;
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= codomain_size || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Map inverse_map(const Map& bijection) {
  Map inv(bijection.size());
  for (std::size_t i = 0; i < bijection.size(); ++i)
    inv[static_cast<std::size_t>(bijection[i])] = static_cast<int>(i);
  return inv;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const Map& perm) {
  const int n = a.size();
  if (!is_bijection(perm, n)) throw InvalidAlgebra("relabel needs a permutation of the carrier");
  std::vector<std::string> names;
  if (a.has_names()) {
    names.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) names[static_cast<std::size_t>(perm[x])] = a.name(x);
  }
  FiniteAlgebra out(n, std::move(names));
  auto idx = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  for (const auto& [name, t] : a.binary_ops()) {
    std::vector<int> nt(t.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) nt[idx(perm[x], perm[y])] = perm[t[idx(x, y)]];
    out.set_binary(name, std::move(nt));
  }
  for (const auto& [name, u] : a.unary_ops()) {
    std::vector<int> nu(u.size());
    for (int x = 0; x < n; ++x) nu[static_cast<std::size_t>(perm[x])] = perm[u[x]];
    out.set_unary(name, std::move(nu));
  }
  for (const auto& [name, c] : a.constants()) out.set_constant(name, perm[c]);
  for (const auto& [name, r] : a.relations()) {
    std::vector<std::uint8_t> nr(r.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) nr[idx(perm[x], perm[y])] = r[idx(x, y)];
    out.set_relation(name, std::move(nr));
  }
  return out;
}

}  // namespace algkit
