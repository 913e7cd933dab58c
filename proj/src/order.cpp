#include "algkit/order.hpp"

#include "algkit/errors.hpp"

namespace algkit {

ValidationReport FinitePoset::check(int size, const std::vector<std::uint8_t>& leq) {
  ValidationReport r;
  if (size < 0 || leq.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    Check c{"shape", "structure", "order matrix is size x size", false, "", {}, {}};
    r.add(std::move(c));
    return r;
  }
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x * size + y)] != 0; };
  r.add(detail::check_law("reflexive", "order", "x <= x", "x", size,
                          [&](const auto& t) { return le(t[0], t[0]); }));
  r.add(detail::check_law("antisymmetric", "order", "x <= y and y <= x imply x = y", "xy", size,
                          [&](const auto& t) {
                            return !(le(t[0], t[1]) && le(t[1], t[0])) || t[0] == t[1];
                          }));
  r.add(detail::check_law("transitive", "order", "x <= y and y <= z imply x <= z", "xyz", size,
                          [&](const auto& t) {
                            return !(le(t[0], t[1]) && le(t[1], t[2])) || le(t[0], t[2]);
                          }));
  return r;
}

FinitePoset::FinitePoset(int size, std::vector<std::uint8_t> leq) : size_(size), leq_(std::move(leq)) {
  auto r = check(size_, leq_);
  if (!r.ok()) throw NotPoset("not a partial order: " + r.summary());
}

FinitePoset FinitePoset::antichain(int size) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(size * size), 0);
  for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i * size + i)] = 1;
  return FinitePoset(size, std::move(m));
}

FinitePoset FinitePoset::chain(int size) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(size * size), 0);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) m[static_cast<std::size_t>(i * size + j)] = 1;
  return FinitePoset(size, std::move(m));
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < size_ && covered; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

bool FinitePoset::is_down_set(std::uint64_t mask) const {
  for (int y = 0; y < size_; ++y) {
    if (!(mask >> y & 1U)) continue;
    for (int x = 0; x < size_; ++x)
      if (leq(x, y) && !(mask >> x & 1U)) return false;
  }
  return true;
}

bool FinitePoset::is_up_set(std::uint64_t mask) const {
  for (int x = 0; x < size_; ++x) {
    if (!(mask >> x & 1U)) continue;
    for (int y = 0; y < size_; ++y)
      if (leq(x, y) && !(mask >> y & 1U)) return false;
  }
  return true;
}

bool FinitePoset::monotone(const Map& f, const FinitePoset& target) const {
  if (static_cast<int>(f.size()) != size_) return false;
  for (int v : f)
    if (v < 0 || v >= target.size()) return false;
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      if (leq(x, y) && !target.leq(f[x], f[y])) return false;
  return true;
}

namespace {
bool extend_order_iso(const FinitePoset& a, const FinitePoset& b, Map& f,
                      std::vector<char>& used, int x) {
  if (x == a.size()) return true;
  for (int v = 0; v < b.size(); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    bool ok = true;
    for (int y = 0; y < x && ok; ++y)
      ok = a.leq(x, y) == b.leq(v, f[y]) && a.leq(y, x) == b.leq(f[y], v);
    if (!ok) continue;
    f[x] = v;
    used[static_cast<std::size_t>(v)] = 1;
    if (extend_order_iso(a, b, f, used, x + 1)) return true;
    used[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}
}  // namespace

std::optional<Map> find_order_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  Map f(static_cast<std::size_t>(a.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.size()), 0);
  if (extend_order_iso(a, b, f, used, 0)) return f;
  return std::nullopt;
}

}  // namespace algkit
