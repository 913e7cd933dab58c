#include "algkit/dot.hpp"

#include <sstream>

namespace algkit {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FinitePoset& p, const std::vector<std::string>& labels, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int x = 0; x < p.size(); ++x) {
    const std::string label = static_cast<std::size_t>(x) < labels.size() ? labels[static_cast<std::size_t>(x)] : std::to_string(x);
    os << "  n" << x << " [label=" << quoted(label) << "];\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace algkit
