#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algkit/order.hpp"

namespace algkit {

/// Graphviz digraph of the covering relation, drawn bottom to top. Nodes are
/// n0..n{k-1} in carrier order; `labels` may be empty.
std::string hasse_dot(const FinitePoset& p, const std::vector<std::string>& labels = {},
                      std::string_view graph_name = "hasse");

}  // namespace algkit
