#pragma once

#include <string>

#include "gorder/graph.hpp"

namespace gorder {

/// graph6 ASCII encoding (the standard one: n in N(n) form, upper-triangle
/// bits column by column, six bits per printable character offset by 63).
std::string to_graph6(const LabelledGraph& g);
std::string to_graph6(const CanonicalGraph& g);
LabelledGraph from_graph6(const std::string& text);

/// Accepts either a raw graph6 string or one prefixed with "g6:".
LabelledGraph parse_graph_arg(const std::string& arg);

std::string to_dot(const LabelledGraph& g, const std::string& name = "g");

}  // namespace gorder
