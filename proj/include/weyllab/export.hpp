#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weyllab/poset.hpp"

namespace weyllab {

/// Hasse diagram in Graphviz DOT, bottom to top, one node per element.
std::string to_dot(const GradedPoset& poset, const std::vector<std::string>& labels, std::string_view name);

/// {"elements": [...], "ranks": [...], "covers": [[lower, upper], ...]}
std::string to_json(const GradedPoset& poset, const std::vector<std::string>& labels);

}  // namespace weyllab
