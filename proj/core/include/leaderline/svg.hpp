#pragma once

#include <string>

#include "leaderline/model.hpp"
#include "leaderline/verify.hpp"

namespace leaderline {

// Deterministic SVG drawing: boundary, sites, candidate ticks, and, given a
// labeling, leaders, labels, group bands, order arrows and red markers at
// every violation in `report`.
std::string render_svg(const Instance& instance, const Labeling* labeling = nullptr,
                       const VerifyReport* report = nullptr);

}  // namespace leaderline
