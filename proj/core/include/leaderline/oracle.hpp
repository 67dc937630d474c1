#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leaderline/model.hpp"

namespace leaderline {

// Site limit from LEADERLINE_ORACLE_LIMIT, 8 if unset or unparsable.
int default_oracle_site_limit();

struct OracleLimits {
  int max_sites = default_oracle_site_limit();
  std::uint64_t max_assignments = 200'000'000;  // search nodes, partial assignments included
  bool prune = true;  // reject partial assignments that already violate admissibility
  bool stop_at_first = false;  // settle for the first admissible labeling found
};

struct OracleResult {
  Labeling labeling;
  Rational value;
  std::vector<int> assignment;  // candidate id per site
};

// Exhaustive search over injective site-to-candidate assignments of a fixed
// instance, one- or two-sided. Ties in value go to the lexicographically
// smallest assignment; with stop_at_first the result is just some admissible
// labeling. Throws LimitExceeded past the limits.
std::optional<OracleResult> oracle_solve(const Instance& instance, const OracleLimits& limits = {});

std::uint64_t count_admissible(const Instance& instance, const OracleLimits& limits = {});

}  // namespace leaderline
