#pragma once

#include <stdexcept>
#include <string>

namespace leaderline {

// Input that violates a documented precondition: broken files, duplicate
// coordinates, partial labelings and the like.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The brute-force oracle refuses instances beyond its configured size.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leaderline
