#pragma once

#include <stdexcept>
#include <string>

namespace fringe {

/// Raised when a result cannot be extracted from otherwise valid data
/// (e.g. too few fringes to measure a spacing). Distinct from the
/// std::domain_error / std::invalid_argument family used for bad inputs,
/// so callers can map the two classes to different exit codes.
class analysis_error : public std::runtime_error {
 public:
  explicit analysis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fringe
