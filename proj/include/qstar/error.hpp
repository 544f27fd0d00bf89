#pragma once

#include <stdexcept>
#include <string>

namespace qstar {

/// Raised for contract violations: bad indices, mismatched rings, failed
/// preconditions of a verification pipeline.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qstar
