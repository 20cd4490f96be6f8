#pragma once

#include <stdexcept>
#include <string>

namespace qmagic {

/// Thrown when a requested computation exceeds a configured dimension or
/// enumeration limit.  The message carries the exact offending count.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmagic
