#pragma once

#include <stdexcept>
#include <string>

namespace reptopo {

/// Thrown when caller-supplied data violates a documented precondition
/// (bad indices, malformed files, inconsistent tags). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace reptopo
