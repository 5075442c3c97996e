#pragma once

#include <stdexcept>
#include <string>

namespace flagpos {

/** Thrown when a caller violates a documented precondition or feeds bad data. */
class invalid_input : public std::runtime_error {
  public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Thrown when two independent certification routes disagree or an internal
 * consistency assertion fails.  Always a bug, never a user error.
 */
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagpos
