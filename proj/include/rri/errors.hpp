#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rri {

/* Violated operation precondition or invalid user-supplied data.
 * The CLI maps these to exit code 1. */
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/* Broken internal invariant: something the engine guarantees by construction
 * failed to hold. The CLI maps these to exit code 2. */
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/* Syntax error in a polynomial payload; pos is a 0-based offset into the text. */
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"),
        pos(p) {}
};

}  // namespace rri
