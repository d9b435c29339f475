#pragma once

#include <stdexcept>
#include <string>

namespace apnforge {

/// Input violates an operation's stated hypothesis (non-APN, wrong parity of n,
/// malformed parameters, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold failed at runtime. Always a bug
/// signal rather than a property of the input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed truth-table or polynomial file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apnforge
