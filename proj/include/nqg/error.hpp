#pragma once

#include <stdexcept>
#include <string>

namespace nqg {

/// Malformed user input: bad spec strings, ids out of range, invalid tables.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation refused because it would exceed a configured size ceiling.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nqg
