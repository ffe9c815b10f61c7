#pragma once

#include <stdexcept>
#include <string>

namespace sl2q {

// Bad user input: unparseable group or class, unsupported rank, index out of
// range, violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal or shipped data is inconsistent (two routes disagree, a table is
// malformed, a gcd is not a power of (x - d)).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sl2q
