#pragma once

#include <stdexcept>
#include <string>

namespace sumgap {

// Malformed or out-of-domain input: composite modulus, values outside [0,1],
// residues out of range, violated operation preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search that is allowed to come up empty did so (e.g. no unique
// difference exists in B1 - B2).
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven inequality or identity failed on a concrete instance. Should never
// be raised; if it is, the offending instance is the interesting output.
class FalsificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sumgap
