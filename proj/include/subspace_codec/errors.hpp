#pragma once

#include <stdexcept>
#include <string>

namespace subcodec {

/// Raised when a request falls outside the regime a decoder or channel
/// supports (radius violated, deletions fed to an insertion-only decoder,
/// infeasible channel parameters). Maps to CLI exit code 2.
class RegimeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant that should be unreachable fails.
/// Maps to CLI exit code 3.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace subcodec
