#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Raised when an operation cannot deliver its contract for the given inputs
// even though they are individually valid: e.g. a tail bound is required but
// the series carries no boundedness tag, or a summation fails to converge
// within its iteration cap.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the named-radius conveniences when the defining equation has no
// root in (0, 1): the weighted condition either holds on the whole interval
// or fails everywhere. The generic solver reports this as a plain result
// instead of throwing.
class no_radius_error : public std::runtime_error {
 public:
  explicit no_radius_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bohr
