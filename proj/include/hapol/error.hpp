#pragma once

#include <stdexcept>
#include <string>

namespace hapol {

enum class ErrorKind {
  InvalidArgument,  // violated precondition (ordering, positivity, ranges)
  Degenerate,       // coincident points or a degenerate configuration
  OffCurve,         // point does not lie on the given geodesic
  OnAxis,           // point on the y-axis where the locus is undefined
  SearchFailed,     // witness search found no sign change
  NoStraddle,       // calibration bracket does not straddle the target
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hapol
