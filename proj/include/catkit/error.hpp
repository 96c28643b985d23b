#ifndef CATKIT_ERROR_HPP_
#define CATKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace catkit {

  // Base class for failures raised by the library itself. Precondition
  // violations on arguments (degree mismatch, index out of range, malformed
  // text) are reported with std::invalid_argument instead.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configurable size limit (element cap, word cap) was hit.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // Two routes that must agree did not. Always a bug in this library.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace catkit

#endif  // CATKIT_ERROR_HPP_
