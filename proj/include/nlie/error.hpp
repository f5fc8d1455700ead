#ifndef NLIE_ERROR_HPP
#define NLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nlie {

// Operation cannot run in the requested setting: field too small for the
// algorithm's hypothesis, infinite field where enumeration is needed, or an
// enumeration budget that would be exceeded.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A search that theory guarantees to succeed came up empty.  The message
// carries the scanned set so the failure can be diagnosed rather than guessed
// around.
class SearchExhaustedError : public std::runtime_error {
 public:
  explicit SearchExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlie

#endif
