#pragma once

#include <stdexcept>
#include <string>

namespace bitmetric {

// Raised by every text parser in the library. The message is a single line
// naming the offending token.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bitmetric
