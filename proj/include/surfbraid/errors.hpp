#ifndef SURFBRAID_ERRORS_HPP_
#define SURFBRAID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace surfbraid {

// Malformed text input (words, braids, matrices, homomorphisms, presentations).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A pair of images in Z x| Z that does not define a homomorphism.
class NotAHomomorphism : public std::invalid_argument {
 public:
  explicit NotAHomomorphism(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace surfbraid

#endif  // SURFBRAID_ERRORS_HPP_
