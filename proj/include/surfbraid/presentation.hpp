// Formal words over named generators, finite presentations, and evaluation of
// formal words in a concrete group model.

#ifndef SURFBRAID_PRESENTATION_HPP_
#define SURFBRAID_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfbraid {

// x^e by repeated multiplication; T{} is the identity and inverse(T) is found
// by argument-dependent lookup.
template <class T>
T power(const T& x, std::int64_t exponent) {
  T base = exponent < 0 ? inverse(x) : x;
  T result{};
  for (std::int64_t e = std::llabs(exponent); e > 0; --e) {
    result = result * base;
  }
  return result;
}

struct FormalLetter {
  std::size_t generator = 0;
  std::int8_t sign = 1;

  friend bool operator==(FormalLetter, FormalLetter) = default;
};

// Not necessarily reduced.
using FormalWord = std::vector<FormalLetter>;

FormalWord formal_inverse(const FormalWord& w);
FormalWord freely_reduce(const FormalWord& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FormalWord> relators;

  // Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
};

// Word syntax with named generators, e.g. `a1 sigma^-1 a1^2`; `1` is empty.
// Throws ParseError on unknown generators.
FormalWord parse_formal_word(std::string_view text,
                             std::span<const std::string> generators);
std::string to_string(const FormalWord& w, std::span<const std::string> generators);

// File format: first non-blank line lists the generators, every further
// non-blank line is one relator.  Text after `#` is a comment.
// A relator line of the form `lhs = rhs` is read as lhs rhs^-1.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

// Substitutes `values[i]` for generator i and multiplies out.
template <class T>
T evaluate(const FormalWord& w, std::span<const T> values) {
  T result{};
  for (const FormalLetter& l : w) {
    const T& v = values[l.generator];
    result = l.sign > 0 ? result * v : result * inverse(v);
  }
  return result;
}

}  // namespace surfbraid

#endif  // SURFBRAID_PRESENTATION_HPP_
