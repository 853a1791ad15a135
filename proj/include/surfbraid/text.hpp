// Small lexical helpers shared by the text formats.

#ifndef SURFBRAID_TEXT_HPP_
#define SURFBRAID_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace surfbraid::text {

// `name` or `name^exponent`.
struct Atom {
  std::string name;
  std::int64_t exponent = 1;
};

// Splits on whitespace and parses each atom.  A lone `1` yields no atom.
// Throws ParseError.
std::vector<Atom> parse_atoms(std::string_view text);

std::string_view trim(std::string_view s) noexcept;

// Strict decimal integer with optional sign.  Throws ParseError.
std::int64_t parse_int(std::string_view s);

// Splits on a single-character separator; pieces are trimmed.
std::vector<std::string_view> split(std::string_view s, char separator);

// `x`, `x^3`, `x^-2`; exponent 0 yields an empty string.
std::string format_power(std::string_view name, std::int64_t exponent);

// Pieces of `(word; first, second)` with an optional `·s` / `*s` suffix.
struct BraidText {
  std::string_view word;
  std::string_view first;
  std::string_view second;
  bool sigma = false;
};
BraidText split_braid(std::string_view text);

}  // namespace surfbraid::text

#endif  // SURFBRAID_TEXT_HPP_
