// Reduced words in the free group of rank 2.
//
// The two generators are abstract; the torus model calls them x, y and the
// Klein bottle model calls them u, v.  A FreeWord is always freely reduced, so
// structural equality is equality in the free group.

#ifndef SURFBRAID_FREE_WORD_HPP_
#define SURFBRAID_FREE_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfbraid {

enum class Generator : std::uint8_t { first = 0, second = 1 };

struct Letter {
  Generator generator = Generator::first;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept {
    return Letter{generator, static_cast<std::int8_t>(-sign)};
  }
  constexpr bool cancels(Letter other) const noexcept {
    return generator == other.generator && sign == -other.sign;
  }
  // Position in the enumeration order g1 < g1^-1 < g2 < g2^-1.
  constexpr int rank() const noexcept {
    return 2 * static_cast<int>(generator) + (sign < 0 ? 1 : 0);
  }
  static constexpr Letter from_rank(int rank) noexcept {
    return Letter{static_cast<Generator>(rank / 2),
                  static_cast<std::int8_t>(rank % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
};

// Names used to print and parse words.
struct Alphabet {
  std::string_view first;
  std::string_view second;

  std::string_view name(Generator g) const noexcept {
    return g == Generator::first ? first : second;
  }
};

inline constexpr Alphabet kTorusAlphabet{"x", "y"};
inline constexpr Alphabet kKleinAlphabet{"u", "v"};

class FreeWord {
 public:
  FreeWord() = default;

  // Freely reduces an arbitrary letter sequence.
  static FreeWord reduce(std::span<const Letter> letters);
  // g^exponent.
  static FreeWord power_of(Generator g, std::int64_t exponent);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  FreeWord inverse() const;
  // w(g1^-1, g2^-1): flips every exponent in place, order preserved.
  FreeWord invert_letters() const;
  FreeWord pow(std::int64_t exponent) const;

  std::int64_t exponent_sum(Generator g) const noexcept;
  // True iff w(g1, g2) = w(g1^-1, g2^-1)^-1, i.e. w reads the same backwards.
  bool is_palindrome() const noexcept;

  // Image under the endomorphism g1 -> image_first, g2 -> image_second.
  FreeWord substitute(const FreeWord& image_first,
                      const FreeWord& image_second) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  void push(Letter l);

  std::vector<Letter> letters_;
};

// Length-then-lexicographic order with g1 < g1^-1 < g2 < g2^-1.
bool shortlex_less(const FreeWord& lhs, const FreeWord& rhs) noexcept;

inline FreeWord inverse(const FreeWord& w) { return w.inverse(); }

// Number of reduced words of length exactly `length`: 4 * 3^(length-1).
std::uint64_t reduced_word_count(std::size_t length) noexcept;

// Every reduced word of length <= max_length, each once, in shortlex order.
std::vector<FreeWord> enumerate_reduced(std::size_t max_length);

// Streaming form of enumerate_reduced; stops early when `visit` returns false.
void for_each_reduced(std::size_t max_length,
                      const std::function<bool(const FreeWord&)>& visit);

// Text form: whitespace-separated atoms `x`, `x^-1`, `y^3`; `1` is the
// identity.  Unreduced input is accepted.  Throws ParseError.
FreeWord parse_word(std::string_view text, const Alphabet& alphabet);
// Reduced, run-length collapsed text; the identity prints as `1`.
std::string to_string(const FreeWord& w, const Alphabet& alphabet);

}  // namespace surfbraid

#endif  // SURFBRAID_FREE_WORD_HPP_
