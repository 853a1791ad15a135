#include "surfbraid/free_word.hpp"

#include <algorithm>
#include <cstdlib>

#include "surfbraid/errors.hpp"
#include "surfbraid/text.hpp"

namespace surfbraid {

namespace {

// Parsed words larger than this are rejected rather than materialised.
constexpr std::int64_t kMaxParsedLength = 1'000'000;

}  // namespace

void FreeWord::push(Letter l) {
  if (!letters_.empty() && letters_.back().cancels(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::reduce(std::span<const Letter> letters) {
  FreeWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    w.push(l);
  }
  return w;
}

FreeWord FreeWord::power_of(Generator g, std::int64_t exponent) {
  std::vector<Letter> letters(static_cast<std::size_t>(std::llabs(exponent)),
                              Letter{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)});
  return FreeWord(std::move(letters));
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  std::size_t k = 0;
  while (k < rhs.letters_.size() && !letters_.empty() &&
         letters_.back().cancels(rhs.letters_[k])) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  rhs.letters_.end());
  return *this;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::invert_letters() const {
  // Flipping every sign keeps the word reduced.
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    out.push_back(l.inverse());
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::pow(std::int64_t exponent) const {
  FreeWord base = exponent < 0 ? inverse() : *this;
  FreeWord result;
  for (std::int64_t e = std::llabs(exponent); e > 0; --e) {
    result *= base;
  }
  return result;
}

std::int64_t FreeWord::exponent_sum(Generator g) const noexcept {
  std::int64_t sum = 0;
  for (Letter l : letters_) {
    if (l.generator == g) {
      sum += l.sign;
    }
  }
  return sum;
}

bool FreeWord::is_palindrome() const noexcept {
  // invert(invert_letters(w)) is w read backwards with the original signs.
  return std::equal(letters_.begin(), letters_.end(), letters_.rbegin());
}

FreeWord FreeWord::substitute(const FreeWord& image_first,
                              const FreeWord& image_second) const {
  const FreeWord images[4] = {image_first, image_first.inverse(), image_second,
                              image_second.inverse()};
  FreeWord out;
  for (Letter l : letters_) {
    out *= images[l.rank()];
  }
  return out;
}

bool shortlex_less(const FreeWord& lhs, const FreeWord& rhs) noexcept {
  if (lhs.length() != rhs.length()) {
    return lhs.length() < rhs.length();
  }
  auto a = lhs.letters();
  auto b = rhs.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rank() != b[i].rank()) {
      return a[i].rank() < b[i].rank();
    }
  }
  return false;
}

std::uint64_t reduced_word_count(std::size_t length) noexcept {
  if (length == 0) {
    return 1;
  }
  std::uint64_t count = 4;
  for (std::size_t i = 1; i < length; ++i) {
    count *= 3;
  }
  return count;
}

namespace {

// Depth-first over letter ranks; for a fixed length this is lexicographic.
bool extend(std::vector<Letter>& prefix, std::size_t target,
            const std::function<bool(const FreeWord&)>& visit) {
  if (prefix.size() == target) {
    return visit(FreeWord::reduce(prefix));
  }
  for (int rank = 0; rank < 4; ++rank) {
    Letter next = Letter::from_rank(rank);
    if (!prefix.empty() && prefix.back().cancels(next)) {
      continue;
    }
    prefix.push_back(next);
    bool keep_going = extend(prefix, target, visit);
    prefix.pop_back();
    if (!keep_going) {
      return false;
    }
  }
  return true;
}

}  // namespace

void for_each_reduced(std::size_t max_length,
                      const std::function<bool(const FreeWord&)>& visit) {
  std::vector<Letter> prefix;
  prefix.reserve(max_length);
  for (std::size_t length = 0; length <= max_length; ++length) {
    if (!extend(prefix, length, visit)) {
      return;
    }
  }
}

std::vector<FreeWord> enumerate_reduced(std::size_t max_length) {
  std::vector<FreeWord> words;
  for_each_reduced(max_length, [&](const FreeWord& w) {
    words.push_back(w);
    return true;
  });
  return words;
}

FreeWord parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  for (const auto& atom : text::parse_atoms(text)) {
    Generator g;
    if (atom.name == alphabet.first) {
      g = Generator::first;
    } else if (atom.name == alphabet.second) {
      g = Generator::second;
    } else {
      throw ParseError("unknown letter '" + atom.name + "' (expected " +
                       std::string(alphabet.first) + " or " +
                       std::string(alphabet.second) + ")");
    }
    if (std::llabs(atom.exponent) + static_cast<std::int64_t>(letters.size()) >
        kMaxParsedLength) {
      throw ParseError("word too long");
    }
    Letter l{g, static_cast<std::int8_t>(atom.exponent < 0 ? -1 : 1)};
    letters.insert(letters.end(), static_cast<std::size_t>(std::llabs(atom.exponent)), l);
  }
  return FreeWord::reduce(letters);
}

std::string to_string(const FreeWord& w, const Alphabet& alphabet) {
  auto letters = w.letters();
  if (letters.empty()) {
    return "1";
  }
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    auto run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) {
      out += ' ';
    }
    out += text::format_power(alphabet.name(letters[i].generator), run);
    i = j;
  }
  return out;
}

}  // namespace surfbraid
