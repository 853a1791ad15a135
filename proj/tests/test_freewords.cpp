#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "surfbraid/errors.hpp"
#include "surfbraid/free_word.hpp"
#include "surfbraid/sampling.hpp"

using namespace surfbraid;

namespace {

// Independent reference: words as strings over "xXyY" (capital = inverse),
// reduced with a stack.
std::string naive_reduce(const std::string& s) {
  std::string out;
  for (char c : s) {
    char inv = static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c));
    if (!out.empty() && out.back() == inv) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string to_letters(const FreeWord& w) {
  std::string out;
  for (Letter l : w.letters()) {
    char c = l.generator == Generator::first ? 'x' : 'y';
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return out;
}

std::vector<Letter> from_letters(const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) {
    Generator g = std::tolower(c) == 'x' ? Generator::first : Generator::second;
    out.push_back({g, static_cast<std::int8_t>(std::islower(c) ? 1 : -1)});
  }
  return out;
}

FreeWord w(const char* text) { return parse_word(text, kTorusAlphabet); }

}  // namespace

TEST_CASE("parse and print") {
  CHECK(to_string(w("x x^-1 y"), kTorusAlphabet) == "y");
  CHECK(w("1").is_identity());
  CHECK(w("").is_identity());
  CHECK(to_string(FreeWord{}, kTorusAlphabet) == "1");
  CHECK(to_string(w("x^3 y^-2"), kTorusAlphabet) == "x^3 y^-2");
  CHECK(to_string(w("x x y^-1 y^-1 y"), kTorusAlphabet) == "x^2 y^-1");
  CHECK(to_string(w("x^3 y^-2"), kKleinAlphabet) == "u^3 v^-2");
  CHECK(w("x^0").is_identity());
  CHECK_THROWS_AS(w("z"), ParseError);
  CHECK_THROWS_AS(w("x^"), ParseError);
  CHECK_THROWS_AS(w("x^a"), ParseError);
  CHECK_THROWS_AS(parse_word("x", kKleinAlphabet), ParseError);
}

TEST_CASE("multiply, invert, power") {
  CHECK(w("x y") * w("y^-1 x") == w("x^2"));
  CHECK(w("x y").inverse() == w("y^-1 x^-1"));
  CHECK(w("x y").pow(3) == w("x y x y x y"));
  CHECK(w("x y").pow(-2) == w("y^-1 x^-1 y^-1 x^-1"));
  CHECK(w("x y^-1").invert_letters() == w("x^-1 y"));
  CHECK(w("x^2 y^-3").exponent_sum(Generator::first) == 2);
  CHECK(w("x^2 y^-3").exponent_sum(Generator::second) == -3);
  CHECK(w("x y").substitute(w("y"), w("x^2")) == w("y x^2"));
}

TEST_CASE("reduction agrees with a stack reducer") {
  sampling::Rng rng(7);
  std::uniform_int_distribution<int> len(0, 20), letter(0, 3);
  const char alphabet[] = "xXyY";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) {
      s.push_back(alphabet[letter(rng)]);
    }
    auto letters = from_letters(s);
    FreeWord r = FreeWord::reduce(letters);
    CHECK(to_letters(r) == naive_reduce(s));
    auto again = std::vector<Letter>(r.letters().begin(), r.letters().end());
    CHECK(FreeWord::reduce(again) == r);
  }
}

TEST_CASE("group laws on sampled triples") {
  sampling::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    FreeWord a = sampling::random_word(rng, 8);
    FreeWord b = sampling::random_word(rng, 8);
    FreeWord c = sampling::random_word(rng, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
    CHECK(a * FreeWord{} == a);
    CHECK(FreeWord{} * a == a);
    CHECK(to_letters(a * b) == naive_reduce(to_letters(a) + to_letters(b)));
    for (Generator g : {Generator::first, Generator::second}) {
      CHECK((a * b).exponent_sum(g) == a.exponent_sum(g) + b.exponent_sum(g));
    }
    CHECK(a.invert_letters().invert_letters() == a);
    CHECK((a * b).invert_letters() == a.invert_letters() * b.invert_letters());
  }
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_reduced(0).size() == 1);
  CHECK(enumerate_reduced(0)[0].is_identity());
  CHECK(enumerate_reduced(1).size() == 5);
  CHECK(enumerate_reduced(2).size() == 17);

  const auto words = enumerate_reduced(7);
  std::vector<std::size_t> per_length(8, 0);
  std::set<std::string> seen;
  for (const FreeWord& v : words) {
    ++per_length[v.length()];
    CHECK(seen.insert(to_letters(v)).second);
    CHECK(naive_reduce(to_letters(v)) == to_letters(v));
  }
  for (std::size_t L = 1; L <= 7; ++L) {
    CHECK(per_length[L] == reduced_word_count(L));
    std::uint64_t expected = 4;
    for (std::size_t k = 1; k < L; ++k) expected *= 3;
    CHECK(reduced_word_count(L) == expected);
  }
  CHECK(std::is_sorted(words.begin(), words.end(), shortlex_less));
  CHECK(to_letters(words[1]) == "x");
  CHECK(to_letters(words[2]) == "X");
  CHECK(to_letters(words[3]) == "y");
  CHECK(to_letters(words[4]) == "Y");

  std::size_t streamed = 0;
  for_each_reduced(7, [&](const FreeWord& v) {
    CHECK(v == words[streamed]);
    ++streamed;
    return true;
  });
  CHECK(streamed == words.size());
}

TEST_CASE("palindromes") {
  CHECK(w("x y x").is_palindrome());
  CHECK(w("x y^-1 x").is_palindrome());
  CHECK(w("x^2 y^3 x^2").is_palindrome());
  CHECK_FALSE(w("x y").is_palindrome());
  CHECK_FALSE(w("x y^-1 x^-1 y").is_palindrome());
  CHECK(FreeWord{}.is_palindrome());
  // reads the same backwards  <=>  w = w(x^-1, y^-1)^-1
  for_each_reduced(6, [](const FreeWord& v) {
    std::string s = to_letters(v);
    std::string r(s.rbegin(), s.rend());
    CHECK(v.is_palindrome() == (s == r));
    CHECK(v.is_palindrome() == (v == v.invert_letters().inverse()));
    return true;
  });
}
