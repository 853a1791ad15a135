#include "surfbraid/text.hpp"

#include <cctype>
#include <charconv>

#include "surfbraid/errors.hpp"

namespace surfbraid::text {

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char separator) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(separator, start);
    if (pos == std::string_view::npos) {
      pieces.push_back(trim(s.substr(start)));
      return pieces;
    }
    pieces.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::vector<Atom> parse_atoms(std::string_view text) {
  std::vector<Atom> atoms;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    std::string_view token = text.substr(i, j - i);
    i = j;
    if (token == "1") {
      continue;
    }
    Atom atom;
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    if (name.empty()) {
      throw ParseError("missing generator name in '" + std::string(token) + "'");
    }
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("bad generator name '" + std::string(name) + "'");
      }
    }
    atom.name = std::string(name);
    if (caret != std::string_view::npos) {
      atom.exponent = parse_int(token.substr(caret + 1));
    }
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

std::string format_power(std::string_view name, std::int64_t exponent) {
  if (exponent == 0) {
    return {};
  }
  std::string out(name);
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
  return out;
}

BraidText split_braid(std::string_view text) {
  text = trim(text);
  BraidText out;
  auto close = text.rfind(')');
  if (text.empty() || text.front() != '(' || close == std::string_view::npos) {
    throw ParseError("expected '(w; m, n)', got '" + std::string(text) + "'");
  }
  auto suffix = trim(text.substr(close + 1));
  if (suffix == "·s" || suffix == "*s" || suffix == ".s") {
    out.sigma = true;
  } else if (!suffix.empty()) {
    throw ParseError("unexpected suffix '" + std::string(suffix) + "'");
  }
  auto inner = text.substr(1, close - 1);
  auto semi = inner.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("missing ';' in braid '" + std::string(text) + "'");
  }
  out.word = trim(inner.substr(0, semi));
  auto coords = split(inner.substr(semi + 1), ',');
  if (coords.size() != 2) {
    throw ParseError("expected two coordinates in braid '" + std::string(text) + "'");
  }
  out.first = coords[0];
  out.second = coords[1];
  return out;
}

}  // namespace surfbraid::text
