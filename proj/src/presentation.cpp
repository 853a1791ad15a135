#include "surfbraid/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "surfbraid/errors.hpp"
#include "surfbraid/text.hpp"

namespace surfbraid {

FormalWord formal_inverse(const FormalWord& w) {
  FormalWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->generator, static_cast<std::int8_t>(-it->sign)});
  }
  return out;
}

FormalWord freely_reduce(const FormalWord& w) {
  FormalWord out;
  out.reserve(w.size());
  for (const FormalLetter& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::size_t Presentation::index_of(std::string_view name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) {
    throw std::out_of_range("unknown generator '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - generators.begin());
}

FormalWord parse_formal_word(std::string_view text,
                             std::span<const std::string> generators) {
  FormalWord out;
  for (const auto& atom : text::parse_atoms(text)) {
    auto it = std::find(generators.begin(), generators.end(), atom.name);
    if (it == generators.end()) {
      throw ParseError("relator mentions undeclared generator '" + atom.name + "'");
    }
    FormalLetter l{static_cast<std::size_t>(it - generators.begin()),
                   static_cast<std::int8_t>(atom.exponent < 0 ? -1 : 1)};
    out.insert(out.end(), static_cast<std::size_t>(std::llabs(atom.exponent)), l);
  }
  return out;
}

std::string to_string(const FormalWord& w, std::span<const std::string> generators) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += text::format_power(generators[w[i].generator],
                              static_cast<std::int64_t>(j - i) * w[i].sign);
    i = j;
  }
  return out;
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_generators = false;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto body = text::trim(line);
    if (body.empty()) {
      continue;
    }
    if (!have_generators) {
      for (const auto& atom : text::parse_atoms(body)) {
        if (atom.exponent != 1) {
          throw ParseError("generator list may not carry exponents");
        }
        if (std::find(p.generators.begin(), p.generators.end(), atom.name) !=
            p.generators.end()) {
          throw ParseError("duplicate generator '" + atom.name + "'");
        }
        p.generators.push_back(atom.name);
      }
      have_generators = true;
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      p.relators.push_back(parse_formal_word(body, p.generators));
    } else {
      if (body.find('=', eq + 1) != std::string_view::npos) {
        throw ParseError("at most one '=' per relator line");
      }
      FormalWord lhs = parse_formal_word(body.substr(0, eq), p.generators);
      FormalWord rhs = parse_formal_word(body.substr(eq + 1), p.generators);
      FormalWord rhs_inv = formal_inverse(rhs);
      lhs.insert(lhs.end(), rhs_inv.begin(), rhs_inv.end());
      p.relators.push_back(std::move(lhs));
    }
  }
  if (!have_generators) {
    throw ParseError("presentation has no generator line");
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

std::string to_string(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out += (i == 0 ? "" : " ") + p.generators[i];
  }
  out += '\n';
  for (const auto& r : p.relators) {
    out += to_string(r, p.generators);
    out += '\n';
  }
  return out;
}

}  // namespace surfbraid
