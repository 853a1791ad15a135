#include "surfbraid/klein.hpp"

#include <utility>
#include <vector>

#include "surfbraid/errors.hpp"
#include "surfbraid/text.hpp"

namespace surfbraid::klein {

namespace {

const FreeWord& u_word() {
  static const FreeWord w = FreeWord::power_of(Generator::first, 1);
  return w;
}

const FreeWord& v_word() {
  static const FreeWord w = FreeWord::power_of(Generator::second, 1);
  return w;
}

std::int64_t sign_power(std::int64_t s) noexcept { return s % 2 == 0 ? 1 : -1; }

}  // namespace

ZxZ operator*(ZxZ a, ZxZ b) noexcept { return {a.r + sign_power(a.s) * b.r, a.s + b.s}; }

ZxZ inverse(ZxZ a) noexcept { return {-sign_power(a.s) * a.r, -a.s}; }

std::string to_string(ZxZ a) {
  return "(" + std::to_string(a.r) + "," + std::to_string(a.s) + ")";
}

int delta(std::int64_t n) noexcept { return n % 2 == 0 ? 0 : 1; }

FreeWord full_twist_word() {
  return u_word() * v_word() * u_word() * v_word().inverse();
}

FreeWord theta_image_u(ZxZ g) {
  const FreeWord B = full_twist_word();
  const std::int64_t d = delta(g.s);
  return B.pow(g.r - d) * u_word().pow(sign_power(g.s)) * B.pow(-g.r + d);
}

FreeWord theta_image_v(ZxZ g) {
  const FreeWord B = full_twist_word();
  const std::int64_t d = delta(g.s);
  return B.pow(g.r) * v_word() * u_word().pow(-2 * g.r) * B.pow(-g.r + d);
}

FreeWord theta_apply(ZxZ g, const FreeWord& w) {
  if (g == ZxZ{} || w.is_identity()) {
    return w;
  }
  return w.substitute(theta_image_u(g), theta_image_v(g));
}

PureBraid operator*(const PureBraid& p, const PureBraid& q) {
  return {p.word * theta_apply(p.g, q.word), p.g * q.g};
}

PureBraid inverse(const PureBraid& p) {
  // (w; g)^-1 = (theta(g^-1)(w^-1); g^-1)
  ZxZ gi = inverse(p.g);
  return {theta_apply(gi, p.word.inverse()), gi};
}

PureBraid full_twist() { return {full_twist_word(), {}}; }

Braid sigma() { return Braid{PureBraid{}, true}; }

PureBraid lsigma(const PureBraid& p) {
  const FreeWord B = full_twist_word();
  const PureBraid image_u{B * u_word().inverse() * B.inverse(), {1, 0}};
  const PureBraid image_v{v_word().inverse() * B, {0, 1}};
  const PureBraid images[4] = {image_u, inverse(image_u), image_v, inverse(image_v)};

  PureBraid out;
  for (Letter l : p.word.letters()) {
    out = out * images[l.rank()];
  }
  out = out * PureBraid{{}, {p.g.r, 0}};
  out = out * power(PureBraid{B, {0, 1}}, p.g.s);
  return out;
}

Braid lsigma(const Braid& p) { return Braid{lsigma(p.pure), p.sigma}; }

Braid operator*(const Braid& p, const Braid& q) {
  PureBraid pure = p.pure * (p.sigma ? lsigma(q.pure) : q.pure);
  if (p.sigma && q.sigma) {
    pure = pure * full_twist();
  }
  return Braid{std::move(pure), p.sigma != q.sigma};
}

Braid inverse(const Braid& p) {
  if (!p.sigma) {
    return Braid{inverse(p.pure), false};
  }
  // (p.sigma)^-1 = sigma^-1 p^-1 = B^-1 l(p^-1) sigma
  return Braid{inverse(full_twist()) * lsigma(inverse(p.pure)), true};
}

ZxZ project_p1(const PureBraid& p) { return p.g; }

const std::array<std::string, 6>& generator_names() {
  static const std::array<std::string, 6> names = {"a1", "a2", "b1", "b2", "B", "sigma"};
  return names;
}

GeneratorTable generator_table() {
  const FreeWord u = u_word();
  const FreeWord v = v_word();
  GeneratorTable t;
  t.values[static_cast<std::size_t>(Gen::a1)] = PureBraid{v.inverse() * u.inverse(), {1, 1}};
  t.values[static_cast<std::size_t>(Gen::a2)] = PureBraid{v, {0, -1}};
  t.values[static_cast<std::size_t>(Gen::b1)] = PureBraid{u * v, {}};
  t.values[static_cast<std::size_t>(Gen::b2)] = PureBraid{v.inverse(), {}};
  t.values[static_cast<std::size_t>(Gen::B)] = full_twist();
  t.values[static_cast<std::size_t>(Gen::sigma)] = sigma();
  return t;
}

Braid evaluate_gamma(const FormalWord& w) {
  static const GeneratorTable table = generator_table();
  return evaluate<Braid>(w, table.values);
}

FormalWord section_word_10() { return parse_formal_word("b1 a1 b2 a2", generator_names()); }

FormalWord section_word_01() { return parse_formal_word("a2^-1 b2^-1", generator_names()); }

PureBraid section_phi(ZxZ g) {
  PureBraid phi10 = evaluate_gamma(section_word_10()).pure;
  PureBraid phi01 = evaluate_gamma(section_word_01()).pure;
  return power(phi10, g.r) * power(phi01, g.s);
}

FormalWord lambda_word(const PureBraid& p) {
  const auto& names = generator_names();
  const FormalWord lambda_u = parse_formal_word("b1 b2", names);
  const FormalWord lambda_v = parse_formal_word("b2^-1", names);
  FormalWord out;
  auto append = [&out](const FormalWord& w, std::int64_t times) {
    const FormalWord piece = times < 0 ? formal_inverse(w) : w;
    for (std::int64_t i = 0; i < (times < 0 ? -times : times); ++i) {
      out.insert(out.end(), piece.begin(), piece.end());
    }
  };
  for (Letter l : p.word.letters()) {
    append(l.generator == Generator::first ? lambda_u : lambda_v, l.sign);
  }
  append(section_word_10(), p.g.r);
  append(section_word_01(), p.g.s);
  return freely_reduce(out);
}

std::string_view braid_presentation_text() {
  return "a1 a2 sigma\n"
         "sigma^-1 a1 sigma^-1 a1 = a1 sigma^-1 a1 sigma\n"
         "sigma^-1 a2 sigma^-1 a2 = a2 sigma^-1 a2 sigma\n"
         "sigma^-1 a1 sigma a2 = a2 sigma^-1 a1 sigma\n"
         "a1^2 a2^2 = sigma^2\n";
}

Presentation braid_presentation() { return parse_presentation(braid_presentation_text()); }

VerificationReport verify_presentations() {
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::string r : {"1", "2"}) {
    std::string a = "a" + r;
    relations.push_back({"braid relation r=" + r, "sigma^-1 " + a + " sigma^-1 " + a + " = " + a +
                                            " sigma^-1 " + a + " sigma"});
  }
  relations.push_back({"mixed braid relation", "sigma^-1 a1 sigma a2 = a2 sigma^-1 a1 sigma"});
  relations.push_back({"twist relation", "a1^2 a2^2 = sigma^2"});
  for (std::string r : {"1", "2"}) {
    std::string a = "a" + r, b = "b" + r;
    relations.push_back({"pure relation b a, r=" + r, b + " " + a + " = B " + a + " B^-1 " + b + " B"});
  }
  for (std::string r : {"1", "2"}) {
    std::string a = "a" + r, b = "b" + r;
    relations.push_back({"pure relation a b, r=" + r, a + " " + b + " " + a + "^-1 " + b + "^-1 = " + a +
                                            " B " + a + "^-1"});
  }
  relations.push_back({"pure relation b1 a2", "b1 B a2 B^-1 = B a2 B^-1 b1"});
  relations.push_back({"pure relation a1 b2", "a1 b2 a1^-1 b2^-1 = 1"});
  relations.push_back({"pure twist a", "a1^2 a2^2 = B"});
  relations.push_back({"pure twist b", "b1^2 b2^2 = B"});
  relations.push_back({"conjugation a1 on b1", "a1 b1 a1^-1 = b1^-1 b2^-2"});
  relations.push_back({"conjugation a1 on b2", "a1 b2 a1^-1 = b2"});
  relations.push_back({"conjugation a1 on B", "a1 B a1^-1 = b1^-1 B^-1 b1"});
  relations.push_back({"conjugation a2 on b1", "a2 b1 a2^-1 = b2^-1 B^-1 b2^-1 b1 b2 B b2"});
  relations.push_back({"conjugation a2 on b2", "a2 b2 a2^-1 = b2^-1 B^-1 b2^2"});
  relations.push_back({"conjugation a2 on B", "a2 B a2^-1 = b2^-1 B^-1 b2"});
  for (std::string r : {"1", "2"}) {
    relations.push_back({"inclusion b" + r + " = sigma a" + r + " sigma^-1",
                         "b" + r + " = sigma a" + r + " sigma^-1"});
    relations.push_back({"sigma b" + r + " sigma^-1 = B a" + r + " B^-1",
                         "sigma b" + r + " sigma^-1 = B a" + r + " B^-1"});
  }
  relations.push_back({"inclusion B = sigma^2", "B = sigma^2"});
  relations.push_back({"section [phi(1,0), phi(0,1)]' = 1",
                       "b1 a1 b2 a2 a2^-1 b2^-1 b1 a1 b2 a2 b2 a2 = 1"});

  VerificationReport report;
  for (const auto& [label, equation] : relations) {
    auto sides = text::split(equation, '=');
    Braid l = evaluate_gamma(parse_formal_word(sides[0], generator_names()));
    Braid r = evaluate_gamma(parse_formal_word(sides[1], generator_names()));
    std::string name = label;
    if (label.find(" = ") == std::string::npos) name += ": " + equation;
    report.push_back({name, l == r, to_string(l) + " vs " + to_string(r)});
  }
  return report;
}

std::string to_string(const PureBraid& p) {
  return "(" + to_string(p.word, kKleinAlphabet) + "; " + std::to_string(p.g.r) + ", " +
         std::to_string(p.g.s) + ")";
}

std::string to_string(const Braid& p) { return to_string(p.pure) + (p.sigma ? "·s" : ""); }

Braid parse_braid(std::string_view text) {
  auto parts = text::split_braid(text);
  return Braid{PureBraid{parse_word(parts.word, kKleinAlphabet),
                         {text::parse_int(parts.first), text::parse_int(parts.second)}},
               parts.sigma};
}

PureBraid parse_pure_braid(std::string_view text) {
  Braid b = parse_braid(text);
  if (b.sigma) {
    throw ParseError("expected a pure braid, got a sigma-coset element");
  }
  return b.pure;
}

ZxZ parse_zxz(std::string_view text) {
  text = text::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("expected '(r,s)', got '" + std::string(text) + "'");
  }
  auto parts = text::split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) {
    throw ParseError("expected '(r,s)', got '" + std::string(text) + "'");
  }
  return {text::parse_int(parts[0]), text::parse_int(parts[1])};
}

}  // namespace surfbraid::klein
