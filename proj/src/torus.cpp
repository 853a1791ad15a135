#include "surfbraid/torus.hpp"

#include <array>
#include <utility>

#include "surfbraid/errors.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/text.hpp"

namespace surfbraid::torus {

namespace {

const FreeWord& x_word() {
  static const FreeWord w = FreeWord::power_of(Generator::first, 1);
  return w;
}

const FreeWord& y_word() {
  static const FreeWord w = FreeWord::power_of(Generator::second, 1);
  return w;
}

}  // namespace

PureBraid operator*(const PureBraid& p, const PureBraid& q) {
  return {p.word * q.word, p.m + q.m, p.n + q.n};
}

PureBraid inverse(const PureBraid& p) { return {p.word.inverse(), -p.m, -p.n}; }

FreeWord full_twist_word() {
  return x_word() * y_word().inverse() * x_word().inverse() * y_word();
}

PureBraid full_twist() { return {full_twist_word(), 0, 0}; }

Braid sigma() { return Braid{PureBraid{}, true}; }

PureBraid lsigma(const PureBraid& p) {
  const FreeWord& w = p.word;
  FreeWord conj = x_word() * y_word().inverse();
  return {conj * w.invert_letters() * conj.inverse(),
          w.exponent_sum(Generator::first) + p.m,
          w.exponent_sum(Generator::second) + p.n};
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

IntPair project_p1(const PureBraid& p) { return {p.m, p.n}; }

const PureBraid& GeneratorTable::operator[](Rho r) const {
  switch (r) {
    case Rho::rho11: return rho11;
    case Rho::rho12: return rho12;
    case Rho::rho21: return rho21;
    case Rho::rho22: return rho22;
    case Rho::B: break;
  }
  return B;
}

GeneratorTable generator_table() {
  GeneratorTable t;
  t.rho21 = {x_word(), 0, 0};
  t.rho22 = {y_word(), 0, 0};
  t.B = full_twist();
  // rho_{1,k} = e_k . rho_{2,k}^-1 . B
  t.rho11 = PureBraid{{}, 1, 0} * inverse(t.rho21) * t.B;
  t.rho12 = PureBraid{{}, 0, 1} * inverse(t.rho22) * t.B;
  return t;
}

VerificationReport verify_presentation() {
  const std::array<std::string, 5> names = {"rho11", "rho12", "rho21", "rho22", "B"};
  const GeneratorTable t = generator_table();
  const std::array<PureBraid, 5> values = {t.rho11, t.rho12, t.rho21, t.rho22, t.B};

  std::vector<std::pair<std::string, std::string>> relations = {
      {"[rho11, rho12^-1] = B", "rho11 rho12^-1 rho11^-1 rho12 = B"},
      {"[rho21, rho22^-1] = B", "rho21 rho22^-1 rho21^-1 rho22 = B"},
  };
  for (std::string k : {"1", "2"}) {
    std::string r1 = "rho1" + k, r2 = "rho2" + k;
    relations.push_back({"" + r2 + " " + r1 + " " + r2 + "^-1 = B " + r1 + " B^-1",
                         r2 + " " + r1 + " " + r2 + "^-1 = B " + r1 + " B^-1"});
    relations.push_back({"" + r2 + "^-1 " + r1 + " " + r2 + " = " + r1 + " [B^-1, " + r1 + "]",
                         r2 + "^-1 " + r1 + " " + r2 + " = " + r1 + " B^-1 " + r1 + " B " + r1 + "^-1"});
  }
  relations.push_back({"rho21 rho12 rho21^-1 = B rho12 [rho11^-1, B]",
                       "rho21 rho12 rho21^-1 = B rho12 rho11^-1 B rho11 B^-1"});
  relations.push_back({"rho21^-1 rho12 rho21 = B^-1 [B, rho11] rho12 [B^-1, rho11]",
                       "rho21^-1 rho12 rho21 = B^-1 B rho11 B^-1 rho11^-1 rho12 B^-1 rho11 B rho11^-1"});
  relations.push_back({"rho22 rho11 rho22^-1 = rho11 B^-1",
                       "rho22 rho11 rho22^-1 = rho11 B^-1"});
  relations.push_back({"rho22^-1 rho11 rho22 = rho11 B [B^-1, rho12]",
                       "rho22^-1 rho11 rho22 = rho11 B B^-1 rho12 B rho12^-1"});
  for (std::string k : {"1", "2"}) {
    std::string r1 = "rho1" + k, r2 = "rho2" + k;
    relations.push_back({"" + r2 + " B " + r2 + "^-1 = B " + r1 + "^-1 B " + r1 + " B^-1",
                         r2 + " B " + r2 + "^-1 = B " + r1 + "^-1 B " + r1 + " B^-1"});
  }
  for (std::string k : {"1", "2"}) {
    for (std::string i : {"1", "2"}) {
      for (std::string j : {"1", "2"}) {
        std::string c = "rho1" + k + " B^-1 rho2" + k;
        std::string g = "rho" + i + j;
        relations.push_back({"" + c + " commutes with " + g,
                             c + " " + g + " rho2" + k + "^-1 B rho1" + k + "^-1 = " + g});
      }
    }
  }

  VerificationReport report;
  for (const auto& [label, equation] : relations) {
    auto sides = text::split(equation, '=');
    FormalWord lhs = parse_formal_word(sides[0], names);
    FormalWord rhs = parse_formal_word(sides[1], names);
    PureBraid l = evaluate<PureBraid>(lhs, values);
    PureBraid r = evaluate<PureBraid>(rhs, values);
    report.push_back({label, l == r, to_string(l) + " vs " + to_string(r)});
  }

  // Conjugation by sigma on the generators: rho_{1,k} -> rho_{2,k},
  // rho_{2,k} -> B rho_{1,k} B^-1.
  for (int k = 0; k < 2; ++k) {
    const PureBraid& r1 = k == 0 ? t.rho11 : t.rho12;
    const PureBraid& r2 = k == 0 ? t.rho21 : t.rho22;
    std::string ks = std::to_string(k + 1);
    PureBraid image1 = lsigma(r1);
    report.push_back({"l_sigma(rho1" + ks + ") = rho2" + ks, image1 == r2,
                      to_string(image1)});
    PureBraid image2 = lsigma(r2);
    PureBraid expected = t.B * r1 * inverse(t.B);
    report.push_back({"l_sigma(rho2" + ks + ") = B rho1" + ks + " B^-1", image2 == expected,
                      to_string(image2)});
  }
  return report;
}

std::string to_string(const PureBraid& p) {
  return "(" + to_string(p.word, kTorusAlphabet) + "; " + std::to_string(p.m) + ", " +
         std::to_string(p.n) + ")";
}

std::string to_string(const Braid& p) {
  return to_string(p.pure) + (p.sigma ? "·s" : "");
}

Braid parse_braid(std::string_view text) {
  auto parts = text::split_braid(text);
  return Braid{PureBraid{parse_word(parts.word, kTorusAlphabet), text::parse_int(parts.first),
                         text::parse_int(parts.second)},
               parts.sigma};
}

PureBraid parse_pure_braid(std::string_view text) {
  Braid b = parse_braid(text);
  if (b.sigma) {
    throw ParseError("expected a pure braid, got a sigma-coset element");
  }
  return b.pure;
}

}  // namespace surfbraid::torus
