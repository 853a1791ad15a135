// The pure and full 2-string braid groups of the Klein bottle.
//
// pi_1(K^2) is Z x| Z with (r1, s1)(r2, s2) = (r1 + (-1)^s1 r2, s1 + s2).
// P2(K^2) is modelled as the semidirect product F(u, v) x|_theta (Z x| Z):
// a pure braid is (w; m, n) and
//
//   (w1; g1)(w2; g2) = (w1 . theta(g1)(w2); g1 g2).
//
// B = [u, v]' = u v u v^-1 is the full twist.  B2(K^2) adds the coset
// P2(K^2).sigma with sigma^2 = (B; 0, 0), multiplied through the conjugation
// automorphism l_sigma exactly as in the torus model.

#ifndef SURFBRAID_KLEIN_HPP_
#define SURFBRAID_KLEIN_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "surfbraid/free_word.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/report.hpp"

namespace surfbraid::klein {

// Element (r, s) of Z x| Z.
struct ZxZ {
  std::int64_t r = 0;
  std::int64_t s = 0;

  friend bool operator==(ZxZ, ZxZ) = default;
};

ZxZ operator*(ZxZ a, ZxZ b) noexcept;
ZxZ inverse(ZxZ a) noexcept;
std::string to_string(ZxZ a);

// 0 for even n, 1 for odd n (negative n included).
int delta(std::int64_t n) noexcept;

// u v u v^-1
FreeWord full_twist_word();

// theta(m, n)(u) = B^(m - d) u^((-1)^n) B^(-m + d)
// theta(m, n)(v) = B^m v u^(-2m) B^(-m + d)        with d = delta(n).
FreeWord theta_image_u(ZxZ g);
FreeWord theta_image_v(ZxZ g);
FreeWord theta_apply(ZxZ g, const FreeWord& w);

struct PureBraid {
  FreeWord word;
  ZxZ g;

  friend bool operator==(const PureBraid&, const PureBraid&) = default;
};

// pure . sigma^(sigma ? 1 : 0)
struct Braid {
  PureBraid pure;
  bool sigma = false;

  Braid() = default;
  Braid(PureBraid p, bool s = false) : pure(std::move(p)), sigma(s) {}  // NOLINT

  friend bool operator==(const Braid&, const Braid&) = default;
};

PureBraid operator*(const PureBraid& p, const PureBraid& q);
PureBraid inverse(const PureBraid& p);
Braid operator*(const Braid& p, const Braid& q);
Braid inverse(const Braid& p);

// (B; 0, 0)
PureBraid full_twist();
// (1; 0, 0).sigma
Braid sigma();

// Conjugation by sigma, computed letter by letter from
//   l(u; 0,0) = (B u^-1 B^-1; 1,0)      l(v; 0,0) = (v^-1 B; 0,1)
//   l(1; m,0) = (1; m,0)                 l(1; 0,1) = (B; 0,1)
// after splitting (w; m, n) = (w; 0,0)(1; m,0)(1; 0,n).
PureBraid lsigma(const PureBraid& p);
Braid lsigma(const Braid& p);

// (p1)#: (w; m, n) -> (m, n)
ZxZ project_p1(const PureBraid& p);

enum class Gen { a1 = 0, a2, b1, b2, B, sigma };

// gamma images of the generators of B2(K^2):
//   a1 -> (v^-1 u^-1; 1,1)   a2 -> (v; 0,-1)   b1 -> (u v; 0,0)
//   b2 -> (v^-1; 0,0)        B  -> (B; 0,0)    sigma -> (1; 0,0).sigma
struct GeneratorTable {
  std::array<Braid, 6> values;

  const Braid& operator[](Gen g) const { return values[static_cast<std::size_t>(g)]; }
};

GeneratorTable generator_table();
// "a1", "a2", "b1", "b2", "B", "sigma" in Gen order.
const std::array<std::string, 6>& generator_names();

// Evaluates a formal word over generator_names() in the model.
Braid evaluate_gamma(const FormalWord& w);

// The section phi(1,0) = b1 a1 b2 a2, phi(0,1) = a2^-1 b2^-1, as formal words.
FormalWord section_word_10();
FormalWord section_word_01();
// phi(m, n) = phi(1,0)^m phi(0,1)^n evaluated in the model.
PureBraid section_phi(ZxZ g);

// lambda(w; m, n) = w(b1 b2, b2^-1) phi(1,0)^m phi(0,1)^n as a formal word.
FormalWord lambda_word(const PureBraid& p);

// Presentation of B2(K^2) on a1, a2, sigma with the braid relators for r = 1, 2,
// the mixed relator and the twist relator, in the presentation file format.
std::string_view braid_presentation_text();
Presentation braid_presentation();

// Every relation of the B2(K^2) presentation (R2, R3, TR), of the P2(K^2)
// presentation, the conjugation action of a1, a2 on b1, b2, B, the
// inclusion P2 -> B2, and the section relation [phi(1,0), phi(0,1)]' = 1.
VerificationReport verify_presentations();

std::string to_string(const PureBraid& p);
std::string to_string(const Braid& p);
// `(w; m, n)` or `(w; m, n)·s` with w over u, v.  Throws ParseError.
Braid parse_braid(std::string_view text);
PureBraid parse_pure_braid(std::string_view text);
// `(r,s)`.  Throws ParseError.
ZxZ parse_zxz(std::string_view text);

}  // namespace surfbraid::klein

#endif  // SURFBRAID_KLEIN_HPP_
