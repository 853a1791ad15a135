// The pure and full 2-string braid groups of the torus.
//
// P2(T^2) is modelled as F(x, y) + Z + Z: a pure braid is (w, m, n) with w a
// reduced word and (m, n) the coordinates along the two central generators
// rho_{1,k} B^-1 rho_{2,k}.  B2(T^2) is P2(T^2) together with the coset
// P2(T^2).sigma, where sigma swaps the strands and sigma^2 = (B, 0, 0) with
// B = [x, y^-1] = x y^-1 x^-1 y.

#ifndef SURFBRAID_TORUS_HPP_
#define SURFBRAID_TORUS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "surfbraid/free_word.hpp"
#include "surfbraid/report.hpp"

namespace surfbraid {

// A point of Z + Z (also used for images of (1,0), (0,1) under homomorphisms).
struct IntPair {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend IntPair operator+(IntPair a, IntPair b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend bool operator==(IntPair, IntPair) = default;
};

namespace torus {

struct PureBraid {
  FreeWord word;
  std::int64_t m = 0;
  std::int64_t n = 0;

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

// x y^-1 x^-1 y
FreeWord full_twist_word();
// sigma^2 = (B, 0, 0)
PureBraid full_twist();
// (1, 0, 0).sigma
Braid sigma();

// Conjugation by sigma:
//   l(w, m, n) = (x y^-1 w(x^-1, y^-1) y x^-1, |w|_x + m, |w|_y + n)
// and l(p.sigma) = l(p).sigma.
PureBraid lsigma(const PureBraid& p);
Braid lsigma(const Braid& p);

// (p1)#: (w, m, n) -> (m, n)
IntPair project_p1(const PureBraid& p);

enum class Rho { rho11, rho12, rho21, rho22, B };

// Images of the five presentation generators in the model.  The rho_{1,k}
// entries are forced by rho_{1,k} B^-1 rho_{2,k} = central generator k.
struct GeneratorTable {
  PureBraid rho11;
  PureBraid rho12;
  PureBraid rho21;
  PureBraid rho22;
  PureBraid B;

  const PureBraid& operator[](Rho r) const;
};

GeneratorTable generator_table();

// Substitutes the generator table into every instance of the presentation
// relations, the relations making B central, plus the
// conjugation action of sigma on the rho generators.
VerificationReport verify_presentation();

// `(w; m, n)` or `(w; m, n)·s`; `*s` is accepted on input.  Throws ParseError.
std::string to_string(const PureBraid& p);
std::string to_string(const Braid& p);
Braid parse_braid(std::string_view text);
PureBraid parse_pure_braid(std::string_view text);

}  // namespace torus
}  // namespace surfbraid

#endif  // SURFBRAID_TORUS_HPP_
