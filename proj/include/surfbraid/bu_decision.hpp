// Borsuk-Ulam decisions for self-maps of the torus (involutions tau1, tau2)
// and of the Klein bottle (tau3), with explicit witnesses for the negative
// cases and exact verification of the witness equations.

#ifndef SURFBRAID_BU_DECISION_HPP_
#define SURFBRAID_BU_DECISION_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "surfbraid/homclass.hpp"
#include "surfbraid/klein.hpp"
#include "surfbraid/report.hpp"
#include "surfbraid/torus.hpp"

namespace surfbraid {

enum class Involution { tau1, tau2, tau3 };

std::string_view to_string(Involution inv);
// "tau1", "tau2", "tau3".  Throws ParseError.
Involution parse_involution(std::string_view text);

// The short exact sequence 1 -> pi1(M) -> pi1(M / tau) -> Z2 -> 1 of the
// involution: images of (1,0) and (0,1) under the inclusion, and their
// images in Z2.
struct InvolutionDescriptor {
  Involution tag;
  std::string_view surface;   // M
  std::string_view quotient;  // M / tau
  std::array<std::array<int, 2>, 2> inclusion;
  std::array<int, 2> parity;
};

const InvolutionDescriptor& descriptor(Involution inv);

struct TorusWitness {
  torus::PureBraid a;
  torus::PureBraid b;
  Involution involution = Involution::tau1;

  friend bool operator==(const TorusWitness&, const TorusWitness&) = default;
};

struct KleinWitness {
  klein::PureBraid a;
  klein::PureBraid b;

  friend bool operator==(const KleinWitness&, const KleinWitness&) = default;
};

struct Decision {
  Involution involution = Involution::tau1;
  bool bu = false;
  std::string reason;
  std::optional<TorusWitness> torus_witness;
  std::optional<KleinWitness> klein_witness;
  VerificationReport conditions;  // of the attached witness; empty when bu
  // Klein only: the witness is built for and verified against this form.
  std::optional<KleinNormalForm> normal_form;
  // tau2 with b12, b22 both odd: whether the witness with third coordinate
  // b12 in a (instead of b21) also verifies.
  std::optional<bool> literal_variant_verifies;
};

// Reason tags.
inline constexpr std::string_view kReasonTau1 = "tau1-never-borsuk-ulam";
inline constexpr std::string_view kReasonTau2 = "tau2-matrix-criterion";
inline constexpr std::string_view kReasonTau3 = "tau3-lifts-to-torus";

// tau2: (b11, b21) != (0,0) and b12, b22 even.
bool tau2_criterion(const TorusClass& c) noexcept;

// inv must be tau1 or tau2 (std::invalid_argument otherwise).
Decision decide_torus(const TorusClass& c, Involution inv);

// Throws std::invalid_argument when the class has the Borsuk-Ulam property or
// inv is tau3.
TorusWitness construct_torus_witness(const TorusClass& c, Involution inv);

// tau2, b12 and b22 odd: the both-odd witness with a = (x^-2b11 y^-2b21, b11, b12).
std::optional<TorusWitness> tau2_literal_witness(const TorusClass& c);

// Reported in the order braid equation, first projection, second projection.
// tau1: a l(b) = b a, p1(a l(a)) = (b11,b21), p1(b) = (b12,b22).
// tau2: a b l(a) = b, p1(a) = (b11,b21), p1(b l(b)) = (b12,b22).
VerificationReport verify_torus_witness(const TorusClass& c, const TorusWitness& w);

Decision decide_klein(const KleinHom& h);

// nf must be type A (std::invalid_argument otherwise).
//   r = 2m:    a = (1; m, 0),        b = (B; i, 2s+1)
//   r = 2m+1:  a = (u B^-m; m, 0),   b = (u^-1 B^delta(i+1); i, 2s+1)
KleinWitness construct_klein_witness(const KleinNormalForm& nf);

// l(a) l(b) sigma^2 a = b, p1(l(a) a) = h(1,0), p1(b) = h(0,1), in that order.
VerificationReport verify_klein_witness(const KleinHom& h, const KleinWitness& w);

}  // namespace surfbraid

#endif  // SURFBRAID_BU_DECISION_HPP_
