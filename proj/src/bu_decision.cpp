#include "surfbraid/bu_decision.hpp"

#include <stdexcept>

#include "surfbraid/errors.hpp"

namespace surfbraid {

namespace {

bool even(std::int64_t n) noexcept { return n % 2 == 0; }

// floor(n / 2)
std::int64_t half_floor(std::int64_t n) noexcept { return even(n) ? n / 2 : (n - 1) / 2; }

FreeWord tw(Generator g, std::int64_t e) { return FreeWord::power_of(g, e); }

std::string pair_string(IntPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

std::string_view to_string(Involution inv) {
  switch (inv) {
    case Involution::tau1: return "tau1";
    case Involution::tau2: return "tau2";
    case Involution::tau3: break;
  }
  return "tau3";
}

Involution parse_involution(std::string_view text) {
  if (text == "tau1") return Involution::tau1;
  if (text == "tau2") return Involution::tau2;
  if (text == "tau3") return Involution::tau3;
  throw ParseError("unknown involution '" + std::string(text) + "' (expected tau1, tau2, tau3)");
}

const InvolutionDescriptor& descriptor(Involution inv) {
  static const InvolutionDescriptor table[3] = {
      {Involution::tau1, "torus", "torus", {{{2, 0}, {0, 1}}}, {1, 0}},
      {Involution::tau2, "torus", "klein", {{{1, 0}, {0, 2}}}, {0, 1}},
      {Involution::tau3, "klein", "klein", {{{2, 0}, {0, 1}}}, {1, 0}},
  };
  return table[static_cast<int>(inv)];
}

bool tau2_criterion(const TorusClass& c) noexcept {
  return (c.b11 != 0 || c.b21 != 0) && even(c.b12) && even(c.b22);
}

TorusWitness construct_torus_witness(const TorusClass& c, Involution inv) {
  using torus::PureBraid;
  const Generator X = Generator::first;
  const Generator Y = Generator::second;
  if (inv == Involution::tau1) {
    const std::int64_t r = half_floor(c.b11), s = half_floor(c.b21);
    const std::int64_t i = c.b11 - 2 * r, j = c.b21 - 2 * s;
    return {{tw(X, i) * tw(Y, j), r, s}, {{}, c.b12, c.b22}, inv};
  }
  if (inv != Involution::tau2) {
    throw std::invalid_argument("torus witnesses exist only for tau1 and tau2");
  }
  if (tau2_criterion(c)) {
    throw std::invalid_argument("class " + to_string(c) + " has the Borsuk-Ulam property for tau2");
  }
  const std::int64_t r = half_floor(c.b12), s = half_floor(c.b22);
  if (!even(c.b12) && !even(c.b22)) {
    return {{tw(X, -2 * c.b11) * tw(Y, -2 * c.b21), c.b11, c.b21},
            {tw(Y, 1 + 2 * c.b21) * tw(X, -1), r + 1, s - c.b21},
            inv};
  }
  if (!even(c.b12)) {
    return {{tw(X, -c.b11) * tw(Y, -2 * c.b21 - 1) * tw(X, -c.b11) * tw(Y, 1), c.b11, c.b21},
            {tw(X, -1), r + 1, s},
            inv};
  }
  if (!even(c.b22)) {
    return {{tw(X, -2 * c.b11 + 1) * tw(Y, -c.b21) * tw(X, -1) * tw(Y, -c.b21), c.b11, c.b21},
            {tw(X, -2 * c.b11 + 1) * tw(Y, 1) * tw(X, -1), c.b11 + r, s},
            inv};
  }
  // (b11, b21) = (0, 0), both even
  return {{{}, 0, 0}, {{}, r, s}, inv};
}

std::optional<TorusWitness> tau2_literal_witness(const TorusClass& c) {
  if (even(c.b12) || even(c.b22)) {
    return std::nullopt;
  }
  TorusWitness w = construct_torus_witness(c, Involution::tau2);
  w.a.n = c.b12;
  return w;
}

VerificationReport verify_torus_witness(const TorusClass& c, const TorusWitness& w) {
  using torus::lsigma;
  using torus::project_p1;
  const auto& [a, b, inv] = w;
  if (inv == Involution::tau1) {
    const IntPair p2 = project_p1(a * lsigma(a));
    return {{"braid equation a l(b) = b a", a * lsigma(b) == b * a,
             torus::to_string(a * lsigma(b)) + " vs " + torus::to_string(b * a)},
            {"projection p1(a l(a)) = (b11,b21)", p2 == c.image10(), pair_string(p2)},
            {"projection p1(b) = (b12,b22)", project_p1(b) == c.image01(),
             pair_string(project_p1(b))}};
  }
  if (inv != Involution::tau2) {
    throw std::invalid_argument("torus witnesses exist only for tau1 and tau2");
  }
  const torus::PureBraid lhs = a * b * lsigma(a);
  const IntPair p3 = project_p1(b * lsigma(b));
  return {{"braid equation a b l(a) = b", lhs == b, torus::to_string(lhs) + " vs " + torus::to_string(b)},
          {"projection p1(a) = (b11,b21)", project_p1(a) == c.image10(), pair_string(project_p1(a))},
          {"projection p1(b l(b)) = (b12,b22)", p3 == c.image01(), pair_string(p3)}};
}

Decision decide_torus(const TorusClass& c, Involution inv) {
  Decision d;
  d.involution = inv;
  if (inv == Involution::tau1) {
    d.reason = kReasonTau1;
  } else if (inv == Involution::tau2) {
    d.reason = kReasonTau2;
    d.bu = tau2_criterion(c);
  } else {
    throw std::invalid_argument("tau3 is an involution of the Klein bottle");
  }
  if (!d.bu) {
    d.torus_witness = construct_torus_witness(c, inv);
    d.conditions = verify_torus_witness(c, *d.torus_witness);
    if (auto literal = tau2_literal_witness(c); literal && inv == Involution::tau2) {
      d.literal_variant_verifies = all_hold(verify_torus_witness(c, *literal));
    }
  }
  return d;
}

KleinWitness construct_klein_witness(const KleinNormalForm& nf) {
  if (nf.tag != HomTag::A) {
    throw std::invalid_argument("Klein witnesses exist only for type A homomorphisms");
  }
  const FreeWord B = klein::full_twist_word();
  const FreeWord u = FreeWord::power_of(Generator::first, 1);
  const ZxZ b_coords{nf.i, 2 * nf.s + 1};
  if (even(nf.r)) {
    const std::int64_t m = nf.r / 2;
    return {{{}, {m, 0}}, {B, b_coords}};
  }
  const std::int64_t m = (nf.r - 1) / 2;
  return {{u * B.pow(-m), {m, 0}}, {u.inverse() * B.pow(klein::delta(nf.i + 1)), b_coords}};
}

VerificationReport verify_klein_witness(const KleinHom& h, const KleinWitness& w) {
  using klein::lsigma;
  using klein::project_p1;
  const auto& [a, b] = w;
  const klein::PureBraid lhs = lsigma(a) * lsigma(b) * klein::full_twist() * a;
  const ZxZ p2 = project_p1(lsigma(a) * a);
  return {{"braid equation l(a) l(b) sigma^2 a = b", lhs == b,
           klein::to_string(lhs) + " vs " + klein::to_string(b)},
          {"projection p1(l(a) a) = h(1,0)", p2 == h.img10, klein::to_string(p2)},
          {"projection p1(b) = h(0,1)", project_p1(b) == h.img01, klein::to_string(project_p1(b))}};
}

Decision decide_klein(const KleinHom& h) {
  Decision d;
  d.involution = Involution::tau3;
  d.reason = kReasonTau3;
  d.bu = lifts_to_torus(h);
  d.normal_form = klein_normal_form(h);
  if (!d.bu) {
    d.klein_witness = construct_klein_witness(*d.normal_form);
    d.conditions = verify_klein_witness(d.normal_form->images(), *d.klein_witness);
  }
  return d;
}

}  // namespace surfbraid
