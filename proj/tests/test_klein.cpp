#include <doctest.h>

#include "surfbraid/audit.hpp"
#include "surfbraid/errors.hpp"
#include "surfbraid/klein.hpp"
#include "surfbraid/sampling.hpp"

using namespace surfbraid;
using klein::Braid;
using klein::PureBraid;
using klein::ZxZ;

namespace {

FreeWord w(const char* text) { return parse_word(text, kKleinAlphabet); }

const FreeWord& B() {
  static const FreeWord b = klein::full_twist_word();
  return b;
}

FormalWord fw(const char* text) { return parse_formal_word(text, klein::generator_names()); }

}  // namespace

TEST_CASE("Z x| Z arithmetic") {
  CHECK(ZxZ{1, 1} * ZxZ{1, 0} == ZxZ{0, 1});
  CHECK(ZxZ{3, -2} * ZxZ{} == ZxZ{3, -2});
  CHECK(klein::inverse(ZxZ{2, 1}) == ZxZ{2, -1});
  for (int r1 = -3; r1 <= 3; ++r1) {
    for (int s1 = -3; s1 <= 3; ++s1) {
      const ZxZ a{r1, s1};
      CHECK(a * klein::inverse(a) == ZxZ{});
      CHECK(klein::inverse(a) * a == ZxZ{});
      CHECK(klein::inverse(a) == ZxZ{(s1 % 2 == 0 ? -1 : 1) * r1, -s1});
      for (int r2 = -3; r2 <= 3; ++r2) {
        for (int s2 = -3; s2 <= 3; ++s2) {
          const ZxZ b{r2, s2};
          for (const ZxZ c : {ZxZ{1, 0}, ZxZ{0, 1}, ZxZ{-2, 3}}) {
            CHECK((a * b) * c == a * (b * c));
          }
        }
      }
    }
  }
}

TEST_CASE("delta") {
  CHECK(klein::delta(0) == 0);
  CHECK(klein::delta(3) == 1);
  CHECK(klein::delta(-2) == 0);
  CHECK(klein::delta(-3) == 1);
}

TEST_CASE("theta action") {
  CHECK(klein::theta_apply({1, 0}, w("u")) == B() * w("u") * B().inverse());
  CHECK(klein::theta_apply({0, 1}, w("v")) == w("v") * B());
  CHECK(klein::theta_apply({1, 1}, w("u")) == w("u^-1"));
  CHECK(klein::theta_apply({1, 0}, klein::theta_apply({0, 1}, w("u"))) == w("u^-1"));
  CHECK(klein::theta_apply({}, w("u v^2")) == w("u v^2"));

  sampling::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const ZxZ g{sampling::random_int(rng, 4), sampling::random_int(rng, 4)};
    const FreeWord a = sampling::random_word(rng, 6);
    const FreeWord b = sampling::random_word(rng, 6);
    CHECK(klein::theta_apply(g, a * b) == klein::theta_apply(g, a) * klein::theta_apply(g, b));
    CHECK(klein::theta_apply(klein::inverse(g), klein::theta_apply(g, a)) == a);
  }
}

TEST_CASE("theta closed forms against iteration") {
  for (const auto& c : audit::klein_theta_lemmas(8, 6)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("multiplication and inversion") {
  CHECK(PureBraid{{}, {1, 0}} * PureBraid{{}, {0, 1}} == PureBraid{{}, {1, 1}});
  CHECK(PureBraid{{}, {0, 1}} * PureBraid{w("u"), {}} ==
        PureBraid{B().inverse() * w("u^-1") * B(), {0, 1}});
  CHECK(klein::sigma() * klein::sigma() == Braid{klein::full_twist()});
  CHECK(klein::inverse(PureBraid{{}, {1, 0}}) == PureBraid{{}, {-1, 0}});
  CHECK(klein::inverse(PureBraid{w("u"), {}}) == PureBraid{w("u^-1"), {}});
  const PureBraid p{w("u"), {1, 1}};
  const PureBraid pi = klein::inverse(p);
  CHECK(pi.g == ZxZ{1, -1});
  CHECK(p * pi == PureBraid{});
  CHECK(pi * p == PureBraid{});

  sampling::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Braid a = sampling::random_klein_braid(rng, 6, 3);
    Braid b = sampling::random_klein_braid(rng, 6, 3);
    Braid c = sampling::random_klein_braid(rng, 6, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * klein::inverse(a) == Braid{});
    CHECK(klein::inverse(a) * a == Braid{});
    CHECK(klein::project_p1((a * b).pure) ==
          klein::project_p1(a.pure) *
              (a.sigma ? klein::project_p1(klein::lsigma(b.pure)) : klein::project_p1(b.pure)));
  }
}

TEST_CASE("sigma conjugation") {
  CHECK(klein::lsigma(PureBraid{w("u"), {}}) == PureBraid{B() * w("u^-1") * B().inverse(), {1, 0}});
  CHECK(klein::lsigma(PureBraid{{}, {0, 1}}) == PureBraid{B(), {0, 1}});
  CHECK(klein::lsigma(PureBraid{w("v^2"), {}}) == PureBraid{w("v^-2") * B().inverse(), {0, 2}});
  CHECK(klein::lsigma(PureBraid{w("v"), {}}) == PureBraid{w("v^-1") * B(), {0, 1}});

  const auto formulas = audit::klein_lsigma_formulas(6);
  CHECK(formulas.u_power_exponent == 1);
  for (const auto& c : formulas.report) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
  // l(u^r) = ((B u^-1)^r B^-r; r, 0); the exponent -r only agrees at r = 0
  const FreeWord Bu = B() * w("u^-1");
  for (int r = 1; r <= 3; ++r) {
    const PureBraid l = klein::lsigma(PureBraid{w("u").pow(r), {}});
    CHECK(l == PureBraid{Bu.pow(r) * B().pow(-r), {r, 0}});
    CHECK(l != PureBraid{Bu.pow(-r) * B().pow(-r), {r, 0}});
  }
  for (const auto& c : audit::klein_lsigma_automorphism(500)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("projection") {
  CHECK(klein::project_p1(PureBraid{w("u v"), {2, -1}}) == ZxZ{2, -1});
  CHECK(klein::project_p1(PureBraid{}) == ZxZ{});
}

TEST_CASE("generator table and lambda") {
  const auto t = klein::generator_table();
  CHECK(t[klein::Gen::a1] == Braid{PureBraid{w("v^-1 u^-1"), {1, 1}}});
  CHECK(t[klein::Gen::a2] == Braid{PureBraid{w("v"), {0, -1}}});
  CHECK(t[klein::Gen::b1] == Braid{PureBraid{w("u v"), {}}});
  CHECK(t[klein::Gen::b2] == Braid{PureBraid{w("v^-1"), {}}});
  CHECK(t[klein::Gen::B] == Braid{klein::full_twist()});
  CHECK(t[klein::Gen::sigma] == klein::sigma());

  const auto& names = klein::generator_names();
  CHECK(to_string(klein::lambda_word(PureBraid{w("u"), {}}), names) == "b1 b2");
  CHECK(to_string(klein::lambda_word(PureBraid{w("v"), {}}), names) == "b2^-1");
  CHECK(klein::evaluate_gamma(fw("b1 b2")) == Braid{PureBraid{w("u"), {}}});

  for (const auto& c : audit::klein_lambda_gamma(200)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("section") {
  const PureBraid phi10 = klein::section_phi({1, 0});
  CHECK(Braid{phi10} == klein::evaluate_gamma(fw("b1 a1 b2 a2")));
  CHECK(klein::project_p1(phi10) == ZxZ{1, 0});
  CHECK(klein::project_p1(klein::section_phi({0, 1})) == ZxZ{0, 1});
  CHECK(klein::section_phi({}) == PureBraid{});
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      CHECK(klein::project_p1(klein::section_phi({m, n})) == ZxZ{m, n});
    }
  }
}

TEST_CASE("presentation relations hold") {
  const VerificationReport r = klein::verify_presentations();
  CHECK(r.size() >= 19);
  for (const auto& c : r) {
    INFO(c.name << " " << c.detail);
    CHECK(c.holds);
  }
}

TEST_CASE("text form") {
  CHECK(klein::parse_braid("(u v; 2, -1)") == Braid{PureBraid{w("u v"), {2, -1}}});
  Braid b{PureBraid{w("u^-1 v^3"), {-1, 5}}, true};
  CHECK(klein::parse_braid(klein::to_string(b)) == b);
  CHECK(klein::parse_zxz("(3,-4)") == ZxZ{3, -4});
  CHECK(klein::parse_zxz(" ( 3 , -4 ) ") == ZxZ{3, -4});
  CHECK_THROWS_AS(klein::parse_zxz("(3,-4"), ParseError);
  CHECK_THROWS_AS(klein::parse_zxz("(3)"), ParseError);
  CHECK_THROWS_AS(klein::parse_braid("(x; 0, 0)"), ParseError);
}
