// Cross-checks of the closed-form formulas against independent computations
// in the models: theta lemmas, lambda/gamma, and the sigma-conjugation.

#ifndef SURFBRAID_AUDIT_HPP_
#define SURFBRAID_AUDIT_HPP_

#include <cstddef>
#include <cstdint>

#include "surfbraid/presentation.hpp"
#include "surfbraid/report.hpp"
#include "surfbraid/rewrite.hpp"
#include "surfbraid/sampling.hpp"

namespace surfbraid::audit {

// theta(m,0) and theta(0,n) closed forms against iterated theta(1,0), theta(0,1)
// on u, v, B for |m|, |n| <= iterate_range; theta(m,n)(B) = B^((-1)^n) for
// |m|, |n| <= twist_range; the action law on a few words.
VerificationReport klein_theta_lemmas(int iterate_range = 8, int twist_range = 6);

// gamma(lambda(p)) = p on the five pure generators and on `samples` random
// pure braids, lambda(gamma(w)) = w for random words over a1, a2, b1, b2, B,
// and p1 o gamma agrees with a1 -> (1,1), a2 -> (0,-1), b1, b2, B -> (0,0).
VerificationReport klein_lambda_gamma(std::size_t samples = 200,
                                      std::uint64_t seed = sampling::kDefaultSeed);

struct LsigmaFormulaAudit {
  VerificationReport report;
  // Exponent e for which l(u^r; 0,0) = ((B u^-1)^(e r) B^-r; r, 0) for every
  // r in range: +1, -1, or 0 when neither sign works throughout.
  int u_power_exponent = 0;
};

// Closed forms of l_sigma on u^r, v^s, B, (1;m,0), (1;0,n) against the generator-wise computation.
LsigmaFormulaAudit klein_lsigma_formulas(int range = 6);

// l_sigma is an automorphism, l_sigma^2 is conjugation by B, and the
// projection shift, over `pairs` random pairs in both cosets.
VerificationReport klein_lsigma_automorphism(std::size_t pairs = 500,
                                             std::uint64_t seed = sampling::kDefaultSeed);
VerificationReport torus_lsigma_automorphism(std::size_t pairs = 500,
                                             std::uint64_t seed = sampling::kDefaultSeed);

// The closed formula for l_sigma(w,0,0) against composing the generator images
// l(x) = (B x^-1, 1, 0), l(y) = (B y^-1, 0, 1), for every word up to max_length.
VerificationReport torus_lsigma_formula(std::size_t max_length = 8);

// Evaluates the rho generators and the rewritten relators of `rewritten` in
// the Klein model; the original presentation's generators must be named after
// klein::generator_names().  Throws std::invalid_argument otherwise.
VerificationReport klein_rewrite_evaluation(const Presentation& original,
                                            const RewriteResult& rewritten);

// Rewrites klein::braid_presentation() with parity a1, a2 -> 0, sigma -> 1:
// the rho's are a1, a2, b1, b2, B in the model, rho(1,sigma) is the only
// trivial one, and every rewritten relator is the identity.
VerificationReport klein_schreier_rewrite();

}  // namespace surfbraid::audit

#endif  // SURFBRAID_AUDIT_HPP_
