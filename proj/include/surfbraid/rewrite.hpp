// Reidemeister-Schreier rewriting for a subgroup of index 2 with Schreier
// transversal {1, t}.

#ifndef SURFBRAID_REWRITE_HPP_
#define SURFBRAID_REWRITE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "surfbraid/presentation.hpp"

namespace surfbraid {

// rho(c, g) = rep(c) g rep(c g)^-1 with c = 0 for the trivial coset and 1 for t.
struct SchreierGenerator {
  std::string name;  // "rho(1,a1)", "rho(sigma,a1)"
  int coset = 0;
  std::size_t generator = 0;
  FormalWord expression;  // freely reduced, over the original generators
};

struct RewriteResult {
  // Generators are the non-trivial rho's; relators are the rewritten
  // c r c^-1 for every relator r and both cosets c.
  Presentation subgroup;
  std::vector<SchreierGenerator> generators;  // parallel to subgroup.generators
  std::vector<SchreierGenerator> trivial;     // the discarded rho's
};

// parity[i] in {0, 1} is the image of generator i in Z/2; the subgroup is the
// kernel.  Throws std::invalid_argument when parity has the wrong size, when
// parity(odd_generator) != 1, or when some relator has odd parity.
RewriteResult rs_rewrite_index2(const Presentation& pres, std::span<const int> parity,
                                std::size_t odd_generator);

}  // namespace surfbraid

#endif  // SURFBRAID_REWRITE_HPP_
