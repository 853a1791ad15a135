#include "surfbraid/rewrite.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace surfbraid {

RewriteResult rs_rewrite_index2(const Presentation& pres, std::span<const int> parity,
                                std::size_t odd_generator) {
  const std::size_t n = pres.generators.size();
  if (parity.size() != n) {
    throw std::invalid_argument("parity map has " + std::to_string(parity.size()) +
                                " entries for " + std::to_string(n) + " generators");
  }
  for (int p : parity) {
    if (p != 0 && p != 1) {
      throw std::invalid_argument("parity values must be 0 or 1");
    }
  }
  if (odd_generator >= n || parity[odd_generator] != 1) {
    throw std::invalid_argument("the transversal generator must have parity 1");
  }

  const FormalWord reps[2] = {{}, {{odd_generator, 1}}};
  const std::string coset_names[2] = {"1", pres.generators[odd_generator]};

  RewriteResult out;
  // index[c][g] is the subgroup generator for rho(c, g), empty when trivial.
  std::vector<std::array<std::optional<std::size_t>, 2>> index(n);
  for (int c = 0; c < 2; ++c) {
    for (std::size_t g = 0; g < n; ++g) {
      FormalWord expr = reps[c];
      expr.push_back({g, 1});
      const FormalWord back = formal_inverse(reps[(c + parity[g]) % 2]);
      expr.insert(expr.end(), back.begin(), back.end());
      SchreierGenerator rho{"rho(" + coset_names[c] + "," + pres.generators[g] + ")", c, g,
                            freely_reduce(expr)};
      if (rho.expression.empty()) {
        out.trivial.push_back(std::move(rho));
        continue;
      }
      index[g][c] = out.generators.size();
      out.subgroup.generators.push_back(rho.name);
      out.generators.push_back(std::move(rho));
    }
  }

  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (int c = 0; c < 2; ++c) {
      int coset = c;
      FormalWord rewritten;
      for (FormalLetter l : pres.relators[r]) {
        if (l.sign > 0) {
          if (auto i = index[l.generator][coset]) {
            rewritten.push_back({*i, 1});
          }
          coset = (coset + parity[l.generator]) % 2;
        } else {
          // g^-1 read from coset k is rho(k g^-1, g)^-1.
          coset = (coset + parity[l.generator]) % 2;
          if (auto i = index[l.generator][coset]) {
            rewritten.push_back({*i, -1});
          }
        }
      }
      if (coset != c) {
        throw std::invalid_argument("relator " + std::to_string(r + 1) +
                                    " has odd parity; the kernel is not of index 2");
      }
      out.subgroup.relators.push_back(freely_reduce(rewritten));
    }
  }
  return out;
}

}  // namespace surfbraid
