// Brute-force oracles: the palindrome lemmas, bounded witness search, and a
// cross-check of the decision procedures against search.

#ifndef SURFBRAID_ORACLE_HPP_
#define SURFBRAID_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfbraid/bu_decision.hpp"
#include "surfbraid/free_word.hpp"
#include "surfbraid/homclass.hpp"

namespace surfbraid::oracle {

struct SearchBounds {
  std::size_t max_word_length = 3;
  std::int64_t max_abs_coordinate = 1;
};

// VERIFIED: a witness was checked exactly.  CONSISTENT: bounded search agrees
// with the decision, which proves nothing beyond the bounds.
enum class Status { verified, consistent, counterexample };
std::string_view to_string(Status s);

struct OracleLine {
  Status status = Status::consistent;
  std::string item;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleLine> lines;

  bool has_counterexample() const;
  std::size_t count(Status s) const;
};

struct PalindromeReport {
  std::size_t words_checked = 0;
  std::size_t palindromes = 0;
  std::vector<FreeWord> counterexamples;
};

// Every palindrome z up to max_length has |z|_x or |z|_y even.
PalindromeReport check_palindrome_lemma(std::size_t max_length);

struct Palin2Report {
  std::size_t pairs_checked = 0;
  std::size_t equation_holds = 0;
  std::vector<std::pair<FreeWord, FreeWord>> counterexamples;  // (z, w)
};

// For z, w up to max_length with w != 1 and |w|_x, |w|_y even: whenever
// z w z^-1 = w(x^-1, y^-1)^-1, then |z|_x or |z|_y is even.
Palin2Report check_palin2_small(std::size_t max_length);

// First witness in enumeration order (w_a, m_a, n_a, w_b, m_b, n_b), words in
// shortlex order, coordinates ascending.  Coordinates fixed by the projection
// conditions are solved rather than enumerated.  inv must be tau1 or tau2.
std::optional<TorusWitness> search_torus_witness(const TorusClass& c, Involution inv,
                                                 const SearchBounds& bounds);

// Same for tau3; b's coordinates are forced to h(0,1).
std::optional<KleinWitness> search_klein_witness(const KleinHom& h, const SearchBounds& bounds);

// For every torus matrix with entries in [-class_range, class_range] (for each
// requested torus involution) and, when tau3 is requested, every Klein normal
// form with r in [0, class_range], |s| <= class_range: a bu=false decision must
// carry a verifying witness, a bu=true decision must admit no witness within
// the bounds.  The coordinate bound used per class is its largest entry plus
// bounds.max_abs_coordinate.
OracleReport crosscheck_decisions(const SearchBounds& bounds, std::int64_t class_range,
                                  std::span<const Involution> involutions);

}  // namespace surfbraid::oracle

#endif  // SURFBRAID_ORACLE_HPP_
