#include "surfbraid/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace surfbraid::oracle {

namespace {

// Smallest index i < count with fn(i) engaged.  Indices are handed out in
// increasing order, so a worker can stop once it passes the best hit so far.
template <class T, class Fn>
std::optional<T> first_match(std::size_t count, const Fn& fn) {
  if (count == 0) {
    return std::nullopt;
  }
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  std::vector<std::optional<T>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) {
        return;
      }
      results[i] = fn(i);
      if (results[i]) {
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }
  const std::size_t hit = best.load();
  return hit < count ? results[hit] : std::nullopt;
}

bool within(std::int64_t v, std::int64_t bound) { return v >= -bound && v <= bound; }

// v = 2k + offset solved for k, if integral and within bound.
std::optional<std::int64_t> solve_double(std::int64_t v, std::int64_t offset,
                                         std::int64_t bound) {
  const std::int64_t twice = v - offset;
  if (twice % 2 != 0 || !within(twice / 2, bound)) {
    return std::nullopt;
  }
  return twice / 2;
}

ZxZ psi(const FreeWord& w) {
  ZxZ out;
  for (Letter l : w.letters()) {
    const ZxZ unit = l.generator == Generator::first ? ZxZ{1, 0} : ZxZ{0, 1};
    out = out * (l.sign > 0 ? unit : klein::inverse(unit));
  }
  return out;
}

std::int64_t magnitude(const TorusClass& c) {
  return std::max({std::abs(c.b11), std::abs(c.b12), std::abs(c.b21), std::abs(c.b22)});
}

std::int64_t magnitude(const KleinHom& h) {
  return std::max({std::abs(h.img10.r), std::abs(h.img10.s), std::abs(h.img01.r),
                   std::abs(h.img01.s)});
}

std::string bounds_string(std::size_t length, std::int64_t coordinate) {
  return "(length " + std::to_string(length) + ", coordinates " + std::to_string(coordinate) +
         ")";
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "VERIFIED";
    case Status::consistent: return "CONSISTENT";
    case Status::counterexample: break;
  }
  return "COUNTEREXAMPLE";
}

bool OracleReport::has_counterexample() const { return count(Status::counterexample) > 0; }

std::size_t OracleReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [s](const OracleLine& l) { return l.status == s; }));
}

PalindromeReport check_palindrome_lemma(std::size_t max_length) {
  PalindromeReport report;
  for_each_reduced(max_length, [&](const FreeWord& z) {
    ++report.words_checked;
    if (z.is_palindrome()) {
      ++report.palindromes;
      if (z.exponent_sum(Generator::first) % 2 != 0 &&
          z.exponent_sum(Generator::second) % 2 != 0) {
        report.counterexamples.push_back(z);
      }
    }
    return true;
  });
  return report;
}

Palin2Report check_palin2_small(std::size_t max_length) {
  const std::vector<FreeWord> words = enumerate_reduced(max_length);
  std::vector<std::pair<FreeWord, FreeWord>> hypotheses;  // (w, w(x^-1, y^-1)^-1)
  for (const FreeWord& w : words) {
    if (!w.is_identity() && w.exponent_sum(Generator::first) % 2 == 0 &&
        w.exponent_sum(Generator::second) % 2 == 0) {
      hypotheses.emplace_back(w, w.invert_letters().inverse());
    }
  }
  Palin2Report report;
  for (const FreeWord& z : words) {
    const FreeWord zi = z.inverse();
    const bool conclusion = z.exponent_sum(Generator::first) % 2 == 0 ||
                            z.exponent_sum(Generator::second) % 2 == 0;
    for (const auto& [w, target] : hypotheses) {
      ++report.pairs_checked;
      if (z * w * zi == target) {
        ++report.equation_holds;
        if (!conclusion) {
          report.counterexamples.emplace_back(z, w);
        }
      }
    }
  }
  return report;
}

std::optional<TorusWitness> search_torus_witness(const TorusClass& c, Involution inv,
                                                 const SearchBounds& bounds) {
  if (inv != Involution::tau1 && inv != Involution::tau2) {
    throw std::invalid_argument("torus search needs tau1 or tau2");
  }
  const std::int64_t K = bounds.max_abs_coordinate;
  const std::vector<FreeWord> words = enumerate_reduced(bounds.max_word_length);
  const Generator X = Generator::first;
  const Generator Y = Generator::second;

  std::optional<TorusWitness> found;
  if (inv == Involution::tau2) {
    // p1(a) fixes a's coordinates; the coordinates of the braid equation force
    // |w_a| = -2 (b11, b21); p1(b l(b)) fixes b's coordinates given w_b.
    if (!within(c.b11, K) || !within(c.b21, K)) {
      return std::nullopt;
    }
    found = first_match<TorusWitness>(words.size(), [&](std::size_t ia)
                                          -> std::optional<TorusWitness> {
      const FreeWord& wa = words[ia];
      if (wa.exponent_sum(X) != -2 * c.b11 || wa.exponent_sum(Y) != -2 * c.b21) {
        return std::nullopt;
      }
      const torus::PureBraid a{wa, c.b11, c.b21};
      const torus::PureBraid la = torus::lsigma(a);
      for (const FreeWord& wb : words) {
        auto mb = solve_double(c.b12, wb.exponent_sum(X), K);
        auto nb = solve_double(c.b22, wb.exponent_sum(Y), K);
        if (!mb || !nb) {
          continue;
        }
        const torus::PureBraid b{wb, *mb, *nb};
        if (a * b * la == b) {
          return TorusWitness{a, b, inv};
        }
      }
      return std::nullopt;
    });
  } else {
    // p1(b) fixes b's coordinates, p1(a l(a)) fixes a's given w_a, and the
    // coordinates of the braid equation force |w_b|_x = |w_b|_y = 0.
    if (!within(c.b12, K) || !within(c.b22, K)) {
      return std::nullopt;
    }
    found = first_match<TorusWitness>(words.size(), [&](std::size_t ia)
                                          -> std::optional<TorusWitness> {
      const FreeWord& wa = words[ia];
      auto ma = solve_double(c.b11, wa.exponent_sum(X), K);
      auto na = solve_double(c.b21, wa.exponent_sum(Y), K);
      if (!ma || !na) {
        return std::nullopt;
      }
      const torus::PureBraid a{wa, *ma, *na};
      for (const FreeWord& wb : words) {
        if (wb.exponent_sum(X) != 0 || wb.exponent_sum(Y) != 0) {
          continue;
        }
        const torus::PureBraid b{wb, c.b12, c.b22};
        if (a * torus::lsigma(b) == b * a) {
          return TorusWitness{a, b, inv};
        }
      }
      return std::nullopt;
    });
  }
  if (found && !all_hold(verify_torus_witness(c, *found))) {
    throw std::logic_error("search returned a witness that fails verification");
  }
  return found;
}

std::optional<KleinWitness> search_klein_witness(const KleinHom& h, const SearchBounds& bounds) {
  const std::int64_t K = bounds.max_abs_coordinate;
  if (!within(h.img01.r, K) || !within(h.img01.s, K)) {
    return std::nullopt;
  }
  const std::vector<FreeWord> words = enumerate_reduced(bounds.max_word_length);
  const klein::PureBraid B = klein::full_twist();

  struct Candidate {
    klein::PureBraid b;
    klein::PureBraid lb;
    ZxZ lb_projection;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(words.size());
  for (const FreeWord& wb : words) {
    klein::PureBraid b{wb, h.img01};
    klein::PureBraid lb = klein::lsigma(b);
    const ZxZ proj = lb.g;
    candidates.push_back({std::move(b), std::move(lb), proj});
  }

  auto found = first_match<KleinWitness>(words.size(), [&](std::size_t ia)
                                             -> std::optional<KleinWitness> {
    const FreeWord& wa = words[ia];
    const ZxZ psi_a = psi(wa);
    for (std::int64_t ra = -K; ra <= K; ++ra) {
      for (std::int64_t sa = -K; sa <= K; ++sa) {
        const ZxZ ga{ra, sa};
        // p1(l(a) a) = psi(w_a) g_a g_a
        if (psi_a * ga * ga != h.img10) {
          continue;
        }
        const klein::PureBraid a{wa, ga};
        const klein::PureBraid la = klein::lsigma(a);
        for (const Candidate& cand : candidates) {
          if (la.g * cand.lb_projection * ga != h.img01) {
            continue;
          }
          if (la * cand.lb * B * a == cand.b) {
            return KleinWitness{a, cand.b};
          }
        }
      }
    }
    return std::nullopt;
  });
  if (found && !all_hold(verify_klein_witness(h, *found))) {
    throw std::logic_error("search returned a witness that fails verification");
  }
  return found;
}

OracleReport crosscheck_decisions(const SearchBounds& bounds, std::int64_t class_range,
                                  std::span<const Involution> involutions) {
  OracleReport report;
  const std::size_t L = bounds.max_word_length;

  for (Involution inv : involutions) {
    if (inv == Involution::tau3) {
      continue;
    }
    const std::int64_t R = class_range;
    for (std::int64_t b11 = -R; b11 <= R; ++b11) {
      for (std::int64_t b12 = -R; b12 <= R; ++b12) {
        for (std::int64_t b21 = -R; b21 <= R; ++b21) {
          for (std::int64_t b22 = -R; b22 <= R; ++b22) {
            const TorusClass c{b11, b12, b21, b22};
            const Decision d = decide_torus(c, inv);
            const SearchBounds local{L, magnitude(c) + bounds.max_abs_coordinate};
            const auto hit = search_torus_witness(c, inv, local);
            OracleLine line;
            line.item = "torus " + std::string(to_string(inv)) + " " + to_string(c);
            if (!d.bu) {
              const bool ok = all_hold(d.conditions);
              line.status = ok ? Status::verified : Status::counterexample;
              line.detail = std::string("bu=false; constructed witness ") +
                            (ok ? "verifies" : "FAILS") + "; search " +
                            (hit ? "finds a witness" : "finds none") + " within " +
                            bounds_string(L, local.max_abs_coordinate);
            } else {
              line.status = hit ? Status::counterexample : Status::consistent;
              line.detail = std::string("bu=true; search ") +
                            (hit ? "FINDS a witness: a=" + torus::to_string(hit->a) +
                                       " b=" + torus::to_string(hit->b)
                                 : "finds none") +
                            " within " + bounds_string(L, local.max_abs_coordinate);
            }
            report.lines.push_back(std::move(line));
          }
        }
      }
    }
  }

  if (std::find(involutions.begin(), involutions.end(), Involution::tau3) == involutions.end()) {
    return report;
  }
  std::vector<KleinNormalForm> forms;
  for (std::int64_t r = 0; r <= class_range; ++r) {
    for (std::int64_t s = -class_range; s <= class_range; ++s) {
      forms.push_back({HomTag::A, r, 0, s, {}});
      forms.push_back({HomTag::A, r, 1, s, {}});
      forms.push_back({HomTag::B, r, 0, s, {}});
    }
  }
  for (const KleinNormalForm& nf : forms) {
    const KleinHom h = nf.images();
    const Decision d = decide_klein(h);
    const SearchBounds local{L, magnitude(h) + bounds.max_abs_coordinate};
    const auto hit = search_klein_witness(h, local);
    OracleLine line;
    line.item = "klein tau3 " + to_string(h);
    const bool tag_matches = d.bu == (nf.tag == HomTag::B);
    if (!d.bu) {
      const bool ok = tag_matches && all_hold(d.conditions);
      line.status = ok ? Status::verified : Status::counterexample;
      line.detail = "bu=false, type " + std::string(to_string(nf.tag)) +
                    "; constructed witness " + (ok ? "verifies" : "FAILS") + "; search " +
                    (hit ? "finds a witness" : "finds none") + " within " +
                    bounds_string(L, local.max_abs_coordinate);
    } else {
      line.status = hit || !tag_matches ? Status::counterexample : Status::consistent;
      line.detail = "bu=true, type " + std::string(to_string(nf.tag)) + "; search " +
                    (hit ? "FINDS a witness: a=" + klein::to_string(hit->a) +
                               " b=" + klein::to_string(hit->b)
                         : "finds none") +
                    " within " + bounds_string(L, local.max_abs_coordinate);
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace surfbraid::oracle
