// One PASS/FAIL line per acceptance criterion, each with its runtime limit.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "surfbraid/audit.hpp"
#include "surfbraid/bu_decision.hpp"
#include "surfbraid/homclass.hpp"
#include "surfbraid/klein.hpp"
#include "surfbraid/oracle.hpp"
#include "surfbraid/torus.hpp"

using namespace surfbraid;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_report(const VerificationReport& r) {
  Outcome o;
  std::size_t held = 0;
  for (const auto& c : r) {
    if (c.holds) {
      ++held;
    } else if (o.ok) {
      o.ok = false;
      o.detail = "first failure: " + c.name + " [" + c.detail + "]; ";
    }
  }
  o.detail += std::to_string(held) + "/" + std::to_string(r.size()) + " checks hold";
  if (r.empty()) o.ok = false;
  return o;
}

void merge(Outcome& into, const Outcome& o, const std::string& label) {
  into.ok = into.ok && o.ok;
  if (!into.detail.empty()) into.detail += "; ";
  into.detail += label + ": " + o.detail;
}

// Valid Klein homomorphisms with all four coordinates in [-4,4].
std::vector<KleinHom> klein_homs(int bound) {
  std::vector<KleinHom> out;
  for (int r1 = -bound; r1 <= bound; ++r1)
    for (int s1 = -bound; s1 <= bound; ++s1)
      for (int r2 = -bound; r2 <= bound; ++r2)
        for (int s2 = -bound; s2 <= bound; ++s2)
          if (satisfies_klein_relation({r1, s1}, {r2, s2})) out.push_back({{r1, s1}, {r2, s2}});
  return out;
}

Outcome criterion1() { return from_report(torus::verify_presentation()); }

Outcome criterion2() { return from_report(klein::verify_presentations()); }

Outcome criterion3() { return from_report(audit::klein_theta_lemmas(8, 6)); }

Outcome criterion4() { return from_report(audit::klein_lambda_gamma(200)); }

Outcome criterion5() {
  Outcome o;
  o.detail.clear();
  merge(o, from_report(audit::torus_lsigma_automorphism(500)), "torus");
  merge(o, from_report(audit::klein_lsigma_automorphism(500)), "klein");
  const auto f = audit::klein_lsigma_formulas(6);
  merge(o, from_report(f.report), "formulas");
  o.ok = o.ok && f.u_power_exponent != 0;
  o.detail += "; l(u^r) formula holds with exponent " +
              std::string(f.u_power_exponent > 0 ? "+r" : f.u_power_exponent < 0 ? "-r" : "none");
  return o;
}

Outcome torus_sweep(Involution inv) {
  Outcome o;
  std::size_t classes = 0, bu_true = 0, mismatch = 0, unverified = 0;
  for (int b11 = -3; b11 <= 3; ++b11)
    for (int b12 = -3; b12 <= 3; ++b12)
      for (int b21 = -3; b21 <= 3; ++b21)
        for (int b22 = -3; b22 <= 3; ++b22) {
          const TorusClass c{b11, b12, b21, b22};
          const Decision d = decide_torus(c, inv);
          const bool expected =
              inv == Involution::tau2 && (b11 != 0 || b21 != 0) && b12 % 2 == 0 && b22 % 2 == 0;
          ++classes;
          bu_true += d.bu;
          mismatch += d.bu != expected;
          if (!d.bu && (!d.torus_witness || !all_hold(verify_torus_witness(c, *d.torus_witness))))
            ++unverified;
        }
  o.ok = classes == 2401 && mismatch == 0 && unverified == 0;
  o.detail = std::to_string(classes) + " classes, " + std::to_string(bu_true) + " bu=true, " +
             std::to_string(mismatch) + " verdict mismatches, " + std::to_string(unverified) +
             " bu=false classes without a verified witness";
  return o;
}

Outcome criterion6() {
  Outcome o = torus_sweep(Involution::tau2);
  const Involution inv[] = {Involution::tau2};
  const auto report = oracle::crosscheck_decisions(oracle::SearchBounds{3, 1}, 3, inv);
  const bool ok = report.lines.size() == 2401 && !report.has_counterexample();
  o.ok = o.ok && ok;
  o.detail += "; search: VERIFIED=" + std::to_string(report.count(oracle::Status::verified)) +
              " CONSISTENT=" + std::to_string(report.count(oracle::Status::consistent)) +
              " COUNTEREXAMPLE=" + std::to_string(report.count(oracle::Status::counterexample));
  return o;
}

Outcome criterion7() { return torus_sweep(Involution::tau1); }

Outcome criterion8() {
  Outcome o;
  std::size_t homs = 0, verdict = 0, invariance = 0, unverified = 0, forms = 0;
  for (const KleinHom& h : klein_homs(4)) {
    ++homs;
    const Decision d = decide_klein(h);
    const bool type_b = klein_hom_type(h).tag == HomTag::B;
    if (d.bu != type_b || d.bu != lifts_to_torus(h)) ++verdict;
    if (!d.bu && (!d.klein_witness || !all_hold(d.conditions))) ++unverified;
    for (int cr = -3; cr <= 3; ++cr)
      for (int cs = -3; cs <= 3; ++cs)
        if (decide_klein(conjugate(h, {cr, cs})).bu != d.bu) ++invariance;
  }
  for (int r = 0; r <= 6; ++r)
    for (int i = 0; i <= 1; ++i)
      for (int s = -3; s <= 3; ++s) {
        const KleinNormalForm nf{HomTag::A, r, i, s, {}};
        ++forms;
        if (!all_hold(verify_klein_witness(nf.images(), construct_klein_witness(nf))))
          ++unverified;
      }
  o.ok = verdict == 0 && invariance == 0 && unverified == 0;
  o.detail = std::to_string(homs) + " homs, " + std::to_string(forms) + " type A forms; " +
             std::to_string(verdict) + " verdict mismatches, " + std::to_string(invariance) +
             " conjugation changes, " + std::to_string(unverified) + " unverified witnesses";
  return o;
}

Outcome criterion9() {
  const auto p1 = oracle::check_palindrome_lemma(12);
  const auto p2 = oracle::check_palin2_small(6);
  Outcome o;
  o.ok = p1.counterexamples.empty() && p2.counterexamples.empty();
  o.detail = "length 12: " + std::to_string(p1.words_checked) + " words, " +
             std::to_string(p1.palindromes) + " palindromes, " +
             std::to_string(p1.counterexamples.size()) + " counterexamples; length 6: " +
             std::to_string(p2.pairs_checked) + " pairs, " + std::to_string(p2.equation_holds) +
             " solutions, " + std::to_string(p2.counterexamples.size()) + " counterexamples";
  return o;
}

Outcome criterion10() { return from_report(audit::klein_schreier_rewrite()); }

Outcome criterion11() {
  Outcome o;
  std::size_t homs = 0, bad = 0;
  std::vector<KleinNormalForm> forms;
  for (const KleinHom& h : klein_homs(4)) {
    ++homs;
    const KleinNormalForm nf = klein_normal_form(h);
    const KleinHom img = nf.images();
    const bool shape =
        nf.r >= 0 && (nf.tag == HomTag::A ? (nf.i == 0 || nf.i == 1) && img.img10 == ZxZ{nf.r, 0} &&
                                                img.img01 == ZxZ{nf.i, 2 * nf.s + 1}
                                          : nf.i == 0 && img.img10 == ZxZ{} &&
                                                img.img01 == ZxZ{nf.r, 2 * nf.s});
    if (!shape || conjugate(h, nf.conjugator) != img) ++bad;
    bool seen = false;
    for (const auto& f : forms) seen = seen || f.same_form(nf);
    if (!seen) forms.push_back(nf);
  }
  std::size_t conjugate_pairs = 0;
  for (const auto& f : forms) {
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> orbit;
    for (int cr = -8; cr <= 8; ++cr)
      for (int cs = -8; cs <= 8; ++cs) {
        const KleinHom c = conjugate(f.images(), {cr, cs});
        orbit.insert({c.img10.r, c.img10.s, c.img01.r, c.img01.s});
      }
    for (const auto& g : forms) {
      if (g.same_form(f)) continue;
      const KleinHom gi = g.images();
      conjugate_pairs += orbit.count({gi.img10.r, gi.img10.s, gi.img01.r, gi.img01.s});
    }
  }
  o.ok = bad == 0 && conjugate_pairs == 0;
  o.detail = std::to_string(homs) + " homs, " + std::to_string(bad) + " wrong shapes or conjugators, " +
             std::to_string(forms.size()) + " distinct forms, " + std::to_string(conjugate_pairs) +
             " conjugate pairs";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // <= 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torus presentation relations", 1.0, criterion1},
      {2, "Klein bottle presentation relations", 1.0, criterion2},
      {3, "theta action closed forms", 5.0, criterion3},
      {4, "lambda and gamma mutually inverse", 0.0, criterion4},
      {5, "sigma conjugation audits", 0.0, criterion5},
      {6, "tau2 decisions on [-3,3]^4", 60.0, criterion6},
      {7, "tau1 decisions on [-3,3]^4", 10.0, criterion7},
      {8, "tau3 decisions and witnesses", 30.0, criterion8},
      {9, "palindrome lemmas", 30.0, criterion9},
      {10, "Reidemeister-Schreier rewrite", 1.0, criterion10},
      {11, "Klein normal forms", 10.0, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::string limit = c.limit_s > 0 ? "limit " + std::to_string(c.limit_s).substr(0, 4) + " s"
                                      : "no limit";
    std::printf("%s criterion %d: %s  (%.3f s, %s%s)  %s\n", pass ? "PASS" : "FAIL", c.id,
                c.title, secs, limit.c_str(), in_time ? "" : ", TOO SLOW", o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
