#include "surfbraid/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "surfbraid/audit.hpp"
#include "surfbraid/bu_decision.hpp"
#include "surfbraid/errors.hpp"
#include "surfbraid/homclass.hpp"
#include "surfbraid/oracle.hpp"
#include "surfbraid/rewrite.hpp"

namespace surfbraid::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputOptions {
  std::string surface;
  std::string involution;
  std::string class_text;
  std::string hom_text;
  std::string output = "text";
};

// Parsed --surface/--involution/--class/--hom.
struct Input {
  Involution involution = Involution::tau1;
  std::optional<TorusClass> torus;
  std::optional<KleinHom> klein;
};

Input parse_input(const InputOptions& o) {
  Input in;
  in.involution = parse_involution(o.involution);
  if (o.surface == "torus") {
    if (in.involution == Involution::tau3) {
      throw ParseError("tau3 is an involution of the Klein bottle; use tau1 or tau2 on the torus");
    }
    if (o.class_text.empty()) {
      throw ParseError("--class \"b11,b12;b21,b22\" is required for the torus");
    }
    in.torus = parse_torus_class(o.class_text);
  } else if (o.surface == "klein") {
    if (in.involution != Involution::tau3) {
      throw ParseError("the Klein bottle only carries tau3");
    }
    if (o.hom_text.empty()) {
      throw ParseError("--hom \"(r1,s1),(r2,s2)\" is required for the Klein bottle");
    }
    in.klein = parse_klein_hom(o.hom_text);
  } else {
    throw ParseError("unknown surface '" + o.surface + "' (expected torus or klein)");
  }
  return in;
}

json report_json(const VerificationReport& report) {
  json out = json::array();
  for (const CheckResult& c : report) {
    out.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  }
  return out;
}

void print_report_text(std::ostream& out, const VerificationReport& report) {
  for (const CheckResult& c : report) {
    out << (c.holds ? "holds  " : "FAILS  ") << c.name;
    if (!c.detail.empty()) {
      out << "  [" << c.detail << "]";
    }
    out << '\n';
  }
}

json normal_form_json(const KleinNormalForm& nf) {
  json out = {{"tag", std::string(to_string(nf.tag))}, {"r", nf.r}};
  if (nf.tag == HomTag::A) {
    out["i"] = nf.i;
  }
  out["s"] = nf.s;
  out["conjugator"] = klein::to_string(nf.conjugator);
  out["images"] = to_string(nf.images());
  return out;
}

// The record shared by `decide` and `witness`.
json decision_json(const Input& in, const Decision& d) {
  json out;
  out["surface"] = in.torus ? "torus" : "klein";
  out["involution"] = std::string(to_string(d.involution));
  if (in.torus) {
    out["class"] = to_string(*in.torus);
  } else {
    out["hom"] = to_string(*in.klein);
  }
  out["bu"] = d.bu;
  out["reason"] = d.reason;
  if (d.normal_form) {
    out["normal_form"] = normal_form_json(*d.normal_form);
  }
  if (d.torus_witness) {
    out["witness"] = {{"a", torus::to_string(d.torus_witness->a)},
                      {"b", torus::to_string(d.torus_witness->b)}};
  } else if (d.klein_witness) {
    out["witness"] = {{"a", klein::to_string(d.klein_witness->a)},
                      {"b", klein::to_string(d.klein_witness->b)},
                      {"verified_against", to_string(d.normal_form->images())}};
  } else {
    out["witness"] = nullptr;
  }
  out["conditions"] = report_json(d.conditions);
  out["verified"] = d.bu || all_hold(d.conditions);
  if (d.literal_variant_verifies) {
    out["literal_variant_verifies"] = *d.literal_variant_verifies;
  }
  return out;
}

void print_decision_text(std::ostream& out, const json& record) {
  for (const auto& [key, value] : record.items()) {
    if (key == "conditions") {
      for (const auto& c : value) {
        out << "condition " << c["name"].get<std::string>() << ": "
            << (c["holds"].get<bool>() ? "holds" : "FAILS") << "  ["
            << c["detail"].get<std::string>() << "]\n";
      }
    } else if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) {
        out << key << '.' << sub << '=' << (v.is_string() ? v.get<std::string>() : v.dump())
            << '\n';
      }
    } else {
      out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void emit(std::ostream& out, const InputOptions& o, const json& record) {
  if (o.output == "machine") {
    out << record.dump(2) << '\n';
  } else {
    print_decision_text(out, record);
  }
}

Decision decide(const Input& in) {
  return in.torus ? decide_torus(*in.torus, in.involution) : decide_klein(*in.klein);
}

int cmd_decide(const InputOptions& o, std::ostream& out) {
  const Input in = parse_input(o);
  const Decision d = decide(in);
  const json record = decision_json(in, d);
  emit(out, o, record);
  return record["verified"].get<bool>() ? kExitOk : kExitFailure;
}

int cmd_witness(const InputOptions& o, const std::string& a_text, const std::string& b_text,
                std::ostream& out) {
  const Input in = parse_input(o);
  if (a_text.empty() != b_text.empty()) {
    throw ParseError("--a and --b must be given together");
  }
  if (a_text.empty()) {
    const Decision d = decide(in);
    json record = decision_json(in, d);
    if (d.bu) {
      record["note"] = "the class has the Borsuk-Ulam property; no witness exists";
    }
    emit(out, o, record);
    return record["verified"].get<bool>() ? kExitOk : kExitFailure;
  }

  json record;
  VerificationReport report;
  if (in.torus) {
    record["surface"] = "torus";
    record["involution"] = std::string(to_string(in.involution));
    record["class"] = to_string(*in.torus);
    TorusWitness w{torus::parse_pure_braid(a_text), torus::parse_pure_braid(b_text),
                   in.involution};
    record["witness"] = {{"a", torus::to_string(w.a)}, {"b", torus::to_string(w.b)}};
    report = verify_torus_witness(*in.torus, w);
  } else {
    record["surface"] = "klein";
    record["involution"] = "tau3";
    record["hom"] = to_string(*in.klein);
    KleinWitness w{klein::parse_pure_braid(a_text), klein::parse_pure_braid(b_text)};
    record["witness"] = {{"a", klein::to_string(w.a)}, {"b", klein::to_string(w.b)}};
    report = verify_klein_witness(*in.klein, w);
  }
  record["conditions"] = report_json(report);
  record["verified"] = all_hold(report);
  emit(out, o, record);
  return all_hold(report) ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& output, std::ostream& out) {
  std::vector<std::pair<std::string, VerificationReport>> sections;
  sections.emplace_back("torus presentation", torus::verify_presentation());
  sections.emplace_back("torus l_sigma", audit::torus_lsigma_automorphism());
  {
    VerificationReport f = audit::torus_lsigma_formula();
    sections.back().second.insert(sections.back().second.end(), f.begin(), f.end());
  }
  sections.emplace_back("klein presentations", klein::verify_presentations());
  sections.emplace_back("klein theta", audit::klein_theta_lemmas());
  sections.emplace_back("klein lambda/gamma", audit::klein_lambda_gamma());
  const audit::LsigmaFormulaAudit formulas = audit::klein_lsigma_formulas();
  sections.emplace_back("klein l_sigma formulas", formulas.report);
  sections.emplace_back("klein l_sigma", audit::klein_lsigma_automorphism());
  sections.emplace_back("klein schreier rewrite", audit::klein_schreier_rewrite());

  bool ok = true;
  for (const auto& [name, report] : sections) {
    ok = ok && all_hold(report);
  }
  if (output == "machine") {
    json doc;
    doc["sections"] = json::array();
    for (const auto& [name, report] : sections) {
      doc["sections"].push_back({{"name", name}, {"checks", report_json(report)}});
    }
    doc["lsigma_u_power_exponent"] = formulas.u_power_exponent;
    doc["all_hold"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [name, report] : sections) {
      out << "== " << name << '\n';
      print_report_text(out, report);
    }
    out << "lsigma_u_power_exponent=" << (formulas.u_power_exponent > 0 ? "+" : "")
        << formulas.u_power_exponent << '\n';
    out << "all_hold=" << (ok ? "true" : "false") << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

struct OracleOptions {
  std::size_t max_length = 3;
  std::int64_t margin = 1;
  std::int64_t class_range = 2;
  std::size_t palindrome_length = 12;
  std::size_t palin2_length = 6;
  std::vector<std::string> involutions;
  std::string output = "text";
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  std::vector<Involution> invs;
  for (const std::string& s : o.involutions) {
    invs.push_back(parse_involution(s));
  }
  if (invs.empty()) {
    invs = {Involution::tau1, Involution::tau2, Involution::tau3};
  }
  const oracle::PalindromeReport p1 = oracle::check_palindrome_lemma(o.palindrome_length);
  const oracle::Palin2Report p2 = oracle::check_palin2_small(o.palin2_length);
  oracle::OracleReport report;
  report.lines.push_back(
      {p1.counterexamples.empty() ? oracle::Status::consistent : oracle::Status::counterexample,
       "palindrome lemma, length <= " + std::to_string(o.palindrome_length),
       std::to_string(p1.palindromes) + " palindromes among " + std::to_string(p1.words_checked) +
           " words, " + std::to_string(p1.counterexamples.size()) + " counterexamples"});
  report.lines.push_back(
      {p2.counterexamples.empty() ? oracle::Status::consistent : oracle::Status::counterexample,
       "z w z^-1 = w(x^-1,y^-1)^-1 lemma, length <= " + std::to_string(o.palin2_length),
       std::to_string(p2.equation_holds) + " solutions among " + std::to_string(p2.pairs_checked) +
           " pairs, " + std::to_string(p2.counterexamples.size()) + " counterexamples"});
  const oracle::OracleReport cross =
      oracle::crosscheck_decisions({o.max_length, o.margin}, o.class_range, invs);
  report.lines.insert(report.lines.end(), cross.lines.begin(), cross.lines.end());

  const std::size_t verified = report.count(oracle::Status::verified);
  const std::size_t consistent = report.count(oracle::Status::consistent);
  const std::size_t counter = report.count(oracle::Status::counterexample);
  if (o.output == "machine") {
    json doc;
    doc["bounds"] = {{"max_word_length", o.max_length},
                     {"coordinate_margin", o.margin},
                     {"class_range", o.class_range}};
    doc["lines"] = json::array();
    for (const auto& l : report.lines) {
      doc["lines"].push_back(
          {{"status", std::string(oracle::to_string(l.status))}, {"item", l.item}, {"detail", l.detail}});
    }
    doc["counts"] = {{"VERIFIED", verified}, {"CONSISTENT", consistent}, {"COUNTEREXAMPLE", counter}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& l : report.lines) {
      out << oracle::to_string(l.status) << "  " << l.item << "  [" << l.detail << "]\n";
    }
    out << "VERIFIED=" << verified << " CONSISTENT=" << consistent
        << " COUNTEREXAMPLE=" << counter << '\n';
  }
  return counter == 0 ? kExitOk : kExitFailure;
}

int cmd_rewrite(const std::string& path, const std::vector<std::string>& odd,
                const std::string& output, std::ostream& out) {
  Presentation pres;
  if (path.empty()) {
    pres = klein::braid_presentation();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw ParseError("cannot open presentation file '" + path + "'");
    }
    pres = parse_presentation(file);
  }
  const std::vector<std::string> odd_names = odd.empty() ? std::vector<std::string>{"sigma"} : odd;
  std::vector<int> parity(pres.generators.size(), 0);
  for (const std::string& name : odd_names) {
    std::size_t i;
    try {
      i = pres.index_of(name);
    } catch (const std::out_of_range&) {
      throw ParseError("--odd names undeclared generator '" + name + "'");
    }
    parity[i] = 1;
  }
  RewriteResult rw;
  try {
    rw = rs_rewrite_index2(pres, parity, pres.index_of(odd_names.front()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  std::optional<VerificationReport> model;
  try {
    model = audit::klein_rewrite_evaluation(pres, rw);
  } catch (const std::invalid_argument&) {
    // generators outside the Klein model; nothing to evaluate
  }

  if (output == "machine") {
    json doc;
    doc["generators"] = json::array();
    for (const auto& g : rw.generators) {
      doc["generators"].push_back({{"name", g.name}, {"expression", to_string(g.expression, pres.generators)}});
    }
    doc["trivial"] = json::array();
    for (const auto& g : rw.trivial) {
      doc["trivial"].push_back(g.name);
    }
    doc["relators"] = json::array();
    for (const auto& r : rw.subgroup.relators) {
      doc["relators"].push_back(to_string(r, rw.subgroup.generators));
    }
    doc["model_check"] = model ? report_json(*model) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& g : rw.generators) {
      out << "generator " << g.name << " = " << to_string(g.expression, pres.generators) << '\n';
    }
    for (const auto& g : rw.trivial) {
      out << "trivial " << g.name << '\n';
    }
    for (const auto& r : rw.subgroup.relators) {
      out << "relator " << to_string(r, rw.subgroup.generators) << '\n';
    }
    if (model) {
      print_report_text(out, *model);
    }
  }
  return !model || all_hold(*model) ? kExitOk : kExitFailure;
}

void add_input_options(CLI::App* sub, InputOptions& o) {
  sub->add_option("--surface", o.surface, "torus or klein")
      ->required()
      ->check(CLI::IsMember({"torus", "klein"}));
  sub->add_option("--involution", o.involution, "tau1, tau2 (torus) or tau3 (klein)")->required();
  sub->add_option("--class", o.class_text, "torus class \"b11,b12;b21,b22\"");
  sub->add_option("--hom", o.hom_text, "klein homomorphism \"(r1,s1),(r2,s2)\"");
  sub->add_option("--output", o.output, "text or machine")->check(CLI::IsMember({"text", "machine"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borsuk-Ulam decisions for self-maps of the torus and the Klein bottle"};
  app.require_subcommand(1);

  InputOptions decide_opts;
  auto* decide_cmd = app.add_subcommand("decide", "decide the Borsuk-Ulam property of a class");
  add_input_options(decide_cmd, decide_opts);

  InputOptions witness_opts;
  std::string a_text, b_text;
  auto* witness_cmd =
      app.add_subcommand("witness", "print and verify a witness, or verify --a/--b");
  add_input_options(witness_cmd, witness_opts);
  witness_cmd->add_option("--a", a_text, "pure braid a, e.g. \"(x; 0, 0)\"");
  witness_cmd->add_option("--b", b_text, "pure braid b");

  std::string verify_output = "text";
  auto* verify_cmd = app.add_subcommand("verify", "run the presentation and formula audits");
  verify_cmd->add_option("--output", verify_output, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "palindrome lemmas and decision cross-checks");
  oracle_cmd->add_option("--max-length", oracle_opts.max_length, "search word length bound");
  oracle_cmd->add_option("--coordinate-margin", oracle_opts.margin,
                         "search coordinate bound beyond the class magnitude");
  oracle_cmd->add_option("--class-range", oracle_opts.class_range, "entries in [-R, R]");
  oracle_cmd->add_option("--palindrome-length", oracle_opts.palindrome_length);
  oracle_cmd->add_option("--palin2-length", oracle_opts.palin2_length);
  oracle_cmd->add_option("--involution", oracle_opts.involutions, "restrict to these involutions");
  oracle_cmd->add_option("--output", oracle_opts.output, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string pres_path, rewrite_output = "text";
  std::vector<std::string> odd;
  auto* rewrite_cmd = app.add_subcommand(
      "rewrite", "Reidemeister-Schreier rewrite onto an index 2 subgroup");
  rewrite_cmd->add_option("--presentation", pres_path,
                          "presentation file (default: B2 of the Klein bottle)");
  rewrite_cmd->add_option("--odd", odd,
                          "generators of parity 1; the first is the transversal (default sigma)");
  rewrite_cmd->add_option("--output", rewrite_output, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::vector<std::string> argv_store{"surfbraid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) {
    argv.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  try {
    if (*decide_cmd) return cmd_decide(decide_opts, out);
    if (*witness_cmd) return cmd_witness(witness_opts, a_text, b_text, out);
    if (*verify_cmd) return cmd_verify(verify_output, out);
    if (*oracle_cmd) return cmd_oracle(oracle_opts, out);
    if (*rewrite_cmd) return cmd_rewrite(pres_path, odd, rewrite_output, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const NotAHomomorphism& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace surfbraid::cli
