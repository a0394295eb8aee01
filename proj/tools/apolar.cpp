// apolar: annihilator ideals, binomial complete-intersection
// classification, and strong-Lefschetz search from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "apolar/harness.hpp"

using namespace apolar;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotBinomial = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitIo = 5;

struct CommonOpts {
  std::string field_flag = "q";
  std::optional<int> n_vars;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--field", c.field_flag, "coefficient field: q or p:<prime>");
  cmd->add_option("--nvars", c.n_vars, "override the inferred variable count");
  cmd->add_flag("--json", c.json, "machine-readable JSON output");
}

Poly parse_input(const std::string& text, const CommonOpts& c) {
  FieldSpec field = FieldSpec::parse_flag(c.field_flag);
  Poly F = parse_poly(text, field, c.n_vars);
  if (F.is_zero()) throw ZeroPolynomial();
  return F;
}

int cmd_ann(const std::string& text, const CommonOpts& c) {
  Poly F = parse_input(text, c);
  AnnReport r = analyze_annihilator(F);
  if (c.json) {
    Json j;
    j["input"] = format_poly(F);
    j["mu"] = r.mu;
    j["is_ci"] = r.is_ci;
    j["socle_degree"] = r.socle_degree;
    Json gens = Json::array();
    for (const Poly& g : r.minimal_gens) gens.push_back(format_poly(g));
    j["minimal_generators"] = gens;
    if (r.hilbert) j["hilbert"] = *r.hilbert;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "input: " << format_poly(F) << "\n";
    std::cout << "mu: " << r.mu << "\n";
    std::cout << "complete intersection: " << (r.is_ci ? "yes" : "no") << "\n";
    std::cout << "socle degree: " << r.socle_degree << "\n";
    std::cout << "minimal generators:\n";
    for (const Poly& g : r.minimal_gens) std::cout << "  " << format_poly(g) << "\n";
    if (r.hilbert) {
      std::cout << "hilbert:";
      for (int h : *r.hilbert) std::cout << " " << h;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& text, const CommonOpts& c) {
  Poly F = parse_input(text, c);
  NormalizeResult nr = normalize(F);
  Json j;
  j["input"] = format_poly(F);
  if (std::holds_alternative<DegenerateMonomial>(nr)) {
    j["verdict"] = verdict_name(Verdict::degenerate_monomial);
    Json gens = Json::array();
    for (const Poly& g :
         monomial_annihilator(std::get<DegenerateMonomial>(nr).exps, F.field()))
      gens.push_back(format_poly(g));
    j["generators"] = gens;
  } else {
    const BinomialNormalForm& nf = std::get<BinomialNormalForm>(nr);
    Classification cls = classify(nf);
    j["verdict"] = verdict_name(cls.verdict);
    j["d1"] = nf.d1;
    j["d2"] = nf.d2;
    j["c1"] = nf.c1.str();
    j["c2"] = nf.c2.str();
    j["swapped"] = nf.swapped;
    if (nf.d2 >= 1) j["v"] = cls.v;
    if (cls.w) j["w"] = *cls.w;
    if (verdict_is_ci(cls.verdict)) {
      Json gens = Json::array();
      for (const Poly& g : construct_annihilator(nf)) gens.push_back(format_poly(g));
      j["generators"] = gens;
    } else if (cls.verdict == Verdict::outside_theorem_d2_zero) {
      // outside the theorem's hypotheses: answer via the kernel oracle
      AnnReport r = analyze_annihilator(F);
      j["oracle_fallback"] = true;
      j["oracle_mu"] = r.mu;
      j["oracle_ci"] = r.is_ci;
    }
  }
  if (c.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
    for (const char* k : {"d1", "d2", "v", "w"})
      if (j.contains(k)) std::cout << k << ": " << j[k].get<int>() << "\n";
    if (j.contains("oracle_fallback"))
      std::cout << "oracle fallback: mu = " << j["oracle_mu"].get<int>() << ", CI = "
                << (j["oracle_ci"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("generators")) {
      std::cout << "generators:\n";
      for (const auto& g : j["generators"]) std::cout << "  " << g.get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& text, const CommonOpts& c, const SlpOptions& slp) {
  Poly F = parse_input(text, c);
  VerifyRecord rec = verify_binomial(F, slp);
  if (c.json) {
    std::cout << record_to_json(rec, /*with_timings=*/true).dump() << "\n";
  } else {
    std::cout << "input: " << rec.input << "\n";
    if (rec.verdict) std::cout << "classifier: " << verdict_name(*rec.verdict) << "\n";
    std::cout << "oracle: mu = " << rec.oracle_mu << ", CI = " << (rec.oracle_ci ? "yes" : "no")
              << "\n";
    std::cout << "agreement: " << (rec.agreement ? "yes" : "NO") << "\n";
    if (rec.ideal_equality) std::cout << "ideal equality: " << *rec.ideal_equality << "\n";
    if (rec.slp_found)
      std::cout << "slp: " << (*rec.slp_found ? "witness " + *rec.slp_witness : "NO_WITNESS_FOUND")
                << "\n";
  }
  return rec.ok() ? 0 : kExitDisagreement;
}

int cmd_hilbert(const std::string& text, const CommonOpts& c) {
  Poly F = parse_input(text, c);
  std::vector<int> h = hilbert_function(F);
  if (c.json) {
    std::cout << Json{{"input", format_poly(F)}, {"hilbert", h}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_slp(const std::string& text, const CommonOpts& c, const SlpOptions& slp) {
  Poly F = parse_input(text, c);
  GradedAlgebra A = build_graded_quotient(F);
  SlpReport rep = find_slp_witness(A, slp.trials, slp.seed, slp.char_override);
  Json j;
  j["input"] = format_poly(F);
  j["hilbert"] = A.hilbert();
  j["trials_used"] = rep.trials_used;
  if (rep.witness) {
    j["witness"] = format_poly(*rep.witness);
  } else {
    j["witness"] = nullptr;
    j["note"] = "NO_WITNESS_FOUND: not a disproof of the strong Lefschetz property";
    Json fails = Json::array();
    for (const RankDefect& f : rep.failed_pairs)
      fails.push_back({{"i", f.i}, {"d", f.d}, {"rank", f.achieved_rank},
                       {"max_rank", f.max_possible_rank}});
    j["last_failed_pairs"] = fails;
  }
  if (c.json) {
    std::cout << j.dump() << "\n";
  } else if (rep.witness) {
    std::cout << "witness: " << format_poly(*rep.witness) << " (trials used: "
              << rep.trials_used << ")\n";
  } else {
    std::cout << "NO_WITNESS_FOUND after " << rep.trials_used
              << " candidates (evidence only, not a disproof)\n";
  }
  return 0;
}

struct CorpusCli {
  CorpusSpec spec;
  std::string out_path;
};

int cmd_corpus(CorpusCli& cc, const CommonOpts& c, bool with_slp) {
  cc.spec.field = FieldSpec::parse_flag(c.field_flag);
  cc.spec.slp.run = with_slp && (cc.spec.field.is_char_zero() || cc.spec.slp.char_override);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cc.out_path.empty()) {
    file.open(cc.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << cc.out_path << "\n";
      return kExitIo;
    }
    out = &file;
  }
  CorpusSummary sum = run_corpus(cc.spec, *out);
  std::cout << sum.to_json().dump() << "\n";
  return (sum.disagreements || sum.equality_failures || sum.slp_failures) ? kExitDisagreement : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact apolarity toolkit: annihilators, binomial CI classification, Lefschetz"};
  app.require_subcommand(1);

  std::string text;
  CommonOpts common;
  SlpOptions slp;
  bool with_slp_flag = false;
  CorpusCli corpus;

  auto* ann = app.add_subcommand("ann", "annihilator report for any polynomial");
  ann->add_option("poly", text, "polynomial text, e.g. \"X1^2*X2 - 3X2^3\"")->required();
  add_common(ann, common);

  auto* classify_cmd = app.add_subcommand("classify", "binomial CI classification + generators");
  classify_cmd->add_option("poly", text)->required();
  add_common(classify_cmd, common);

  auto* verify = app.add_subcommand("verify", "classifier vs oracle cross-check");
  verify->add_option("poly", text)->required();
  add_common(verify, common);
  verify->add_flag("--slp", with_slp_flag, "also search for a strong-Lefschetz witness");
  verify->add_option("--trials", slp.trials);
  verify->add_option("--seed", slp.seed);
  verify->add_flag("--slp-override", slp.char_override,
                   "allow the SLP search in positive characteristic");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the apolar algebra");
  hilbert->add_option("poly", text)->required();
  add_common(hilbert, common);

  auto* slp_cmd = app.add_subcommand("slp", "strong-Lefschetz witness search");
  slp_cmd->add_option("poly", text)->required();
  add_common(slp_cmd, common);
  slp_cmd->add_option("--trials", slp.trials);
  slp_cmd->add_option("--seed", slp.seed);
  slp_cmd->add_flag("--slp-override", slp.char_override);

  auto* corpus_cmd = app.add_subcommand("corpus", "generate and verify a random corpus");
  add_common(corpus_cmd, common);
  corpus_cmd->add_option("--count", corpus.spec.count);
  corpus_cmd->add_option("--seed", corpus.spec.seed);
  corpus_cmd->add_option("--nvars-min", corpus.spec.n_vars_min);
  corpus_cmd->add_option("--nvars-max", corpus.spec.n_vars_max);
  corpus_cmd->add_option("--max-a", corpus.spec.max_a);
  corpus_cmd->add_option("--max-b", corpus.spec.max_b);
  corpus_cmd->add_option("--coeff-pool", corpus.spec.coeff_pool);
  corpus_cmd->add_flag("--homogeneous-only", corpus.spec.homogeneous_only);
  corpus_cmd->add_flag("--slp", with_slp_flag);
  corpus_cmd->add_option("--trials", corpus.spec.slp.trials);
  corpus_cmd->add_flag("--slp-override", corpus.spec.slp.char_override);
  corpus_cmd->add_option("--out", corpus.out_path, "record file (JSON lines)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ann) return cmd_ann(text, common);
    if (*classify_cmd) return cmd_classify(text, common);
    if (*verify) {
      slp.run = with_slp_flag;
      return cmd_verify(text, common, slp);
    }
    if (*hilbert) return cmd_hilbert(text, common);
    if (*slp_cmd) {
      slp.run = true;
      return cmd_slp(text, common, slp);
    }
    if (*corpus_cmd) return cmd_corpus(corpus, common, with_slp_flag);
  } catch (const NotBinomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotBinomial;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ZeroPolynomial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
