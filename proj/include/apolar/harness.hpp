#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include <json.hpp>

#include "apolar/binomial.hpp"
#include "apolar/io.hpp"
#include "apolar/lefschetz.hpp"

namespace apolar {

using Json = nlohmann::json;

/// End-to-end check of one binomial: classifier vs kernel oracle, ideal
/// equality of the constructed generators, optional SLP search.
struct VerifyRecord {
  std::string input;          // canonical text of the parsed polynomial
  int n_vars = 0;
  std::optional<Verdict> verdict;
  std::optional<int> d1, d2, v, w;
  std::optional<bool> classifier_ci;  // absent for OutsideTheorem fallback
  int oracle_mu = 0;
  bool oracle_ci = false;
  bool agreement = true;
  bool oracle_fallback = false;
  std::optional<std::string> ideal_equality;  // "Equal" / "NotContained" / "ProperSubideal"
  std::vector<std::string> constructed_gens;
  std::optional<bool> slp_found;
  std::optional<std::string> slp_witness;
  std::optional<std::vector<int>> hilbert;
  double classify_ms = 0, oracle_ms = 0, slp_ms = 0;

  bool ok() const {
    return agreement && (!ideal_equality || *ideal_equality == "Equal") &&
           (!slp_found || *slp_found);
  }
};

struct SlpOptions {
  bool run = false;
  int trials = 8;
  std::uint64_t seed = 1;
  bool char_override = false;
};

inline VerifyRecord verify_binomial(const Poly& F, const SlpOptions& slp = {}) {
  VerifyRecord rec;
  rec.input = format_poly(F);
  rec.n_vars = F.context().n_vars;
  int N = rec.n_vars;

  auto t0 = std::chrono::steady_clock::now();
  NormalizeResult nr = normalize(F);
  std::vector<Poly> constructed;
  if (std::holds_alternative<DegenerateMonomial>(nr)) {
    rec.verdict = Verdict::degenerate_monomial;
    rec.classifier_ci = true;
    constructed = monomial_annihilator(std::get<DegenerateMonomial>(nr).exps, F.field());
  } else {
    const BinomialNormalForm& nf = std::get<BinomialNormalForm>(nr);
    Classification cls = classify(nf);
    rec.verdict = cls.verdict;
    rec.d1 = nf.d1;
    rec.d2 = nf.d2;
    if (nf.d2 >= 1) rec.v = cls.v;
    rec.w = cls.w;
    if (cls.verdict == Verdict::outside_theorem_d2_zero) {
      rec.oracle_fallback = true;
    } else {
      rec.classifier_ci = verdict_is_ci(cls.verdict);
      if (*rec.classifier_ci) constructed = construct_annihilator(nf);
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.classify_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  TruncatedIdeal I = annihilator_truncated(F);
  rec.oracle_mu = minimal_generators(I).first;
  rec.oracle_ci = (rec.oracle_mu == N);
  if (F.is_homogeneous()) rec.hilbert = hilbert_function(F);
  if (rec.classifier_ci) rec.agreement = (*rec.classifier_ci == rec.oracle_ci);

  if (!constructed.empty()) {
    IdealCheck chk = ideal_equals_ann(constructed, F, &I);
    switch (chk.result) {
      case IdealCmp::equal: rec.ideal_equality = "Equal"; break;
      case IdealCmp::not_contained: rec.ideal_equality = "NotContained"; break;
      case IdealCmp::proper_subideal: rec.ideal_equality = "ProperSubideal"; break;
    }
    for (const Poly& g : constructed) rec.constructed_gens.push_back(format_poly(g));
  }
  auto t2 = std::chrono::steady_clock::now();
  rec.oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

  bool quotient_ci = rec.oracle_ci && rec.oracle_mu == N;
  if (slp.run && quotient_ci && F.is_homogeneous() &&
      (F.field().is_char_zero() || slp.char_override)) {
    GradedAlgebra A = build_graded_quotient(F);
    SlpReport rep = find_slp_witness(A, slp.trials, slp.seed, slp.char_override);
    rec.slp_found = rep.witness.has_value();
    if (rep.witness) rec.slp_witness = format_poly(*rep.witness);
    auto t3 = std::chrono::steady_clock::now();
    rec.slp_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
  }
  return rec;
}

/// JSON form of a record.  Timing fields are included only on demand so
/// corpus output stays byte-deterministic.
inline Json record_to_json(const VerifyRecord& r, bool with_timings = false) {
  Json j;
  j["input"] = r.input;
  j["n_vars"] = r.n_vars;
  if (r.verdict) j["verdict"] = verdict_name(*r.verdict);
  if (r.d1) j["d1"] = *r.d1;
  if (r.d2) j["d2"] = *r.d2;
  if (r.v) j["v"] = *r.v;
  if (r.w) j["w"] = *r.w;
  if (r.classifier_ci) j["classifier_ci"] = *r.classifier_ci;
  j["oracle_mu"] = r.oracle_mu;
  j["oracle_ci"] = r.oracle_ci;
  j["agreement"] = r.agreement;
  if (r.oracle_fallback) j["oracle_fallback"] = true;
  if (r.ideal_equality) j["ideal_equality"] = *r.ideal_equality;
  if (!r.constructed_gens.empty()) j["constructed_generators"] = r.constructed_gens;
  if (r.hilbert) j["hilbert"] = *r.hilbert;
  if (r.slp_found) {
    j["slp_found"] = *r.slp_found;
    if (r.slp_witness) j["slp_witness"] = *r.slp_witness;
  }
  if (with_timings) {
    j["timings_ms"] = {{"classify", r.classify_ms}, {"oracle", r.oracle_ms}, {"slp", r.slp_ms}};
  }
  return j;
}

/// Deterministic corpus of random binomials.
struct CorpusSpec {
  int n_vars_min = 2;
  int n_vars_max = 4;
  int max_a = 2;
  int max_b = 2;
  std::int64_t coeff_pool = 3;
  int count = 100;
  std::uint64_t seed = 0;
  bool homogeneous_only = false;
  FieldSpec field = FieldSpec::rationals();
  SlpOptions slp;
};

/// Generate the k-th corpus binomial; pure function of (spec, stream state).
inline Poly corpus_sample(const CorpusSpec& spec, std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) {  // inclusive; avoids std::uniform_int_distribution
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (;;) {
    int n = uniform(spec.n_vars_min, spec.n_vars_max);
    ExponentVector a(n), bl(n, 0), br(n, 0);
    for (int i = 0; i < n; ++i) a[i] = uniform(0, spec.max_a);
    for (int i = 0; i < n; ++i) {
      switch (uniform(0, 2)) {
        case 0: bl[i] = uniform(1, spec.max_b); break;
        case 1: br[i] = uniform(1, spec.max_b); break;
        default: break;
      }
    }
    if (total_degree(bl) == 0 || total_degree(br) == 0) continue;
    if (spec.homogeneous_only) {
      int dl = total_degree(bl), dr = total_degree(br);
      // rescale the last right-support entry to match the left degree
      for (int i = n - 1; i >= 0; --i) {
        if (br[i] == 0) continue;
        int adjusted = br[i] + (dl - dr);
        if (adjusted >= 1 && adjusted <= std::max(spec.max_b, dl)) {
          br[i] = adjusted;
          dr = dl;
        }
        break;
      }
      if (dr != dl) continue;  // resample
    }
    FieldElem c1 = sample_nonzero(spec.field, rng(), spec.coeff_pool);
    FieldElem c2 = sample_nonzero(spec.field, rng(), spec.coeff_pool);
    Poly F(VarContext{n, VarRole::dual}, spec.field);
    F.add_term(ev_add(a, bl), c1);
    F.add_term(ev_add(a, br), -c2);
    if (F.n_terms() != 2) continue;
    return F;
  }
}

struct CorpusSummary {
  int total = 0;
  int disagreements = 0;
  int equality_failures = 0;
  int slp_failures = 0;
  std::map<std::string, int> per_verdict;

  Json to_json() const {
    return Json{{"total", total},
                {"disagreements", disagreements},
                {"equality_failures", equality_failures},
                {"slp_failures", slp_failures},
                {"per_verdict", per_verdict}};
  }
};

/// Runs the corpus, writing one JSON record per line.  Byte-deterministic
/// for a fixed spec (records carry no timings).
inline CorpusSummary run_corpus(const CorpusSpec& spec, std::ostream& records_out) {
  std::mt19937_64 rng(spec.seed);
  CorpusSummary sum;
  for (int k = 0; k < spec.count; ++k) {
    Poly F = corpus_sample(spec, rng);
    VerifyRecord rec = verify_binomial(F, spec.slp);
    records_out << record_to_json(rec).dump() << "\n";
    ++sum.total;
    if (rec.verdict) ++sum.per_verdict[verdict_name(*rec.verdict)];
    if (!rec.agreement) ++sum.disagreements;
    if (rec.ideal_equality && *rec.ideal_equality != "Equal") ++sum.equality_failures;
    if (rec.slp_found && !*rec.slp_found) ++sum.slp_failures;
  }
  return sum;
}

}  // namespace apolar
