#include <algorithm>
#include <set>

#include "common.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/structure.hpp"
#include "fncalc/torus/sweep.hpp"

namespace fncalc::cli {

using torus::Frequency;
using torus::ModeOperators;
using torus::SweepConfig;
using torus::SweepResult;

namespace {

bool is_zero_mode(const Frequency& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

std::string mode_text(const Frequency& k) { return Json(k).dump(); }

Check flag(const std::string& name, bool ok, std::optional<std::string> witness = std::nullopt) {
  Check c;
  c.name = name;
  c.pass = ok;
  if (!ok) c.witness = std::move(witness);
  return c;
}

/// First record/degree pair violating `bad`, as "k=[..] l=..".
template <class Pred>
std::optional<std::string> find_mode(const SweepResult& r, const std::set<int>& degrees, Pred bad) {
  for (const auto& rec : r.records) {
    for (const auto& rep : rec.reports) {
      if (degrees.count(rep.degree) != 0 && bad(rec, rep)) {
        return "k=" + mode_text(rec.frequency) + " l=" + std::to_string(rep.degree);
      }
    }
  }
  return std::nullopt;
}

PsiChoice torus_psi(const SuiteConfig& config) {
  return resolve_psi(config.psi.empty() ? "star-phi" : config.psi, config.dim, true, 6);
}

}  // namespace

SuiteReport torus_cohomology(const SuiteConfig& config) {
  const auto psi = torus_psi(config);
  const ModeOperators ops(psi.form);
  const int n = ops.dim();
  const bool star_phi = psi.label == "star-phi";

  SweepConfig sc;
  sc.max_freq = config.max_freq;
  sc.threads = config.threads;
  std::set<int> reported;
  if (config.degree) {
    const int l = *config.degree;
    if (l < 0 || l > n) throw std::invalid_argument("--degree must lie in 0.." + std::to_string(n));
    reported = {l};
    sc.degrees = {std::min(l, n - l), std::max(l, n - l)};
    sc.degrees.erase(std::unique(sc.degrees.begin(), sc.degrees.end()), sc.degrees.end());
  } else {
    for (int l = 0; l <= n; ++l) reported.insert(l);
  }
  const SweepResult r = torus::sweep(ops, sc);

  SuiteReport report;
  report.config = Json{{"psi", psi.label}, {"max_freq", config.max_freq}};
  if (config.degree) report.config["degree"] = *config.degree;
  report.data["psi"] = psi.label;
  report.data["max_freq"] = config.max_freq;

  Json modes = Json::array();
  for (const auto& rec : r.records) {
    for (const auto& rep : rec.reports) {
      if (reported.count(rep.degree) == 0) continue;
      modes.push_back(Json{{"k", rec.frequency},
                           {"degree", rep.degree},
                           {"dims",
                            {{"ker_lie", rep.ker_lie},
                             {"im_lie", rep.im_lie},
                             {"harmonic", rep.harmonic},
                             {"cohomology", rep.cohomology},
                             {"harmonic_forms", rep.harmonic_forms},
                             {"d_part", rep.d_part},
                             {"dstar_part", rep.dstar_part},
                             {"regular", rep.regular}}}});
    }
  }
  report.data["modes"] = modes;

  Json totals = Json::object();
  bool equal = true, regular = true, split = true, duality = true, no_forms = true, zero_full = true;
  for (int l : reported) {
    const auto& t = r.totals.at(l);
    // Real forms pair the modes k and -k, so the real dimension over all
    // nonzero modes equals the sum of the complex per-mode dimensions.
    totals[std::to_string(l)] = Json{{"zero_mode_harmonic", t.zero_mode_harmonic},
                                     {"nonzero_harmonic_complex", t.nonzero_harmonic},
                                     {"nonzero_harmonic_real", t.nonzero_harmonic},
                                     {"nonzero_cohomology", t.nonzero_cohomology},
                                     {"modes_with_harmonic", t.modes_with_harmonic},
                                     {"regular", t.regular}};
    equal = equal && t.cohomology_equals_harmonic;
    regular = regular && t.regular;
    split = split && t.split_complete;
    duality = duality && t.duality;
    no_forms = no_forms && t.zero_harmonic_forms;
    zero_full = zero_full && t.zero_mode_harmonic == exterior::binomial(n, l);
  }
  report.data["totals"] = totals;
  report.data["vector_fields"] = Json{{"h0_total", r.h0_total}, {"h0_nonzero", r.h0_nonzero}};

  report.checks.push_back(flag("cohomology-equals-harmonic", equal, find_mode(r, reported, [](auto&, auto& rep) {
                                 return rep.cohomology < 0 || static_cast<std::size_t>(rep.cohomology) != rep.harmonic;
                               })));
  report.checks.push_back(
      flag("regularity-split", regular, find_mode(r, reported, [](auto&, auto& rep) { return !rep.regular; })));
  report.checks.push_back(flag("harmonic-split-complete", split, find_mode(r, reported, [](auto&, auto& rep) {
                                 return rep.harmonic_forms + rep.d_part + rep.dstar_part != rep.harmonic;
                               })));
  report.checks.push_back(flag("hodge-duality", duality));
  report.checks.push_back(flag("no-nonzero-mode-harmonic-forms", no_forms));
  report.checks.push_back(flag("zero-mode-all-constants", zero_full));
  report.checks.push_back(flag("anticommutation", r.anticommutation));
  if (!config.degree) report.checks.push_back(flag("split-transfer", r.split_transfer));

  if (star_phi) {
    for (int l : reported) {
      const auto& t = r.totals.at(l);
      if (l <= 1 || l >= n - 1) {
        report.checks.push_back(flag("nonzero-modes-vanish[l=" + std::to_string(l) + "]", t.nonzero_harmonic == 0,
                                     find_mode(r, {l}, [](auto& rec, auto& rep) {
                                       return !is_zero_mode(rec.frequency) && rep.harmonic != 0;
                                     })));
      } else {
        report.checks.push_back(flag("nonzero-modes-positive[l=" + std::to_string(l) + "]", t.nonzero_harmonic > 0));
      }
    }
    report.checks.push_back(flag("parallel-vector-fields", r.h0_total == static_cast<std::size_t>(n) && r.h0_nonzero == 0,
                                 "h0_total=" + std::to_string(r.h0_total) + " h0_nonzero=" + std::to_string(r.h0_nonzero)));
  }
  return report;
}

SuiteReport symbol_check(const SuiteConfig& config) {
  const auto psi = torus_psi(config);
  const ModeOperators ops(psi.form);
  const int n = ops.dim();
  SweepConfig sc;
  sc.max_freq = config.max_freq;
  sc.threads = config.threads;
  sc.anticommutation = false;
  sc.symbols = true;
  const SweepResult r = torus::sweep(ops, sc);

  SuiteReport report;
  report.config = Json{{"psi", psi.label}, {"max_freq", config.max_freq}};

  // Class counts per degree over the nonzero modes.
  std::vector<std::map<std::string, std::size_t>> counts(static_cast<std::size_t>(n) + 1);
  std::vector<std::optional<std::string>> first_mode(static_cast<std::size_t>(n) + 1);
  std::optional<std::string> one_form_witness;
  std::size_t one_form_checked = 0;
  for (const auto& rec : r.records) {
    if (is_zero_mode(rec.frequency)) continue;
    for (int l = 0; l <= n; ++l) ++counts[static_cast<std::size_t>(l)][torus::to_string(rec.symbols[static_cast<std::size_t>(l)])];
    ++one_form_checked;
    if (!one_form_witness && !torus::one_form_kernel_check(ops, rec.frequency)) one_form_witness = "k=" + mode_text(rec.frequency);
  }
  Json classes = Json::object();
  for (int l = 0; l <= n; ++l) {
    Json row = Json::object();
    for (const auto& [name, count] : counts[static_cast<std::size_t>(l)]) row[name] = count;
    classes[std::to_string(l)] = row;
  }
  report.data["symbol_classes"] = classes;

  auto all_in = [&](int l, std::initializer_list<const char*> names) {
    std::size_t hit = 0, total = 0;
    for (const auto& [name, count] : counts[static_cast<std::size_t>(l)]) {
      total += count;
      for (const char* want : names)
        if (name == want) hit += count;
    }
    return hit == total;
  };

  bool regular = true;
  for (const auto& [l, t] : r.totals) regular = regular && t.regular;
  std::set<int> all;
  for (int l = 0; l <= n; ++l) all.insert(l);
  report.checks.push_back(
      flag("regularity-split[all degrees]", regular, find_mode(r, all, [](auto&, auto& rep) { return !rep.regular; })));
  Check okc = flag("one-form-kernel", !one_form_witness, one_form_witness);
  okc.samples = one_form_checked;
  report.checks.push_back(okc);
  report.checks.push_back(flag("multisymplectic", g2::multisymplectic_check(psi.form)));
  if (psi.label == "star-phi") {
    // The symbol of L_{Ψ;3} on 0-forms, of L_{Ψ;4} on 1-forms, and L_{Ψ;7}.
    report.checks.push_back(flag("symbol-injective[l=3]", all_in(3, {"injective", "bijective"})));
    report.checks.push_back(flag("symbol-injective[l=4]", all_in(4, {"injective", "bijective"})));
    report.checks.push_back(flag("symbol-surjective[l=7]", all_in(7, {"surjective", "bijective"})));
    report.checks.push_back(flag("parallel-vector-fields", r.h0_total == 7 && r.h0_nonzero == 0,
                                 "h0_total=" + std::to_string(r.h0_total) + " h0_nonzero=" + std::to_string(r.h0_nonzero)));
  }
  return report;
}

}  // namespace fncalc::cli
