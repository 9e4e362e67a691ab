#include "altlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include <CLI11.hpp>

#include "altlab/acv_geometry.hpp"
#include "altlab/alternants.hpp"
#include "altlab/det_isotypic.hpp"
#include "altlab/freeness.hpp"
#include "altlab/report.hpp"

namespace altlab {

namespace {

constexpr std::uint32_t kSupportedPrime = Fp31::modulus;

bool needs_k(const std::string& cmd) { return cmd == "hilbert" || cmd == "freeness"; }

const char* mode_name(const RunConfig& cfg) { return cfg.mode == Mode::Exact ? "exact" : "prime"; }

Json config_json(const RunConfig& cfg) {
  Json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["cutoff"] = to_json(cfg.cutoff);
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["mode"] = cfg.mode == Mode::Exact ? std::string("exact") : "prime:" + std::to_string(cfg.prime);
  j["output"] = cfg.output == OutputFormat::Json ? "json" : "csv";
  j["force"] = cfg.force;
  if (cfg.command == "prop-ak" || cfg.command == "variety") j["tuples"] = cfg.tuples;
  if (cfg.command == "variety") j["translates"] = cfg.translates;
  if (cfg.stratum) j["r"] = *cfg.stratum;
  if (cfg.plant) {
    j["plant_torsion"] = to_json(*cfg.plant);
    j["plant_shift"] = to_json(cfg.plant_shift);
  }
  return j;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ReportEnvelope envelope(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = cfg.command;
  env.command_line = cfg.command_line;
  env.config = config_json(cfg);
  return env;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitViolation;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitViolation;
}

template <class S>
CommandResult hilbert_impl(const RunConfig& cfg, const Parallelism& par) {
  Stopwatch clock;
  AkBasisCache<S> cache;
  const auto table = hilbert_table(cfg.k, cfg.n, cfg.cutoff, cache, par);
  const std::string csv = table_to_csv(table, cfg.cutoff);

  ReportEnvelope env = envelope(cfg);
  env.body["n"] = cfg.n;
  env.body["k"] = cfg.k;
  env.body["cutoff"] = to_json(cfg.cutoff);
  env.body["mode"] = mode_name(cfg);
  env.body["certified"] = ScalarTraits<S>::exact;
  env.body["table"] = table_to_json(table, cfg.cutoff);
  if (cfg.with_bases) {
    Json bases = Json::array();
    for (const auto& [bd, dim] : table) {
      const auto basis = cache.get(cfg.k, bd, cfg.n);
      Json vectors = Json::array();
      for (const auto& v : basis->vectors()) vectors.push_back(v.str());
      bases.push_back({{"bidegree", to_json(bd)}, {"dim", dim}, {"vectors", vectors}, {"provenance", basis->provenance()}});
    }
    env.body["bases"] = std::move(bases);
  }
  env.verdict = "pass";
  env.table_hashes["hilbert_csv"] = sha256_hex(csv);
  env.wall_clock_ms = clock.ms();

  CommandResult res;
  res.out = cfg.output == OutputFormat::Csv ? csv : env.dump();
  res.err = "hilbert: n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) + " window " + cfg.cutoff.str() +
            " done\n";
  return res;
}

template <class S>
CommandResult freeness_impl(const RunConfig& cfg, const Parallelism& par) {
  Stopwatch clock;
  AkBasisCache<S> cache;
  std::shared_ptr<const GradedModule<S>> module = make_ak_module(cfg.n, cfg.k, cfg.cutoff, cache, par);
  if (cfg.plant) module = planted_torsion_module(module, cfg.plant_shift, *cfg.plant);
  FreenessAnalysis<S> analysis(module, par);
  FreenessReport rep = analysis.report(LiftRule::Canonical);
  rep.k = cfg.k;
  const FreenessReport alt = analysis.report(LiftRule::Greedy);
  const bool lift_invariant = alt.generator_counts == rep.generator_counts && alt.certificate_ok == rep.certificate_ok;
  if (!lift_invariant) {
    rep.failures.push_back("generator counts depend on the lift rule");
    rep.verdict = Verdict::Fail;
  }

  ReportEnvelope env = envelope(cfg);
  env.body = to_json(rep);
  env.body["mode"] = mode_name(cfg);
  env.body["certified"] = ScalarTraits<S>::exact;
  env.body["lift_invariant"] = lift_invariant;
  if (cfg.plant) {
    auto it = rep.kernel_dims.find({1, *cfg.plant});
    env.body["planted"] = {{"bidegree", to_json(*cfg.plant)},
                           {"shift", to_json(cfg.plant_shift)},
                           {"kernel_at_plant", it == rep.kernel_dims.end() ? Json(nullptr) : Json(it->second)}};
  }
  const std::string fiber_csv = table_to_csv(rep.fiber_series, cfg.cutoff);
  env.table_hashes["fiber_csv"] = sha256_hex(fiber_csv);
  env.table_hashes["hilbert_csv"] = sha256_hex(table_to_csv(rep.hilbert, cfg.cutoff));
  env.wall_clock_ms = clock.ms();

  CommandResult res;
  if (ScalarTraits<S>::exact) {
    env.verdict = verdict_name(rep.verdict);
    res.exit_code = exit_for(rep.verdict);
  } else {
    // Ranks mod p only bound the rational ranks; nothing here is final.
    env.verdict = "inconclusive";
    env.body["exploratory_verdict"] = verdict_name(rep.verdict);
    res.exit_code = kExitInconclusive;
  }
  res.out = cfg.output == OutputFormat::Csv ? fiber_csv : env.dump();
  res.err = "freeness: " + rep.module + " window " + cfg.cutoff.str() + ": " + env.verdict + "\n";
  for (const auto& f : rep.failures) res.err += "  " + f + "\n";
  return res;
}

std::vector<BiDegree> window_cells(BiDegree cutoff) {
  std::vector<BiDegree> cells;
  for (int a = 0; a <= cutoff.dx; ++a)
    for (int b = 0; b <= cutoff.dy; ++b) cells.push_back({a, b});
  return cells;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (n > 4 && !force) throw UsageError("cost guard: n > 4 needs --force");
  if (needs_k(command) && k < 1) throw UsageError("--k must be >= 1 for " + command);
  if (k < 0) throw UsageError("--k must be >= 0");
  if (k >= 2 && n > 3 && !force) throw UsageError("cost guard: n > 3 with k >= 2 needs --force");
  if (!cutoff.nonnegative()) throw UsageError("cutoff degrees must be >= 0");
  if ((cutoff.dx + 1) * (cutoff.dy + 1) > 64 && !force)
    throw UsageError("cost guard: (cutoff-x + 1) * (cutoff-y + 1) > 64 needs --force");
  if (samples < -1) throw UsageError("--samples must be >= 0");
  if (tuples < -1 || translates < 0 || trials < 0) throw UsageError("counts must be >= 0");
  if (mode == Mode::Prime && !(command == "hilbert" || command == "freeness"))
    throw UsageError("prime-field mode is only available for hilbert and freeness");
  if (mode == Mode::Prime && prime != kSupportedPrime)
    throw UsageError("unsupported prime; use prime:" + std::to_string(kSupportedPrime));
  if (output == OutputFormat::Csv && !(command == "hilbert" || command == "freeness"))
    throw UsageError("csv output is only available for hilbert and freeness");
  if (command == "freeness" && cutoff.dy < n) throw UsageError("freeness needs --cutoff-y >= n");
  if (stratum && (*stratum < 0 || *stratum > n)) throw UsageError("stratum r must lie in 0..n");
  if (command == "sample" && !stratum) throw UsageError("sample needs --r");
  if (plant && command != "freeness") throw UsageError("torsion planting only applies to freeness");
}

CommandResult cmd_hilbert(const RunConfig& cfg, const Parallelism& par) {
  cfg.validate();
  return cfg.mode == Mode::Exact ? hilbert_impl<Rational>(cfg, par) : hilbert_impl<Fp31>(cfg, par);
}

CommandResult cmd_freeness(const RunConfig& cfg, const Parallelism& par) {
  cfg.validate();
  return cfg.mode == Mode::Exact ? freeness_impl<Rational>(cfg, par) : freeness_impl<Fp31>(cfg, par);
}

CommandResult cmd_prop_ak(const RunConfig& cfg, const Parallelism& par) {
  cfg.validate();
  using S = Rational;
  Stopwatch clock;
  const int tuples = cfg.tuples < 0 ? 100 : cfg.tuples;
  const int points = cfg.samples < 0 ? 50 : cfg.samples;

  std::vector<char> wedge_ok(static_cast<std::size_t>(tuples), 0);
  parallel_for(wedge_ok.size(), par, [&](std::size_t t) {
    Rng rng(cfg.seed, 0x77ED6E00ull + t);
    const NCTuple f = random_nctuple(rng, cfg.n, 4);
    wedge_ok[t] = wedge_identity_check<S>(f, cfg.trials, mix_seed(cfg.seed, 0x77ED6E00ull + t));
  });
  const auto wedge_passed = static_cast<std::size_t>(std::count(wedge_ok.begin(), wedge_ok.end(), 1));

  AkBasisCache<S> cache;
  if (cfg.k >= 1) warm_cache(cfg.k, cfg.n, cfg.cutoff, cache, par);
  const auto cells = window_cells(cfg.cutoff);
  std::vector<Json> rows(cells.size());
  std::vector<Verdict> verdicts(cells.size(), Verdict::Pass);
  parallel_for(cells.size(), par, [&](std::size_t c) {
    const BiDegree bd = cells[c];
    Json row;
    row["n"] = cfg.n;
    row["k"] = cfg.k;
    row["bidegree"] = to_json(bd);
    Verdict v = Verdict::Pass;
    if (cfg.k >= 1) {
      const auto surj = surjectivity_check(cfg.k, bd, cfg.n, cache);
      const auto inj = injectivity_evidence(cfg.k, bd, cfg.n, points, mix_seed(cfg.seed, 0x1A1EC700ull + c), cache);
      row["span_dim"] = surj.span_dim;
      row["target_dim"] = surj.target_dim;
      row["eval_rank"] = inj.eval_rank;
      row["image_rank"] = inj.image_rank;
      row["surjectivity"] = to_json(surj);
      row["injectivity"] = to_json(inj);
      if (!surj.pass)
        v = Verdict::Fail;
      else if (inj.verdict != Verdict::Pass)
        v = inj.verdict;
    }
    const auto k0 = k0_remark_check<S>(bd, cfg.n, bd.dx + bd.dy, mix_seed(cfg.seed, 0x0C0FFEEull + c));
    row["k0"] = to_json(k0);
    if (!k0.pass) v = Verdict::Fail;
    row["verdict"] = verdict_name(v);
    rows[c] = std::move(row);
    verdicts[c] = v;
  });

  Verdict overall = wedge_passed == wedge_ok.size() ? Verdict::Pass : Verdict::Fail;
  for (Verdict v : verdicts) {
    if (v == Verdict::Fail) overall = Verdict::Fail;
    if (v == Verdict::Inconclusive && overall == Verdict::Pass) overall = Verdict::Inconclusive;
  }

  ReportEnvelope env = envelope(cfg);
  env.body["n"] = cfg.n;
  env.body["k"] = cfg.k;
  env.body["cutoff"] = to_json(cfg.cutoff);
  env.body["wedge_identity"] = {{"tuples", tuples}, {"trials_per_tuple", cfg.trials}, {"passed", wedge_passed}};
  env.body["injectivity_points"] = points;
  env.body["per_bidegree"] = rows;
  env.body["verdict"] = verdict_name(overall);
  env.verdict = verdict_name(overall);
  env.wall_clock_ms = clock.ms();

  CommandResult res;
  res.exit_code = exit_for(overall);
  res.out = env.dump();
  res.err = "prop-ak: n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) + ": " + env.verdict + "\n";
  return res;
}

namespace {

struct SampleOutcome {
  bool sampled = false;
  std::string error;
  bool on_variety = false;
  bool krylov_ok = false;
  bool distinct_eigenvalues = false;
  std::size_t jacobian_rank = 0;
  bool psi_vanishing_ok = true;
  bool phi_vanishing_ok = true;
  std::size_t psi_nonzero = 0;
  std::size_t phi_nonzero = 0;
  bool equivariance_ok = true;
  bool char_poly_invariant = true;
  bool translate_on_variety = true;
};

SampleOutcome check_sample(int n, int r, std::uint64_t seed, std::uint64_t task, int tuples, int translates) {
  using S = Rational;
  SampleOutcome out;
  MPoint<S> p = [&] {
    try {
      return std::optional(sample_stratum<S>(n, r, mix_seed(seed, task)));
    } catch (const SamplerFailure& e) {
      out.error = e.what();
      return std::optional<MPoint<S>>();
    }
  }().value_or(restriction_point<S>(std::vector<S>(n, S(0)), std::vector<S>(n, S(0))));
  if (!out.error.empty()) return out;
  out.sampled = true;
  out.on_variety = p.on_variety();
  out.krylov_ok = krylov_col_dim(p) == static_cast<std::size_t>(n - r) && krylov_row_dim(p) == static_cast<std::size_t>(r);
  out.distinct_eigenvalues = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && !is_zero<S>(p.Y()(a, b))) out.distinct_eigenvalues = false;
      if (a < b && p.Y()(a, a) == p.Y()(b, b)) out.distinct_eigenvalues = false;
    }
  out.jacobian_rank = jacobian_rank(p);

  Rng rng(seed, task ^ 0xA5A5A5A5ull);
  for (int t = 0; t < tuples; ++t) {
    const NCTuple f = random_nctuple(rng, n, 4);
    const S psi = psi_eval(p, f), phi = phi_eval(p, f);
    out.psi_nonzero += !is_zero(psi);
    out.phi_nonzero += !is_zero(phi);
    if (r != 0 && !is_zero(psi)) out.psi_vanishing_ok = false;
    if (r != n && !is_zero(phi)) out.phi_vanishing_ok = false;
  }
  const auto cp = char_poly_coeffs(p);
  for (int t = 0; t < translates; ++t) {
    const Matrix<S> g = random_invertible<S>(rng, n);
    const S det = bareiss_determinant(g);
    const MPoint<S> q = g_translate(p, g);
    const NCTuple f = random_nctuple(rng, n, 4);
    if (psi_eval(q, f) != det * psi_eval(p, f)) out.equivariance_ok = false;
    if (phi_eval(q, f) * det != phi_eval(p, f)) out.equivariance_ok = false;
    if (char_poly_coeffs(q) != cp) out.char_poly_invariant = false;
    if (!q.on_variety()) out.translate_on_variety = false;
  }
  return out;
}

}  // namespace

CommandResult cmd_variety(const RunConfig& cfg, const Parallelism& par) {
  cfg.validate();
  Stopwatch clock;
  const int n = cfg.n;
  const int samples = cfg.samples < 0 ? 20 : cfg.samples;
  const int tuples = cfg.tuples < 0 ? 50 : cfg.tuples;
  std::vector<int> strata;
  for (int r = 0; r <= n; ++r)
    if (!cfg.stratum || *cfg.stratum == r) strata.push_back(r);

  const std::size_t per = static_cast<std::size_t>(samples);
  std::vector<SampleOutcome> outcomes(strata.size() * per);
  parallel_for(outcomes.size(), par, [&](std::size_t t) {
    const int r = strata[t / per];
    const auto s = t % per;
    outcomes[t] = check_sample(n, r, cfg.seed, static_cast<std::uint64_t>(r) * 1000003ull + s, tuples, cfg.translates);
  });

  const std::size_t expected_rank = static_cast<std::size_t>(n * n);
  bool all_ok = true;
  Json strata_json = Json::array();
  for (std::size_t si = 0; si < strata.size(); ++si) {
    const int r = strata[si];
    std::size_t verified = 0, krylov = 0, full_rank = 0, psi_nonzero = 0, phi_nonzero = 0;
    bool psi_ok = true, phi_ok = true, equiv_ok = true, cp_ok = true, translate_ok = true, eig_ok = true;
    std::map<std::size_t, std::size_t> ranks;
    std::vector<std::string> errors;
    for (std::size_t s = 0; s < per; ++s) {
      const auto& o = outcomes[si * per + s];
      if (!o.sampled) {
        errors.push_back(o.error);
        continue;
      }
      verified += o.on_variety;
      krylov += o.krylov_ok;
      full_rank += o.jacobian_rank == expected_rank;
      ++ranks[o.jacobian_rank];
      psi_ok = psi_ok && o.psi_vanishing_ok;
      phi_ok = phi_ok && o.phi_vanishing_ok;
      equiv_ok = equiv_ok && o.equivariance_ok;
      cp_ok = cp_ok && o.char_poly_invariant;
      translate_ok = translate_ok && o.translate_on_variety;
      eig_ok = eig_ok && o.distinct_eigenvalues;
      psi_nonzero += o.psi_nonzero;
      phi_nonzero += o.phi_nonzero;
    }
    Json ranks_json = Json::object();
    for (const auto& [rank, count] : ranks) ranks_json[std::to_string(rank)] = count;
    const bool ok = errors.empty() && verified == per && krylov == per && full_rank == per && psi_ok && phi_ok &&
                    equiv_ok && cp_ok && translate_ok && eig_ok;
    all_ok = all_ok && ok;
    strata_json.push_back({{"r", r},
                           {"samples", per},
                           {"on_variety", verified},
                           {"krylov_ok", krylov},
                           {"distinct_eigenvalues", eig_ok},
                           {"jacobian_rank_counts", ranks_json},
                           {"full_jacobian_rank", full_rank},
                           {"psi_vanishing_ok", psi_ok},
                           {"phi_vanishing_ok", phi_ok},
                           {"psi_nonzero_evaluations", psi_nonzero},
                           {"phi_nonzero_evaluations", phi_nonzero},
                           {"equivariance_ok", equiv_ok},
                           {"char_poly_invariant", cp_ok},
                           {"translates_on_variety", translate_ok},
                           {"sampler_errors", errors},
                           {"verdict", ok ? "pass" : "fail"}});
  }

  ReportEnvelope env = envelope(cfg);
  env.body["n"] = n;
  env.body["samples_per_stratum"] = samples;
  env.body["tuples_per_sample"] = tuples;
  env.body["translates_per_sample"] = cfg.translates;
  env.body["expected_jacobian_rank"] = expected_rank;
  env.body["ambient_dimension"] = 2 * n * n + 2 * n;
  env.body["local_dimension"] = 2 * n * n + 2 * n - n * n;
  env.body["strata"] = std::move(strata_json);
  env.body["verdict"] = all_ok ? "pass" : "fail";
  env.verdict = all_ok ? "pass" : "fail";
  env.wall_clock_ms = clock.ms();

  CommandResult res;
  res.exit_code = all_ok ? kExitPass : kExitViolation;
  res.out = env.dump();
  res.err = "variety: n=" + std::to_string(n) + ": " + env.verdict + "\n";
  return res;
}

CommandResult cmd_sample(const RunConfig& cfg, const Parallelism&) {
  cfg.validate();
  Stopwatch clock;
  ReportEnvelope env = envelope(cfg);
  CommandResult res;
  try {
    const auto p = sample_stratum<Rational>(cfg.n, *cfg.stratum, cfg.seed);
    env.body["point"] = mpoint_to_json(p);
    env.body["krylov_col_dim"] = krylov_col_dim(p);
    env.body["krylov_row_dim"] = krylov_row_dim(p);
    env.body["jacobian_rank"] = jacobian_rank(p);
    Json cp = Json::array();
    for (const auto& c : char_poly_coeffs(p)) cp.push_back(c.str());
    env.body["char_poly_coeffs"] = std::move(cp);
    env.verdict = "pass";
  } catch (const SamplerFailure& e) {
    env.body["error"] = e.what();
    env.verdict = "fail";
    res.exit_code = kExitViolation;
  }
  env.wall_clock_ms = clock.ms();
  res.out = env.dump();
  return res;
}

CommandResult run_cli(const std::vector<std::string>& args, const Parallelism& par) {
  RunConfig cfg;
  cfg.command_line = args;
  CLI::App app{"altlab: alternating polynomials, A^k freeness and the almost commuting variety"};
  app.require_subcommand(1);

  std::string mode = "exact", output = "json";
  int plant_x = -1, plant_y = -1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of variable pairs / matrix size");
    sub->add_option("--k", cfg.k, "power k of A^k");
    sub->add_option("--cutoff-x", cfg.cutoff.dx, "largest x-degree of the window");
    sub->add_option("--cutoff-y", cfg.cutoff.dy, "largest y-degree of the window");
    sub->add_option("--seed", cfg.seed, "seed; equal seeds give identical report bodies");
    sub->add_option("--samples", cfg.samples, "points per stratum (variety) or evaluation points (prop-ak)");
    sub->add_option("--mode", mode, "exact | prime | prime:<p>");
    sub->add_option("--output", output, "json | csv");
    sub->add_flag("--force", cfg.force, "override the cost guard");
  };
  auto* hilbert = app.add_subcommand("hilbert", "tabulate dim (A^k)_(a,b) over the window");
  common(hilbert);
  hilbert->add_flag("--bases", cfg.with_bases, "include the row-reduced bases");
  auto* freeness = app.add_subcommand("freeness", "certify A^k free over symmetric polynomials in y, up to the window");
  common(freeness);
  freeness->add_option("--plant-torsion-x", plant_x, "negative control: plant torsion at this x-degree");
  freeness->add_option("--plant-torsion-y", plant_y, "negative control: plant torsion at this y-degree");
  auto* prop = app.add_subcommand("prop-ak", "restriction isomorphism checks for det^k-twisted functions");
  common(prop);
  prop->add_option("--tuples", cfg.tuples, "random word tuples for the wedge identity (default 100)");
  prop->add_option("--trials", cfg.trials, "points per wedge tuple");
  auto* variety = app.add_subcommand("variety", "stratum sampling, Jacobian rank, vanishing and equivariance");
  common(variety);
  variety->add_option("--tuples", cfg.tuples, "random word tuples per sample (default 50)");
  variety->add_option("--translates", cfg.translates, "random group elements per sample");
  std::optional<int> r_variety, r_sample;
  variety->add_option("--r", r_variety, "restrict to one stratum");
  auto* sample = app.add_subcommand("sample", "draw one verified point of stratum r");
  common(sample);
  sample->add_option("--r", r_sample, "stratum")->required();

  CommandResult res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitUsage;
    res.err = std::string("usage error: ") + e.what() + "\n";
    return res;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (chosen->get_help_ptr() && chosen->get_help_ptr()->count() > 0) {
      res.out = chosen->help();
      return res;
    }
    cfg.stratum = cfg.command == "sample" ? r_sample : r_variety;
    if (mode == "exact") {
      cfg.mode = Mode::Exact;
    } else if (mode == "prime") {
      cfg.mode = Mode::Prime;
      cfg.prime = kSupportedPrime;
    } else if (mode.rfind("prime:", 0) == 0) {
      cfg.mode = Mode::Prime;
      try {
        cfg.prime = static_cast<std::uint32_t>(std::stoul(mode.substr(6)));
      } catch (const std::exception&) {
        throw UsageError("bad --mode '" + mode + "'");
      }
    } else {
      throw UsageError("--mode must be exact, prime or prime:<p>");
    }
    if (output == "json")
      cfg.output = OutputFormat::Json;
    else if (output == "csv")
      cfg.output = OutputFormat::Csv;
    else
      throw UsageError("--output must be json or csv");
    if ((plant_x >= 0) != (plant_y >= 0)) throw UsageError("give both --plant-torsion-x and --plant-torsion-y");
    if (plant_x >= 0) cfg.plant = BiDegree{plant_x, plant_y};

    if (cfg.command == "hilbert") return cmd_hilbert(cfg, par);
    if (cfg.command == "freeness") return cmd_freeness(cfg, par);
    if (cfg.command == "prop-ak") return cmd_prop_ak(cfg, par);
    if (cfg.command == "variety") return cmd_variety(cfg, par);
    return cmd_sample(cfg, par);
  } catch (const UsageError& e) {
    res = {};
    res.exit_code = kExitUsage;
    res.err = std::string("usage error: ") + e.what() + "\n";
    return res;
  }
}

}  // namespace altlab
