#include <locnorm/cli.hpp>

#include <locnorm/bounds.hpp>
#include <locnorm/eps_conductor.hpp>
#include <locnorm/lfactors.hpp>
#include <locnorm/local_reps.hpp>
#include <locnorm/normalization.hpp>
#include <locnorm/scenario.hpp>
#include <locnorm/suites.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <ostream>
#include <sstream>

namespace locnorm {

double RunConfig::tolerance(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end()) throw std::invalid_argument("no tolerance named \"" + key + "\"");
  return it->second;
}

void apply_config(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw InputError("config: expected an object");
  try {
    if (j.contains("q")) cfg.q = j.at("q").get<int>();
    if (j.contains("c_psi")) cfg.c_psi = j.at("c_psi").get<int>();
    if (j.contains("root_number")) cfg.root_number = complex_from_json(j.at("root_number"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("format")) {
      auto f = j.at("format").get<std::string>();
      if (f == "json") cfg.format = RunConfig::Format::json;
      else if (f == "pretty") cfg.format = RunConfig::Format::pretty;
      else throw InputError("config: unknown format \"" + f + "\"");
    }
    if (j.contains("tolerances"))
      for (const auto& [k, v] : j.at("tolerances").items()) cfg.tolerances[k] = v.get<double>();
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  for (const auto& [k, v] : cfg.tolerances)
    if (!(v > 0.0)) throw InputError("config: tolerance \"" + k + "\" must be positive");
  if (cfg.samples <= 0) throw InputError("config: samples must be positive");
  if (cfg.q < 2) throw InputError("config: q must be at least 2");
}

namespace {

class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

  RunConfig& config() { return cfg_; }

  json load(const std::string& path) const {
    if (path == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      return parse_json_text(text, "<stdin>");
    }
    return read_json_file(path);
  }

  // Applies --c-psi to nonarchimedean fields.
  LocalField adjust(LocalField f) const {
    if (!f.archimedean() && c_psi_set) f.psi_conductor = cfg_.c_psi;
    return f;
  }
  InducedDatum adjust(InducedDatum d) const {
    d.field = adjust(d.field);
    return d;
  }
  LeviDatum adjust(LeviDatum d) const {
    d.field = adjust(d.field);
    for (auto& c : d.components) c.field = adjust(c.field);
    return d;
  }

  ConductorModel model() const {
    ConductorModel m;
    m.root_number = cfg_.root_number;
    return m;
  }

  // {"left": a, "right": b}, or a single datum standing for pi x pi~.
  std::pair<InducedDatum, InducedDatum> pair_input(const json& j) const {
    if (j.is_object() && j.contains("left")) {
      if (!j.contains("right")) throw InputError("pair input: \"left\" given without \"right\"");
      return {adjust(datum_from_json(j.at("left"))), adjust(datum_from_json(j.at("right")))};
    }
    auto d = adjust(datum_from_json(j.is_object() && j.contains("datum") ? j.at("datum") : j));
    return {d, contragredient(d)};
  }

  LeviDatum levi_input(const json& j) const {
    if (j.is_object() && j.contains("components")) return adjust(levi_from_json(j));
    return adjust(as_levi(datum_from_json(j)));
  }

  std::pair<ParabolicChart, ParabolicChart> charts(const json& j, const LeviDatum& pi) const {
    std::vector<int> parts;
    for (const auto& c : pi.components) parts.push_back(degree(c));
    Composition levi(parts);
    ParabolicChart from = j.contains("from") ? chart_from_json(j.at("from")) : ParabolicChart::standard(levi);
    ParabolicChart to = j.contains("to") ? chart_from_json(j.at("to")) : ParabolicChart::opposite(levi);
    return {from, to};
  }

  void emit(const json& j, const std::function<void(std::ostream&)>& pretty) const {
    if (cfg_.format == RunConfig::Format::pretty && pretty) pretty(out_);
    else out_ << j.dump(2) << "\n";
  }

  bool c_psi_set = false;

 private:
  RunConfig cfg_;
  std::ostream& out_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::fabs(z.imag())) + "i";
}

cplx parse_complex_flag(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  double re = 0.0, im = 0.0;
  if (!(is >> re)) throw InputError("cannot parse complex value \"" + s + "\"");
  is >> im;
  return {re, im};
}

std::vector<cplx> complex_list(const json& j) {
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

int cmd_lfactor(Runner& r, const std::string& input) {
  auto [a, b] = r.pair_input(r.load(input));
  auto l = l_induced_pair(a, b);
  json j;
  j["descriptor"] = to_json(l);
  j["poles"] = to_json(pole_set(l));
  auto rp = rightmost_real_pole(l);
  j["rightmost_real_pole"] = rp ? to_json(*rp) : json(nullptr);
  r.emit(j, [&](std::ostream& os) { os << l.pretty() << "\n"; });
  return kExitOk;
}

int cmd_eps(Runner& r, const std::string& input, std::optional<cplx> at) {
  auto [a, b] = r.pair_input(r.load(input));
  auto terms = pair_epsilon(a, b, r.model());
  json j;
  json t = json::array();
  for (const auto& e : terms)
    t.push_back({{"shift", to_json(e.shift)},
                 {"conductor", e.factor.conductor},
                 {"psi_term", e.factor.psi_term},
                 {"root_number", to_json(e.factor.root_number)}});
  j["terms"] = t;
  int pair_conductor = 0;
  for (const auto& e : terms) pair_conductor += e.factor.conductor;
  j["conductor"] = pair_conductor;
  j["total_conductor"] = total_conductor(terms);
  if (!a.field.archimedean()) {
    auto iv = conductor_bound_interval(degree(a), datum_conductor(a), degree(b), datum_conductor(b));
    j["conductor_interval"] = {{"lo", iv.lo}, {"hi", iv.hi}, {"zero_permissible", iv.zero_permissible}};
  }
  cplx s = at.value_or(cplx(0.5, 0.0));
  j["s"] = to_json(s);
  j["value"] = to_json(evaluate_epsilon(terms, s));
  r.emit(j, [&](std::ostream& os) {
    os << "conductor " << total_conductor(terms) << "\n";
    os << "eps(" << fmt(s) << ") = " << fmt(evaluate_epsilon(terms, s)) << "\n";
  });
  return kExitOk;
}

int cmd_normfactor(Runner& r, const std::string& input) {
  auto j = r.load(input);
  auto pi = r.levi_input(j.is_object() && j.contains("datum") ? j.at("datum") : j);
  auto [from, to] = r.charts(j, pi);
  auto nf = normalizing_factor(from, to, pi, r.model());
  auto mono = epsilon_centering_ratio(nf);
  json out;
  out["from"] = to_json(from);
  out["to"] = to_json(to);
  json fs = json::array();
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    const auto& f = nf.factors[k];
    fs.push_back({{"pair", to_string(f.pair)},
                  {"l", to_json(f.l)},
                  {"conductor", f.conductor()},
                  {"poles", to_json(pole_set(f.l))}});
  }
  out["factors"] = fs;
  json ex = json::array();
  for (const auto& [p, e] : mono.exponents) ex.push_back({{"pair", to_string(p)}, {"exponent", e}});
  out["epsilon_monomial"] = {{"q", mono.q}, {"exponents", ex}, {"constant", mono.constant()}};
  std::vector<cplx> s;
  if (j.is_object() && j.contains("s")) {
    s = complex_list(j.at("s"));
    if (static_cast<int>(s.size()) != nf.rank) throw InputError("\"s\" must have one entry per Levi factor");
    out["s"] = j.at("s");
    out["value"] = to_json(nf.evaluate(s));
    out["centred_value"] = to_json(nf.evaluate_centered(s));
  }
  r.emit(out, [&](std::ostream& os) {
    for (const auto& f : nf.factors)
      os << to_string(f.pair) << "  L = " << f.l.pretty() << "  f = " << f.conductor() << "\n";
    if (!s.empty()) os << "r(s) = " << fmt(nf.evaluate(s)) << "\n";
  });
  return kExitOk;
}

int cmd_plancherel(Runner& r, const std::string& input) {
  auto j = r.load(input);
  auto [a, b] = r.pair_input(j);
  std::vector<double> u;
  if (j.is_object() && j.contains("samples")) {
    u = j.at("samples").get<std::vector<double>>();
  } else {
    if (a.field.archimedean()) throw InputError("plancherel needs a nonarchimedean pair");
    const double period = 2.0 * std::numbers::pi / std::log(static_cast<double>(a.field.q));
    for (const auto& s : random_samples(1, r.config().samples, r.config().seed, 0.0, period)) u.push_back(s[0].imag());
  }
  auto rep = plancherel_check(a, b, u, r.config().tolerance("plancherel"), r.model());
  r.emit(to_json(rep), [&](std::ostream& os) {
    os << rep.property << ": " << (rep.passed ? "pass" : "fail") << " max_error " << fmt(rep.max_error) << "\n";
  });
  return rep.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_stages(Runner& r, const std::string& input) {
  auto j = r.load(input);
  auto pi = r.levi_input(j.is_object() && j.contains("datum") ? j.at("datum") : j);
  auto [from, to] = r.charts(j, pi);
  std::vector<std::vector<cplx>> samples;
  if (j.is_object() && j.contains("samples")) {
    for (const auto& s : j.at("samples")) samples.push_back(complex_list(s));
  } else {
    samples = random_samples(from.rank(), r.config().samples, r.config().seed);
  }
  auto rep = induction_stages_check(pi, from, to, samples, r.config().tolerance("stages"), r.model());
  r.emit(to_json(rep), [&](std::ostream& os) {
    os << rep.property << ": " << (rep.passed ? "pass" : "fail") << " max_error " << fmt(rep.max_error) << "\n";
  });
  return rep.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_holomorphy(Runner& r, const std::string& input, int n) {
  auto j = r.load(input);
  LeviDatum pi = j.is_object() && j.contains("components") ? r.adjust(levi_from_json(j))
                                                          : LeviDatum{{}, {r.adjust(datum_from_json(j))}};
  if (pi.components.size() == 1) pi.field = pi.components.front().field;
  auto v = holomorphy_region(pi, n);
  r.emit(to_json(v), [&](std::ostream& os) {
    os << (v.certified ? "certified" : "not certified") << ": margin " << v.guaranteed_margin.str() << " vs required "
       << v.required_margin.str() << "\n";
  });
  return kExitOk;
}

struct BoundFlags {
  std::string kind;
  std::string input;
  bool verify = false;
  int q = 0;
  int n = 0;
  double eps = 0.0;
  int grid_angular = 2048;
  int grid_radial = 64;
  double im_extent = 0.0;
};

int cmd_bound(Runner& r, const BoundFlags& b) {
  auto j = r.load(b.input);
  auto get_int = [&](const char* key, int flag) {
    if (flag > 0) return flag;
    if (!j.contains(key)) throw InputError(std::string("bound: missing \"") + key + "\"");
    return j.at(key).get<int>();
  };
  json out;
  bool ok = true;
  std::string summary;
  if (b.kind == "annulus") {
    auto f = disc_descriptor_from_json(j.contains("function") ? j.at("function") : j);
    int q = get_int("q", b.q), n = get_int("n", b.n);
    auto cert = annulus_certificate(f, q, n);
    if (b.verify) {
      auto res = sampling_oracle([&](cplx z) { return f.evaluate(z); }, annulus_region(cert, b.grid_angular, b.grid_radial));
      cert.measured_sup = res.sup;
      ok = !res.flagged && res.sup <= cert.bound;
      out["samples_skipped"] = res.skipped;
    }
    out["certificate"] = to_json(cert);
    summary = "annulus " + fmt(cert.inner) + " < |z| < " + fmt(cert.outer) + ": bound " + fmt(cert.bound);
    if (cert.measured_sup) summary += ", sampled sup " + fmt(*cert.measured_sup);
  } else if (b.kind == "strip") {
    auto d = strip_descriptor_from_json(j);
    double eps = b.eps > 0.0 ? b.eps : (j.contains("eps") ? j.at("eps").get<double>() : d.delta / 2.0);
    auto cert = strip_certificate(d, eps);
    if (b.verify) {
      if (!d.f) throw InputError("bound strip --verify needs a \"function\" to sample");
      double extent = b.im_extent;
      if (extent <= 0.0) {
        extent = 10.0;
        for (const auto& p : d.f->poles) extent = std::max(extent, std::fabs(p.value.imag()) + 10.0);
      }
      auto res = sampling_oracle([&](cplx s) { return d.f->evaluate(s); }, strip_region(cert, extent, b.grid_angular, b.grid_radial));
      cert.measured_sup = res.sup;
      ok = !res.flagged && res.sup <= cert.bound;
      out["samples_skipped"] = res.skipped;
    }
    out["certificate"] = to_json(cert);
    summary = "strip |Re s| < " + fmt(cert.outer) + ": bound " + fmt(cert.bound);
    if (cert.measured_sup) summary += ", sampled sup " + fmt(*cert.measured_sup);
  } else if (b.kind == "uniform") {
    if (b.verify) throw InputError("bound uniform takes pole data only; there is no function to sample");
    auto in = uniform_input_from_json(j);
    auto c = uniform_norm_certificate_nonarch(in);
    out["annulus"] = to_json(c.annulus);
    out["strip"] = to_json(c.strip);
    out["derivative"] = to_json(c.derivative);
    summary = "annulus bound " + fmt(c.annulus.bound) + ", strip bound " + fmt(c.strip.bound) + ", order " +
              std::to_string(in.alpha) + " derivative bound " + fmt(c.derivative.bound);
  } else {
    throw InputError("bound: unknown region \"" + b.kind + "\" (annulus, strip, uniform)");
  }
  if (b.verify) out["status"] = ok ? "pass" : "fail";
  r.emit(out, [&](std::ostream& os) { os << summary << (b.verify ? (ok ? "  [pass]" : "  [FAIL]") : "") << "\n"; });
  return ok ? kExitOk : kExitVerificationFailed;
}

struct GenFlags {
  int n = 2;
  std::string field = "nonarch";
  std::string flavor = "discrete_local";
  int count = 1;
  std::optional<bool> common_k;
};

int cmd_gen(Runner& r, const GenFlags& g) {
  LocalField field;
  if (g.field == "real") field = LocalField::real();
  else if (g.field == "complex") field = LocalField::complex();
  else if (g.field == "nonarch") field = LocalField::nonarch(r.config().q, r.config().c_psi);
  else throw InputError("gen-disc: unknown field \"" + g.field + "\"");
  if (g.n < 1) throw InputError("gen-disc: n must be positive");
  if (g.count < 1) throw InputError("gen-disc: count must be positive");
  GeneratorOptions opts;
  opts.common_k = g.common_k;
  json items = json::array();
  for (int i = 0; i < g.count; ++i) {
    std::uint64_t seed = r.config().seed + static_cast<std::uint64_t>(i);
    if (g.flavor == "discrete_local") items.push_back(to_json(random_discrete_datum(g.n, field, seed, opts)));
    else if (g.flavor == "generic") items.push_back(to_json(random_generic_datum(g.n, field, seed, opts)));
    else if (g.flavor == "tempered") items.push_back(to_json(random_tempered_datum(g.n, field, seed, opts)));
    else if (g.flavor == "levi") items.push_back(to_json(random_levi_datum(g.n, field, seed, opts)));
    else throw InputError("gen-disc: unknown flavor \"" + g.flavor + "\"");
  }
  // Data are always emitted as JSON so they can be fed back in.
  r.config().format = RunConfig::Format::json;
  r.emit(g.count == 1 ? items.front() : items, {});
  return kExitOk;
}

int cmd_verify(Runner& r, const std::string& suite, const SuiteOptions& opts) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (is_suite(suite)) names = {suite};
  else {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw InputError("verify: unknown suite \"" + suite + "\"; known suites:" + known + " all");
  }
  json reports = json::array();
  bool ok = true;
  std::vector<SuiteResult> results;
  for (const auto& n : names) {
    results.push_back(run_suite(n, opts));
    ok = ok && results.back().passed;
    reports.push_back(to_json(results.back()));
  }
  json out = names.size() == 1 ? reports.front() : json{{"status", ok ? "pass" : "fail"}, {"suites", reports}};
  r.emit(out, [&](std::ostream& os) {
    for (const auto& s : results) {
      os << (s.passed ? "pass " : "FAIL ") << s.name << "  cases " << s.cases << "  failures " << s.failures
         << "  max_error " << fmt(s.max_error) << "  " << fmt(s.elapsed_seconds) << "s\n";
      for (const auto& w : s.witnesses) os << "    " << w << "\n";
    }
  });
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_scenario(Runner& r, const std::string& name, double mu) {
  if (name != "gl4-principal-series") throw InputError("scenario: unknown scenario \"" + name + "\"");
  auto sc = gl4_principal_series(mu);
  auto rank_one = rank_one_normalizer(sc.sigma, sc.sigma, r.model());
  json j;
  j["scenario"] = name;
  j["mu"] = mu;
  j["sigma"] = to_json(sc.sigma);
  j["l_factor"] = to_json(sc.l);
  j["l_poles"] = to_json(pole_set(sc.l));
  j["rightmost_pole"] = to_json(sc.rightmost_pole);
  j["normalizing_factor"] = {{"numerator", sc.l.pretty()},
                             {"denominator", sc.l.shifted(ExactReal(1)).pretty()},
                             {"numerator_poles", to_json(pole_set(rank_one.l))},
                             {"denominator_poles", to_json(pole_set(rank_one.l.shifted(ExactReal(1))))}};
  j["pole_threshold"] = to_json(sc.pole_threshold);
  j["holomorphy_guarantee"] = to_json(sc.holomorphy_guarantee);
  j["near_axis"] = sc.near_axis;
  j["notes"] = sc.notes;
  r.emit(j, [&](std::ostream& os) {
    os << "L(s, sigma x sigma~) = " << sc.l.pretty() << "\n";
    os << "rightmost pole " << sc.rightmost_pole.str() << "\n";
    os << "pole threshold |s| = " << sc.pole_threshold.str() << (sc.near_axis ? "  [near-axis]" : "") << "\n";
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalizing factors of intertwining operators for GL(n): L-factors, epsilon factors and bounds",
               "locnorm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format, root_number;
  int c_psi = 0, q = 0;
  std::uint64_t seed = 0;
  auto* o_config = app.add_option("--config", config_path, "JSON config file (default: $" + std::string(kConfigEnv) + ")");
  auto* o_cpsi = app.add_option("--c-psi", c_psi, "conductor exponent of the additive character");
  auto* o_root = app.add_option("--root-number", root_number, "root number W as re[,im]");
  auto* o_seed = app.add_option("--seed", seed, "seed for every random choice");
  auto* o_q = app.add_option("--q", q, "residue field size for generated data");
  auto* o_format = app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "pretty"}));

  std::string input;
  auto* lf = app.add_subcommand("lfactor", "Rankin-Selberg L-factor of a pair");
  lf->add_option("input", input, "pair or datum JSON ('-' for stdin)")->required();

  std::string eps_at;
  auto* ep = app.add_subcommand("eps", "epsilon factor and conductor of a pair");
  ep->add_option("input", input, "pair or datum JSON")->required();
  auto* o_at = ep->add_option("--at", eps_at, "evaluation point re[,im]");

  auto* nfc = app.add_subcommand("normfactor", "normalizing factor between two parabolic charts");
  nfc->add_option("input", input, "{datum, from, to, s}")->required();

  auto* pl = app.add_subcommand("plancherel", "Plancherel identity on the unitary axis");
  pl->add_option("input", input, "tempered nonarchimedean pair")->required();

  auto* st = app.add_subcommand("stages", "induction in stages check");
  st->add_option("input", input, "{datum, from, to, samples}")->required();

  int hol_n = 0;
  auto* ho = app.add_subcommand("holomorphy", "certified holomorphy margin");
  ho->add_option("input", input, "datum or Levi datum")->required();
  ho->add_option("--n", hol_n, "ambient GL(n), default the datum degree");

  BoundFlags bf;
  auto* bo = app.add_subcommand("bound", "bound certificates");
  bo->add_option("region", bf.kind, "annulus | strip | uniform")->required();
  bo->add_option("input", bf.input, "descriptor JSON")->required();
  bo->add_flag("--verify", bf.verify, "sample the function and compare with the certificate");
  bo->add_option("--n", bf.n, "GL(n) for the annulus constant");
  bo->add_option("--eps", bf.eps, "strip margin");
  bo->add_option("--grid-angular", bf.grid_angular, "angular / imaginary grid size");
  bo->add_option("--grid-radial", bf.grid_radial, "radial / real grid size");
  bo->add_option("--im-extent", bf.im_extent, "strip sampling range in Im s");

  GenFlags gf;
  bool common_k = false, mixed_k = false;
  auto* ge = app.add_subcommand("gen-disc", "seeded random local data");
  ge->add_option("--n", gf.n, "degree");
  ge->add_option("--field", gf.field, "real | complex | nonarch");
  ge->add_option("--flavor", gf.flavor, "discrete_local | generic | tempered | levi");
  ge->add_option("--count", gf.count, "number of data");
  ge->add_flag("--common-k", common_k, "Speh blocks share one k");
  ge->add_flag("--mixed-k", mixed_k, "Speh blocks may have different k");

  std::string suite;
  SuiteOptions so;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "suite name or 'all'")->required();
  ve->add_option("--n", so.max_n, "largest degree");
  ve->add_option("--count", so.count, "number of data");
  ve->add_option("--samples", so.samples, "samples per datum");

  std::string scenario;
  double mu = 0.0;
  auto* sc = app.add_subcommand("scenario", "worked scenarios");
  sc->add_option("name", scenario, "gl4-principal-series")->required();
  sc->add_option("--mu", mu, "exponent mu in [0, 1/2)")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    RunConfig cfg;
    std::string path = config_path;
    if (!o_config->count()) {
      if (const char* env = std::getenv(kConfigEnv)) path = env;
    }
    bool config_sets_cpsi = false;
    if (!path.empty()) {
      auto cj = read_json_file(path);
      apply_config(cfg, cj);
      config_sets_cpsi = cj.contains("c_psi");
    }
    if (o_cpsi->count()) cfg.c_psi = c_psi;
    if (o_root->count()) cfg.root_number = parse_complex_flag(root_number);
    if (o_seed->count()) cfg.seed = seed;
    if (o_q->count()) {
      if (q < 2) throw InputError("--q must be at least 2");
      cfg.q = q;
    }
    if (o_format->count()) cfg.format = format == "pretty" ? RunConfig::Format::pretty : RunConfig::Format::json;
    if (std::abs(std::abs(cfg.root_number) - 1.0) > 1e-12) throw InputError("root number must have modulus 1");

    Runner r(cfg, out);
    r.c_psi_set = o_cpsi->count() > 0 || config_sets_cpsi;

    if (*lf) return cmd_lfactor(r, input);
    if (*ep) return cmd_eps(r, input, o_at->count() ? std::optional<cplx>(parse_complex_flag(eps_at)) : std::nullopt);
    if (*nfc) return cmd_normfactor(r, input);
    if (*pl) return cmd_plancherel(r, input);
    if (*st) return cmd_stages(r, input);
    if (*ho) return cmd_holomorphy(r, input, hol_n);
    if (*bo) {
      bf.q = o_q->count() ? q : 0;
      return cmd_bound(r, bf);
    }
    if (*ge) {
      if (common_k && mixed_k) throw InputError("--common-k and --mixed-k are exclusive");
      if (common_k) gf.common_k = true;
      if (mixed_k) gf.common_k = false;
      return cmd_gen(r, gf);
    }
    if (*ve) {
      so.seed = r.config().seed;
      return cmd_verify(r, suite, so);
    }
    if (*sc) return cmd_scenario(r, scenario, mu);
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no subcommand\n";
  return kExitInputError;
}

}  // namespace locnorm
