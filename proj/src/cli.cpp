#include "greenbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenbound/errors.hpp"
#include "greenbound/f_bound.hpp"
#include "greenbound/point_counting.hpp"
#include "greenbound/report_io.hpp"
#include "greenbound/selftest.hpp"
#include "greenbound/shc_transform.hpp"

namespace greenbound::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (level < 1) throw DomainError("--level must be >= 1");
  if (!(grid_step > 0.0 && grid_step <= 0.05)) throw DomainError("--grid must lie in (0, 0.05]");
  if (!(quad_tol > 0.0) || !(series_tol > 0.0)) throw DomainError("tolerances must be positive");
  if (!(threshold > 1.0)) throw DomainError("--b must exceed 1");
  if (!(a > 1.0)) throw DomainError("--a must exceed 1");
  if (verify_samples < 0) throw DomainError("--verify must be >= 0");
}

namespace {

void print_interval(std::ostream& out, const char* name, const Interval& iv) {
  out << "  " << std::left << std::setw(10) << name << " [" << iv.lo << ", " << iv.hi << "]  ("
      << display_down(iv.lo) << " .. " << display_up(iv.hi) << ")\n";
}

int run_bound(const RunConfig& cfg, std::ostream& out) {
  PipelineOptions opt;
  opt.mode = cfg.constants;
  opt.grid_step = cfg.grid_step;
  opt.threads = cfg.threads;
  opt.use_genus = cfg.use_genus;
  opt.A = cfg.A;
  opt.B = cfg.B;
  const PipelineResult r = example_pipeline(GroupSpec::make(cfg.family, cfg.level), opt);
  if (cfg.format == OutputFormat::json) {
    out << pipeline_document(r).dump(2) << "\n";
    return kOk;
  }
  out << std::setprecision(8);
  out << r.spec.name() << ": genus " << r.genus << ", index " << index_in_sl2z(r.spec)
      << ", volume " << r.volume << ", constants " << to_string(r.mode) << "\n";
  out << "  N(z,17) <= " << r.sup_N17 << ", N(z," << r.small_threshold
      << ") <= " << r.sup_N_small << "\n";
  out << "  C = " << r.params.C << " (raw " << r.C_raw << ")\n";
  out << "  sup_Y F <= " << r.params.sup_F_Y << " (raw " << r.sup_F_Y_raw << "), sup_X F <= "
      << r.params.sup_F_X << ", zeta <= " << r.params.zeta << "\n";
  out << "  S = " << r.report.S << ", r_delta = " << r.report.r_delta << "\n";
  for (const CuspReport& c : r.report.cusps) {
    out << "  cusp " << c.label << " (width " << c.width << "): T(eps)=" << c.T_eps
        << " T(eps')=" << c.T_eps_prime << " A~=" << c.tilde_A << " B~=" << c.tilde_B << "\n";
  }
  print_interval(out, "(a)", r.report.regime_a);
  print_interval(out, "(b)", r.report.regime_b);
  print_interval(out, "(c)", r.report.regime_c);
  print_interval(out, "(d)", r.report.regime_d);
  out << "  sup gr^can <= " << r.report.sup_bound << "\n";
  out << "  uniform bound: " << r.polynomial.c0 << " + " << r.polynomial.c1 << " n + "
      << r.polynomial.c2 << " n^2\n";
  return kOk;
}

int run_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CountCertificate cert = sup_count_Y0(cfg.threshold, cfg.grid_step, cfg.threads);
  // Spot-check the enumeration against the exhaustive oracle at random points of Y0.
  std::mt19937_64 rng(12345);
  const StripY0 strip = StripY0::standard();
  std::uniform_real_distribution<double> ux(strip.x_min, strip.x_max);
  std::uniform_real_distribution<double> uy(strip.y_min, std::min(strip.y_max, 2.0));
  for (int i = 0; i < cfg.verify_samples; ++i) {
    const UhpPoint z{ux(rng), uy(rng)};
    const int M = static_cast<int>(std::ceil(bruteforce_entry_bound(z, z, cfg.threshold)));
    const auto fast = count_orbit(GroupSpec::full(), z, cfg.threshold);
    const auto slow = count_orbit_bruteforce(GroupSpec::full(), z, cfg.threshold, M);
    if (fast != slow) {
      err << "oracle mismatch at (" << z.x << ", " << z.y << "): " << fast << " vs " << slow
          << "\n";
      return kCertificationFailed;
    }
  }
  if (cfg.format == OutputFormat::json) {
    json j = cert;
    j["schema"] = kJsonSchemaVersion;
    j["kind"] = "count";
    j["provenance"] = "computed";
    out << j.dump(2) << "\n";
  } else {
    out << "sup over Y0 of N(z, " << cfg.threshold << ") <= " << cert.certified_sup
        << "  (max sample " << cert.max_sample << ", " << cert.cells << " cells, h = "
        << cert.grid_step << ")\n";
  }
  return kOk;
}

int run_fsup(const RunConfig& cfg, std::ostream& out) {
  const double threshold = 2.0 * cfg.a * cfg.a - 1.0;
  std::int64_t N = cfg.count_bound;
  std::string provenance = "user";
  if (N <= 0) {
    if (cfg.constants == ConstantsMode::paper) {
      if (std::abs(cfg.a - 1.44) > 1e-12)
        throw DomainError("paper constants only cover a = 1.44; pass --N or --constants computed");
      N = kPaperSupNSmall;
      provenance = "paper";
    } else {
      N = sup_count_Y0(threshold, cfg.grid_step, cfg.threads).certified_sup;
      provenance = "computed";
    }
  }
  const FBoundResult f = f_bounds(cfg.a, N, cfg.level, eps_unit(2.0), cfg.genus);
  if (cfg.format == OutputFormat::json) {
    json j = f;
    j["schema"] = kJsonSchemaVersion;
    j["kind"] = "fsup";
    j["provenance"] = provenance;
    j["level"] = cfg.level;
    j["genus"] = cfg.genus;
    j["display"] = {{"sup_Y", display_up(f.sup_Y)},
                    {"sup_X", display_up(f.sup_X)},
                    {"zeta", display_up(f.zeta)}};
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(8) << "a = " << f.a << ", N(z, " << threshold << ") <= " << N
        << " (" << provenance << ")\n  sup_Y F <= " << f.sup_Y << "\n  sup_X F <= " << f.sup_X
        << " (level " << cfg.level << ")\n  zeta <= " << f.zeta << " (genus " << cfg.genus
        << ")\n";
  }
  return kOk;
}

int run_shc(const RunConfig& cfg, std::ostream& out) {
  const double h = shc_transform(RadialKernel::indicator(cfg.a), cfg.s, cfg.k, cfg.quad_tol);
  const double P = legendre_P(cfg.s, cfg.k, cfg.a, cfg.series_tol);
  const bool closed = cfg.s == 0.0 && cfg.k == 2.0;
  if (cfg.format == OutputFormat::json) {
    json j = {{"schema", kJsonSchemaVersion}, {"kind", "shc"},   {"provenance", "computed"},
              {"a", cfg.a},                   {"s", cfg.s},      {"k", cfg.k},
              {"transform", h},               {"P_at_a", P}};
    if (closed) j["closed_form"] = shc_weight2_indicator(cfg.a);
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(12) << "h_theta(" << cfg.s << ") weight " << cfg.k
        << " for theta = 1_[1," << cfg.a << "]: " << h << "\n  P_{s,k}(" << cfg.a << ") = " << P
        << "\n";
    if (closed) out << "  closed form 4 pi log((a+1)/2) = " << shc_weight2_indicator(cfg.a) << "\n";
  }
  return kOk;
}

// Replaces "--config FILE" by one "--key=value" argument per non-comment line of FILE.
std::vector<std::string> expand_config(int argc, const char* const* argv) {
  std::vector<std::string> out;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    std::string path;
    if (a == "--config" && i + 1 < argc) {
      path = argv[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      out.push_back(std::move(a));
      continue;
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw DomainError("config line without '=': " + line);
      auto trim = [](std::string v) {
        const auto b = v.find_first_not_of(" \t\r");
        const auto e = v.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
      };
      out.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
  }
  return out;
}

int run_selftest(const RunConfig& cfg, std::ostream& out) {
  const auto checks = greenbound::run_selftest();
  bool ok = true;
  json arr = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    if (cfg.format == OutputFormat::json) {
      arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    } else {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
  }
  if (cfg.format == OutputFormat::json) {
    out << json{{"schema", kJsonSchemaVersion}, {"kind", "selftest"}, {"pass", ok},
                {"checks", arr}}
               .dump(2)
        << "\n";
  }
  return ok ? kOk : kSelftestFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    switch (cfg.command) {
      case Command::bound: return run_bound(cfg, out);
      case Command::count: return run_count(cfg, out, err);
      case Command::fsup: return run_fsup(cfg, out);
      case Command::shc: return run_shc(cfg, out);
      case Command::selftest: return run_selftest(cfg, out);
    }
  } catch (const GenusZero& e) {
    err << "error: " << e.what() << "\n";
    return kGenusZero;
  } catch (const CertificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCertificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  RunConfig cfg;
  std::string config_path;
  CLI::App app{"Explicit bounds on canonical Green functions of modular curves", "greenbound"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string family = "gamma0";
  std::string constants = "paper";
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto add_group_options = [&](CLI::App* sub) {
    sub->add_option("--family", family, "full, gamma0, gamma1 or principal")
        ->check(CLI::IsMember({"full", "gamma0", "gamma1", "principal"}))
        ->capture_default_str();
    sub->add_option("--level", cfg.level, "level n")->capture_default_str();
  };
  auto add_constants = [&](CLI::App* sub) {
    sub->add_option("--constants", constants, "paper or computed")
        ->check(CLI::IsMember({"paper", "computed"}))
        ->capture_default_str();
    sub->add_option("--grid", cfg.grid_step, "grid step for certified counts")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--config", config_path, "key=value file with option names as keys");
  };

  CLI::App* bound = app.add_subcommand("bound", "full bound report for a congruence subgroup");
  add_group_options(bound);
  add_constants(bound);
  add_format(bound);
  bound->add_flag("--use-genus", cfg.use_genus, "divide zeta and T by the actual genus");
  bound->add_option("--A", cfg.A, "lower constant for the hyperbolic Green function")
      ->capture_default_str();
  bound->add_option("--B", cfg.B, "upper constant for the hyperbolic Green function")
      ->capture_default_str();

  CLI::App* count = app.add_subcommand("count", "certified sup of N_SL2(Z)(z, b) over Y0");
  count->add_option("--b", cfg.threshold, "threshold b")->capture_default_str();
  count->add_option("--grid", cfg.grid_step, "grid step")->capture_default_str();
  count->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  count->add_option("--verify", cfg.verify_samples, "oracle spot checks")->capture_default_str();
  add_format(count);

  CLI::App* fsup = app.add_subcommand("fsup", "sup-norm bounds on F_Gamma");
  fsup->add_option("--a", cfg.a, "disc parameter a")->capture_default_str();
  fsup->add_option("--N", cfg.count_bound, "bound on N(z, 2a^2-1); default from --constants");
  fsup->add_option("--level", cfg.level, "level n")->capture_default_str();
  fsup->add_option("--genus", cfg.genus, "genus used for zeta")->capture_default_str();
  add_constants(fsup);
  add_format(fsup);
  cfg.level = 1;

  CLI::App* shc = app.add_subcommand("shc", "Selberg-Harish-Chandra transform of 1_[1,a]");
  shc->add_option("--a", cfg.a, "cut-off a")->capture_default_str();
  shc->add_option("--s", cfg.s, "spectral parameter s")->capture_default_str();
  shc->add_option("--k", cfg.k, "weight k")->capture_default_str();
  shc->add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")->capture_default_str();
  shc->add_option("--series-tol", cfg.series_tol, "series tolerance")->capture_default_str();
  add_format(shc);

  CLI::App* selftest = app.add_subcommand("selftest", "golden checks of the worked example");
  add_format(selftest);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (bound->parsed()) {
    cfg.command = Command::bound;
    if (bound->count("--level") == 0) cfg.level = 11;
  } else if (count->parsed()) {
    cfg.command = Command::count;
  } else if (fsup->parsed()) {
    cfg.command = Command::fsup;
  } else if (shc->parsed()) {
    cfg.command = Command::shc;
  } else {
    cfg.command = Command::selftest;
  }
  try {
    cfg.family = parse_family(family);
    cfg.constants = parse_constants_mode(constants);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  return run(cfg, out, err);
}

}  // namespace greenbound::cli
