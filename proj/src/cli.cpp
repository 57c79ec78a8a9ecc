#include "refeul/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "refeul/cache.hpp"
#include "refeul/engine.hpp"
#include "refeul/gamma.hpp"
#include "refeul/perm.hpp"
#include "refeul/verify.hpp"

#ifndef REFEUL_VERSION
#define REFEUL_VERSION "dev"
#endif

namespace refeul::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeArgs {
  std::size_t n = 0;
  std::string method = "fast";
  std::string format = "text";
  std::string cache_path;
  bool no_cache = false;
  std::size_t brute_cap = kDefaultBruteCap;
  std::size_t fast_cap = kDefaultFastCap;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t n_max = 8;
  std::string format = "text";
};

struct GammaArgs {
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;
  bool scan = false;
  std::string format = "text";
  std::size_t fast_cap = kDefaultFastCap;
};

struct StatsArgs {
  std::string perm;
};

std::string set_string(const std::set<std::size_t>& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::optional<std::filesystem::path> resolve_cache_path(const ComputeArgs& a) {
  if (a.no_cache) return std::nullopt;
  if (!a.cache_path.empty()) return std::filesystem::path(a.cache_path);
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

void render_compute(std::size_t n, const BiPoly& a, const std::string& format, std::ostream& out) {
  const BiPoly t = a_tilde(n, a);
  const std::string ns = std::to_string(n);
  if (format == "json") {
    const json doc = {{"n", n}, {"A", to_json(a)}, {"A_tilde", to_json(t)}};
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "polynomial,p_exp,q_exp,coefficient\n";
    for (const auto& [name, f] : {std::pair<const char*, const BiPoly*>{"A", &a}, {"A_tilde", &t}}) {
      for (const auto& [k, c] : f->terms()) out << name << ',' << k.first << ',' << k.second << ',' << c.str() << '\n';
    }
  } else {
    out << "A_" << ns << "(p,q) = " << a.to_string() << '\n';
    out << coefficient_table(a);
    out << '\n';
    out << "Atilde_" << ns << "(p,q) = " << t.to_string() << '\n';
    out << coefficient_table(t);
  }
}

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.method != "fast" && a.method != "brute" && a.method != "both") throw UsageError("unknown method " + a.method);
  if (a.n == 0) throw UsageError("--n must be positive");
  if ((a.method != "fast" && a.n > a.brute_cap) || (a.method != "brute" && a.n > a.fast_cap)) {
    throw UsageError("n=" + std::to_string(a.n) + " exceeds the cap for method " + a.method +
                     " (brute <= " + std::to_string(a.brute_cap) + ", fast <= " + std::to_string(a.fast_cap) +
                     "; raise with --brute-cap/--fast-cap)");
  }

  std::unique_ptr<PolyCache> cache;
  if (auto path = resolve_cache_path(a)) {
    cache = std::make_unique<PolyCache>(*path, REFEUL_VERSION);
    if (!cache->load_warning().empty()) err << "warning: " << cache->load_warning() << '\n';
  }

  std::optional<BiPoly> result;
  std::string stored_method = a.method == "brute" ? "brute" : "fast";
  if (cache && a.method != "both") result = cache->lookup(a.n, a.method);
  const bool hit = result.has_value();

  if (!result) {
    if (a.method == "both") {
      BiPoly b = brute_force(a.n, {a.brute_cap, 0});
      BiPoly f = fast(a.n, a.fast_cap);
      if (b != f) {
        err << "MISMATCH between brute force and fast for n=" << a.n << '\n';
        const json witness = {{"n", a.n}, {"brute", to_json(b)}, {"fast", to_json(f)}};
        out << witness.dump() << '\n';
        return kCheckFailed;
      }
      result = std::move(f);
    } else if (a.method == "brute") {
      result = brute_force(a.n, {a.brute_cap, 0});
    } else {
      result = fast(a.n, a.fast_cap);
    }
  }

  render_compute(a.n, *result, a.format, out);

  if (cache && !hit) {
    cache->store(a.n, stored_method, *result);
    try {
      cache->save();
    } catch (const std::exception& e) {
      err << "warning: " << e.what() << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(suite, a.n_max);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump() << '\n';
  } else {
    for (const auto& r : reports) out << to_text(r) << '\n';
    out << (ok ? "all checks passed" : "CHECK FAILED") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

std::string c_vector_text(const GammaExpansion& e) {
  std::string s = "[";
  for (std::size_t j = 0; j < e.line_coeffs.size(); ++j) {
    if (j) s += ", ";
    s += e.line_coeffs[j].str();
  }
  return s + "]";
}

int cmd_gamma(const GammaArgs& a, std::ostream& out) {
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (a.scan) {
    if (!a.n_max) throw UsageError("--scan needs --n-max");
    lo = 1;
    hi = *a.n_max;
  } else {
    if (!a.n) throw UsageError("gamma needs --n (or --scan --n-max)");
    lo = hi = *a.n;
  }
  if (lo == 0 || hi == 0) throw UsageError("n must be positive");
  if (hi > a.fast_cap) throw UsageError("n=" + std::to_string(hi) + " exceeds fast cap " + std::to_string(a.fast_cap));

  bool ok = true;
  json arr = json::array();
  for (std::size_t n = lo; n <= hi; ++n) {
    const ConjectureResult r = conjecture_check(n);
    ok = ok && r.report.passed();
    if (a.format == "json") {
      json j = to_json(r.report);
      j["c"] = line_coeffs_json(r.expansion);
      arr.push_back(std::move(j));
    } else {
      out << "n=" << n << " c = " << c_vector_text(r.expansion) << (r.report.passed() ? " POSITIVE" : " FAILED")
          << '\n';
      if (!r.report.passed()) out << "  witness: " << r.report.witness()->dump() << '\n';
    }
  }
  if (a.format == "json") out << arr.dump() << '\n';
  return ok ? kOk : kCheckFailed;
}

void print_image(std::ostream& out, const char* label, const Permutation& p) {
  const auto d = parity_descents(p.letters());
  out << label << " = " << p.to_string() << "  odes=" << d.odd << " edes=" << d.even << '\n';
}

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  std::optional<Permutation> pi;
  try {
    pi = Permutation::parse(a.perm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad permutation: ") + e.what());
  }
  const DescentProfile prof = descent_profile(*pi);
  out << "perm = " << pi->to_string() << '\n';
  out << "odes=" << prof.odes() << " edes=" << prof.edes() << " oasc=" << prof.oasc() << " easc=" << prof.easc()
      << '\n';
  out << "Odes=" << set_string(prof.odes_set) << " Edes=" << set_string(prof.edes_set)
      << " Oasc=" << set_string(prof.oasc_set) << " Easc=" << set_string(prof.easc_set) << '\n';
  print_image(out, "r", reversal(*pi));
  print_image(out, "c", complement(*pi));
  print_image(out, "rc", reversal_complement(*pi));
  return kOk;
}

}  // namespace

std::string coefficient_table(const BiPoly& f) {
  const Exponent rows = f.max_p_degree() + 1;
  const Exponent cols = f.max_q_degree() + 1;
  std::size_t width = 1;
  for (const auto& [k, c] : f.terms()) width = std::max(width, c.str().size());
  std::ostringstream os;
  for (Exponent a = 0; a < rows; ++a) {
    for (Exponent b = 0; b < cols; ++b) {
      const std::string cell = f.coeff(a, b).str();
      if (b) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refined Eulerian polynomials by odd and even descents", "refeul"};
  app.require_subcommand(1);
  app.set_version_flag("--version", REFEUL_VERSION);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute A_n(p,q) and Atilde_n(p,q)");
  compute->add_option("--n", ca.n, "Permutation length")->required();
  compute->add_option("--method", ca.method, "brute | fast | both")->check(CLI::IsMember({"brute", "fast", "both"}));
  compute->add_option("--format", ca.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  compute->add_option("--cache", ca.cache_path, std::string("Cache file (default: $") + kCacheEnvVar + ")");
  compute->add_flag("--no-cache", ca.no_cache, "Neither read nor write the cache");
  compute->add_option("--brute-cap", ca.brute_cap, "Largest n for brute force")->capture_default_str();
  compute->add_option("--fast-cap", ca.fast_cap, "Largest n for the DP")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", va.suite, "palindromic | closed-form | psi | orbits | diagonal | all")
      ->capture_default_str();
  verify->add_option("--n-max", va.n_max, "Largest n checked")->capture_default_str();
  verify->add_option("--format", va.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Gamma-positivity of Atilde_n on the (p+q)^j (1+pq)^(k-j) line");
  gamma->add_option("--n", ga.n, "Single n");
  gamma->add_flag("--scan", ga.scan, "Sweep n = 1..n-max");
  gamma->add_option("--n-max", ga.n_max, "Upper end of the scan");
  gamma->add_option("--format", ga.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  gamma->add_option("--fast-cap", ga.fast_cap, "Largest n for the DP")->capture_default_str();

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Descent statistics of one permutation");
  stats->add_option("--perm", sa.perm, "One-line notation, e.g. 3,1,4,2")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(ca, out, err);
    if (*verify) return cmd_verify(va, out);
    if (*gamma) return cmd_gamma(ga, out);
    if (*stats) return cmd_stats(sa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace refeul::cli
