// Command-line front end: Groebner bases for the ideals I_{n,k} over GF(2),
// normal forms, polynomial identity checks, heights of the generator cosets,
// cup-lengths, and zero-divisor cup-lengths of the quotient algebras W_{n,k}.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gf2alg/cache.hpp"
#include "gf2alg/report.hpp"
#include "gf2alg/version.hpp"

using json = nlohmann::json;
using namespace gf2alg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string cache_dir;
  unsigned threads = 0;  // 0 = hardware default
  std::uint64_t seed = kDefaultSeed;
  bool json_output = false;
  bool verbose = false;
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::filesystem::path effective_cache_dir(const CommonOpts& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  if (const char* env = std::getenv("GF2ALG_CACHE_DIR")) return env;
  return {};
}

unsigned effective_threads(const CommonOpts& opts) {
  if (opts.threads) return opts.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// "14..17" or "14".
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw DomainError("empty range " + text);
  return {lo, hi};
}

GroebnerBasis basis_for(IdealSpec spec, const CommonOpts& opts) {
  if (has_known_gb(spec.n, spec.k)) return known_gb(spec.n, spec.k);
  return load_or_compute_basis(spec, MonomialOrder::family_order(VariableSet(spec.k)),
                               effective_cache_dir(opts));
}

int cmd_gb(IdealSpec spec, const CommonOpts& opts, bool verify_known) {
  Stopwatch watch;
  MonomialOrder ord = MonomialOrder::family_order(VariableSet(spec.k));
  GroebnerBasis basis = load_or_compute_basis(spec, ord, effective_cache_dir(opts));
  if (opts.verbose)
    std::cerr << "basis ready after " << watch.secs() << " s (" << basis.size()
              << " generators)\n";
  if (verify_known) {
    if (!has_known_gb(spec.n, spec.k)) {
      std::cerr << "no tabulated basis for n=" << spec.n << ", k=" << spec.k
                << "; nothing to verify against\n";
      return kExitCheckFailed;
    }
    const GroebnerBasis& known = known_gb(spec.n, spec.k);
    bool ok = basis.lm_set() == known.lm_set() && is_groebner(basis);
    for (const auto& g : known.generators()) ok = ok && contains(basis, g);
    for (const auto& g : basis.generators()) ok = ok && contains(known, g);
    if (!ok) {
      std::cerr << "computed basis disagrees with the tabulated one\n";
      return kExitCheckFailed;
    }
  }
  if (opts.json_output) {
    std::cout << serialize_basis(basis, spec);
  } else {
    std::cout << "reduced Groebner basis of I_{" << spec.n << "," << spec.k << "} under "
              << basis.order().to_string() << " (" << basis.size() << " generators)\n";
    for (const auto& g : basis.generators()) std::cout << "  " << format_polynomial(g) << "\n";
    if (verify_known) std::cout << "verified against the tabulated basis\n";
  }
  return kExitOk;
}

int cmd_nf(IdealSpec spec, const CommonOpts& opts, const std::string& poly_text) {
  GroebnerBasis basis = basis_for(spec, opts);
  PolynomialF2 p = parse_polynomial(poly_text, basis.vars(), basis.order());
  PolynomialF2 nf = normal_form(p, basis);
  if (opts.json_output) {
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["input"] = format_polynomial(p);
    j["normal_form"] = format_polynomial(nf);
    j["in_ideal"] = nf.is_zero();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_polynomial(nf) << "\n";
  }
  return kExitOk;
}

int cmd_identities(const CommonOpts& opts, int t_min, int t_max, const std::string& ids,
                   int samples) {
  std::vector<IdentityId> which;
  for (char c : ids) {
    auto id = identity_from_letter(c);
    if (!id) throw DomainError(std::string("unknown identity id '") + c + "'");
    which.push_back(*id);
  }
  unsigned threads = effective_threads(opts);
  std::vector<std::future<IdentityReport>> futures;
  std::vector<IdentityReport> reports(which.size(), IdentityReport{});
  for (std::size_t i = 0; i < which.size(); ++i) {
    auto run = [&, i] { return verify_identity(which[i], t_min, t_max, opts.seed, samples); };
    if (threads > 1)
      futures.push_back(std::async(std::launch::async, run));
    else
      reports[i] = run();
  }
  for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();

  bool all_pass = true;
  json out = json::array();
  for (const auto& rep : reports) {
    for (const auto& inst : rep.instances) {
      all_pass = all_pass && inst.pass;
      if (opts.json_output) {
        json j;
        j["id"] = std::string(1, identity_letter(rep.id));
        j["name"] = identity_name(rep.id);
        j["instance"] = inst.label;
        j["pass"] = inst.pass;
        j["millis"] = inst.millis;
        if (!inst.pass) j["counterexample"] = inst.counterexample;
        out.push_back(j);
      } else {
        std::cout << identity_letter(rep.id) << " (" << inst.label << "): "
                  << (inst.pass ? "PASS" : "FAIL") << "  [" << inst.millis << " ms]";
        if (!inst.pass) std::cout << "  " << inst.counterexample;
        std::cout << "\n";
      }
    }
  }
  if (opts.json_output) std::cout << out.dump(2) << "\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_height(IdealSpec spec, const CommonOpts& opts) {
  QuotientAlgebra alg = QuotientAlgebra::build(spec, basis_for(spec, opts));
  if (opts.json_output) {
    json heights;
    for (int v = kMinVariableIndex; v <= spec.k; ++v)
      heights["w" + std::to_string(v)] = alg.height(v);
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["heights"] = heights;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "heights in W_{" << spec.n << "," << spec.k << "}:";
    for (int v = kMinVariableIndex; v <= spec.k; ++v)
      std::cout << "  ht(w" << v << ")=" << alg.height(v);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_cl(IdealSpec spec, const CommonOpts& opts) {
  QuotientAlgebra alg = QuotientAlgebra::build(spec, basis_for(spec, opts));
  auto cl = alg.cup_length();
  if (opts.json_output) {
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["cl"] = cl.length;
    j["witness"] = format_monomial(cl.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cl(W_{" << spec.n << "," << spec.k << "}) = " << cl.length << "   witness "
              << format_monomial(cl.witness) << "\n";
  }
  return kExitOk;
}

int cmd_zcl(IdealSpec spec, const CommonOpts& opts, bool exact, const std::string& witness_text,
            std::size_t max_dim) {
  QuotientAlgebra alg = QuotientAlgebra::build(spec, basis_for(spec, opts));
  if (!witness_text.empty()) {
    std::vector<std::uint32_t> exps;
    std::stringstream ss(witness_text);
    std::string item;
    while (std::getline(ss, item, ','))
      exps.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    auto wit = witness_nonzero(alg, exps);
    if (opts.json_output) {
      json j;
      j["n"] = spec.n;
      j["k"] = spec.k;
      j["exponents"] = exps;
      j["nonzero"] = wit.nonzero;
      if (wit.nonzero)
        j["witness_term"] = {format_monomial(wit.sample->first),
                             format_monomial(wit.sample->second)};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "z-power product with exponents " << witness_text << " in W_{" << spec.n
                << "," << spec.k << "} tensor square: " << (wit.nonzero ? "nonzero" : "vanishes")
                << "\n";
      if (wit.nonzero)
        std::cout << "  surviving term " << format_monomial(wit.sample->first) << " (x) "
                  << format_monomial(wit.sample->second) << "\n";
    }
    return kExitOk;
  }
  if (!exact) throw DomainError("zcl requires --exact or --witness");
  try {
    Stopwatch watch;
    auto [z, cert] = zcl_exact(alg, ZclOptions{max_dim});
    if (opts.verbose)
      std::cerr << "frontier search over dimension " << alg.dim() << " finished after "
                << watch.secs() << " s\n";
    if (opts.json_output) {
      json j;
      j["n"] = cert.n;
      j["k"] = cert.k;
      j["zcl"] = cert.zcl;
      j["frontier"] = cert.frontier;
      j["witness_exponents"] = cert.witness_exponents;
      j["witness_term"] = {cert.witness_left, cert.witness_right};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "zcl(W_{" << spec.n << "," << spec.k << "}) = " << z << "\n";
      std::cout << "  witness exponents (";
      for (std::size_t i = 0; i < cert.witness_exponents.size(); ++i)
        std::cout << (i ? "," : "") << cert.witness_exponents[i];
      std::cout << ")  surviving term " << cert.witness_left << " (x) " << cert.witness_right
                << "\n  maximal nonvanishing tuples:";
      for (const auto& tup : cert.frontier) {
        std::cout << " (";
        for (std::size_t i = 0; i < tup.size(); ++i) std::cout << (i ? "," : "") << tup[i];
        std::cout << ")";
      }
      std::cout << "\n";
    }
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_report(const std::string& range_text, int k, const CommonOpts& opts, bool check,
               std::size_t zcl_max_dim) {
  auto [lo, hi] = parse_range(range_text);
  bool ok = true;
  json rows = json::array();
  if (!opts.json_output)
    std::cout << "   n   k   ht(w2..wk)      cl(W)  cl witness        zcl(W)  zcl witness\n";
  for (int n = lo; n <= hi; ++n) {
    Stopwatch watch;
    IdealSpec spec(n, k);
    QuotientAlgebra alg = QuotientAlgebra::build(spec, basis_for(spec, opts));
    ReportRow row = make_report_row(alg, zcl_max_dim);
    if (opts.verbose)
      std::cerr << "n=" << n << ": dimension " << alg.dim() << ", row built after "
                << watch.secs() << " s\n";
    if (check) {
      if (auto mismatch = check_against_golden(row)) {
        std::cerr << "golden mismatch: " << *mismatch << "\n";
        ok = false;
      }
    }
    if (opts.json_output) {
      json j;
      j["n"] = row.n;
      j["k"] = row.k;
      json heights;
      for (std::size_t i = 0; i < row.heights.size(); ++i)
        heights["w" + std::to_string(i + kMinVariableIndex)] = row.heights[i];
      j["heights"] = heights;
      j["cl"] = row.cl;
      j["witness"] = row.cl_witness;
      j["zcl"] = row.zcl;
      j["zcl_exact"] = row.zcl_is_exact;
      j["zcl_witness"] = row.zcl_witness;
      j["cited_bounds"] = cited_bound_lines(row);
      rows.push_back(j);
    } else {
      std::ostringstream hts;
      for (std::size_t i = 0; i < row.heights.size(); ++i)
        hts << (i ? "," : "") << row.heights[i];
      std::ostringstream wexp;
      wexp << "(";
      for (std::size_t i = 0; i < row.zcl_witness.size(); ++i)
        wexp << (i ? "," : "") << row.zcl_witness[i];
      wexp << ")";
      std::printf("%4d %3d   %-15s %5d  %-16s %s%-6d %s\n", row.n, row.k, hts.str().c_str(),
                  row.cl, row.cl_witness.c_str(), row.zcl_is_exact ? " " : ">", row.zcl,
                  wexp.str().c_str());
      for (const auto& line : cited_bound_lines(row)) std::cout << "      " << line << "\n";
    }
  }
  if (opts.json_output) std::cout << rows.dump(2) << "\n";
  if (check && ok && !opts.json_output) std::cout << "all golden checks passed\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-basis engine for the characteristic subalgebras W_{n,k} over GF(2)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOpts opts;
  int n = 0, k = 4;
  auto add_common = [&](CLI::App* cmd, bool with_nk = true) {
    cmd->add_option("--cache-dir", opts.cache_dir, "basis cache directory");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
    cmd->add_option("--seed", opts.seed, "seed for randomized checks");
    cmd->add_flag("--json", opts.json_output, "machine-readable output");
    cmd->add_flag("-v,--verbose", opts.verbose, "timing notes on stderr");
    if (with_nk) {
      cmd->add_option("--n", n, "n parameter of I_{n,k}")->required();
      cmd->add_option("--k", k, "k parameter of I_{n,k}");
    }
  };

  auto* gb = app.add_subcommand("gb", "compute the reduced Groebner basis of I_{n,k}");
  bool verify_known = false;
  add_common(gb);
  gb->add_flag("--verify-known", verify_known, "cross-check against the tabulated basis");

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo I_{n,k}");
  std::string poly_text;
  add_common(nf);
  nf->add_option("--poly", poly_text, "polynomial, e.g. \"w2^3 + w3*w4\"")->required();

  auto* identities = app.add_subcommand("identities", "verify the polynomial identity suite");
  int t_min = 3, t_max = 10, samples = 8;
  std::string ids = "abcdefghij";
  add_common(identities, /*with_nk=*/false);
  identities->add_option("--t-min", t_min, "smallest scale");
  identities->add_option("--t-max", t_max, "largest scale");
  identities->add_option("--ids", ids, "identity letters to run (default all)");
  identities->add_option("--samples", samples, "random instances per scale");

  auto* height = app.add_subcommand("height", "heights of the generator cosets in W_{n,k}");
  add_common(height);

  auto* cl = app.add_subcommand("cl", "cup-length of W_{n,k} with witness monomial");
  add_common(cl);

  auto* zcl = app.add_subcommand("zcl", "zero-divisor cup-length of W_{n,k}");
  bool zcl_exact_flag = false;
  std::string witness_text;
  std::size_t max_dim = 4096;
  add_common(zcl);
  zcl->add_flag("--exact", zcl_exact_flag, "run the exact frontier search");
  zcl->add_option("--witness", witness_text, "exponents a,b,... of one z-power product");
  zcl->add_option("--max-dim", max_dim, "largest algebra dimension the search accepts");

  auto* report = app.add_subcommand("report", "summary table over a range of n");
  std::string range_text;
  bool check = false;
  std::size_t report_zcl_dim = kReportZclExactMaxDim;
  add_common(report, /*with_nk=*/false);
  report->add_option("--n", range_text, "n or range n1..n2")->required();
  report->add_option("--k", k, "k parameter");
  report->add_flag("--check", check, "compare against the built-in golden values");
  report->add_option("--zcl-max-dim", report_zcl_dim,
                     "dimension cap for exact zcl inside the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gb->parsed()) return cmd_gb(IdealSpec(n, k), opts, verify_known);
    if (nf->parsed()) return cmd_nf(IdealSpec(n, k), opts, poly_text);
    if (identities->parsed()) return cmd_identities(opts, t_min, t_max, ids, samples);
    if (height->parsed()) return cmd_height(IdealSpec(n, k), opts);
    if (cl->parsed()) return cmd_cl(IdealSpec(n, k), opts);
    if (zcl->parsed()) return cmd_zcl(IdealSpec(n, k), opts, zcl_exact_flag, witness_text, max_dim);
    if (report->parsed()) return cmd_report(range_text, k, opts, check, report_zcl_dim);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
