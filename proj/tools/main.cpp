// Command-line front end: construction, verification, and search over the
// root-of-unity matrix family B_n and the cycle powers C_l^n, with
// machine-readable reports.
//
// Exit codes: 0 pass/success, 1 verification failed (counterexample found),
// 2 usage error, 3 resource limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qmagic/cyclegraph.hpp"
#include "qmagic/cyclotomic.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/extremal.hpp"
#include "qmagic/qmatrix.hpp"
#include "qmagic/spectral.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace qmagic;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  std::string format = "json";
  long dim_limit = kDefaultDimLimit;
  std::uint64_t enum_limit = kDefaultEnumLimit;
  int threads = 1;
  double tol = kDefaultRankTol;
  bool timings = false;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_csv_pair(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string header, values;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) {
      header += ",";
      values += ",";
    }
    header += fields[i].first;
    values += fields[i].second;
  }
  std::cout << header << "\n" << values << "\n";
}

std::string join_longs(const std::vector<long>& v, char sep = ';') {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Subset literal: comma-separated indices, or @file with one index per line.
std::vector<long> parse_subset(const std::string& text) {
  std::vector<long> out;
  auto push = [&out](const std::string& tok) {
    if (tok.empty()) return;
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad vertex index '" + tok + "'");
    out.push_back(v);
  };
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot open subset file '" + text.substr(1) + "'");
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      push(line);
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) push(tok);
  }
  if (out.empty()) throw std::invalid_argument("empty subset");
  return out;
}

ordered_json report_header(const std::string& command) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

int run_build_b(int l, int n, const CommonOpts& opts) {
  RootMatrix b = build_B(l, n, opts.dim_limit);
  if (opts.format == "dump") {
    std::cout << b.dump();
  } else if (opts.format == "csv") {
    std::cout << "row,col,exponent\n";
    for (long r = 0; r < b.dim(); ++r)
      for (const auto& [c, k] : b.row(r)) std::cout << r << "," << c << "," << k << "\n";
  } else {
    ordered_json j = report_header("build-b");
    j["l"] = l;
    j["n"] = n;
    j["dim"] = b.dim();
    j["nonzeros"] = b.nonzeros();
    ordered_json entries = ordered_json::array();
    for (long r = 0; r < b.dim(); ++r)
      for (const auto& [c, k] : b.row(r)) entries.push_back({r, c, k});
    j["entries"] = std::move(entries);
    emit(j);
  }
  return kExitPass;
}

int run_verify_identity(int l, int n, const CommonOpts& opts) {
  IdentityReport rep = verify_power_identity(l, n, opts.dim_limit);
  std::cerr << "verify-identity: dim=" << rep.dim << " elapsed_ms=" << rep.elapsed_ms << "\n";
  if (opts.format == "csv") {
    emit_csv_pair({{"identity", "B_n^l=nI"},
                   {"l", std::to_string(l)},
                   {"n", std::to_string(n)},
                   {"dim", std::to_string(rep.dim)},
                   {"pass", rep.pass ? "true" : "false"}});
  } else {
    ordered_json j = report_header("verify-identity");
    j["identity"] = "B_n^l=nI";
    j["l"] = l;
    j["n"] = n;
    j["dim"] = rep.dim;
    j["pass"] = rep.pass;
    if (rep.has_discrepancy) {
      j["bad_row"] = rep.bad_row;
      j["bad_col"] = rep.bad_col;
      j["got"] = rep.got;
      j["expected"] = rep.expected;
    }
    if (opts.timings) j["elapsed_ms"] = rep.elapsed_ms;
    emit(j);
  }
  return rep.pass ? kExitPass : kExitFail;
}

int run_verify_pattern(int l, int n, const CommonOpts& opts) {
  PatternReport rep = verify_pattern_equivalence(l, n, opts.dim_limit);
  if (opts.format == "csv") {
    emit_csv_pair({{"l", std::to_string(l)},
                   {"n", std::to_string(n)},
                   {"dim", std::to_string(rep.dim)},
                   {"pass", rep.pass ? "true" : "false"}});
  } else {
    ordered_json j = report_header("verify-pattern");
    j["l"] = l;
    j["n"] = n;
    j["dim"] = rep.dim;
    j["pass"] = rep.pass;
    if (!rep.pass) {
      j["bad_row"] = rep.bad_row;
      j["bad_col"] = rep.bad_col;
    }
    emit(j);
  }
  return rep.pass ? kExitPass : kExitFail;
}

int run_verify_theorem(int l, int n, const std::string& mode, std::uint64_t samples,
                       std::uint64_t seed, const CommonOpts& opts) {
  TheoremReport rep = (mode == "sampled")
                          ? verify_theorem_sampled(l, n, samples, seed, opts.threads, opts.dim_limit)
                          : verify_theorem_exhaustive(l, n, opts.threads, opts.enum_limit,
                                                      opts.dim_limit);
  std::cerr << "verify-theorem: subsets=" << rep.subsets_checked
            << " elapsed_ms=" << rep.elapsed_ms << "\n";
  if (opts.format == "csv") {
    std::vector<std::pair<std::string, std::string>> fields = {
        {"l", std::to_string(l)},
        {"n", std::to_string(n)},
        {"mode", rep.mode},
        {"threshold_size", std::to_string(rep.threshold_size)},
        {"bound_ceil", std::to_string(rep.bound_ceil)},
        {"subsets_checked", std::to_string(rep.subsets_checked)},
        {"min_max_degree", std::to_string(rep.min_max_degree)},
        {"theorem_holds", rep.theorem_holds ? "true" : "false"}};
    emit_csv_pair(fields);
  } else {
    ordered_json j = report_header("verify-theorem");
    j["l"] = l;
    j["n"] = n;
    j["mode"] = rep.mode;
    j["threshold_size"] = rep.threshold_size;
    j["bound_real"] = rep.bound_real;
    j["bound_ceil"] = rep.bound_ceil;
    if (rep.mode == "sampled") {
      j["samples"] = rep.samples;
      j["seed"] = rep.seed;
    }
    j["subsets_checked"] = rep.subsets_checked;
    j["min_max_degree"] = rep.min_max_degree;
    j["theorem_holds"] = rep.theorem_holds;
    j["counterexample"] =
        rep.counterexample ? ordered_json(*rep.counterexample) : ordered_json(nullptr);
    if (opts.timings) j["elapsed_ms"] = rep.elapsed_ms;
    emit(j);
  }
  return rep.theorem_holds ? kExitPass : kExitFail;
}

int run_spectral(int l, int n, const CommonOpts& opts) {
  SpectralReport rep = eigen_multiplicities(l, n, opts.tol, opts.dim_limit, opts.threads);
  const bool pass = rep.sum_matches_dim && rep.has_large_multiplicity;
  if (opts.format == "csv") {
    std::cout << "k,nullity\n";
    for (size_t k = 0; k < rep.nullities.size(); ++k)
      std::cout << k << "," << rep.nullities[k] << "\n";
  } else {
    ordered_json j = report_header("spectral");
    j["l"] = l;
    j["n"] = n;
    j["dim"] = rep.dim;
    j["root"] = rep.root;
    j["tol"] = rep.tol;
    j["nullities"] = rep.nullities;
    j["nullity_sum"] = rep.nullity_sum;
    j["sum_matches_dim"] = rep.sum_matches_dim;
    j["multiplicity_claim"] = rep.has_large_multiplicity;
    j["equal_split"] = rep.equal_split;
    emit(j);
  }
  return pass ? kExitPass : kExitFail;
}

int run_witness(int l, int n, const std::string& subset_text, const CommonOpts& opts) {
  const long dim = build_cycle_power(l, n, opts.dim_limit).num_vertices;
  VertexSubset s = VertexSubset::from_indices(dim, parse_subset(subset_text));
  std::optional<EigenWitness> w = intersection_witness(l, n, s, opts.tol, opts.dim_limit);
  NormBound nb = minor_norm_bound(l, n, s, opts.dim_limit);
  DegreeBound bound = degree_bound(l, n);
  const bool schur_ok =
      std::max(nb.max_row, nb.max_col) >= bound.real_bound - 1e-6;
  // For subsets at or above the threshold size a witness must exist; absence
  // there is a refutation.
  const bool must_exist = s.size() >= threshold_size(l, n);
  const bool pass = w.has_value() || !must_exist;

  if (opts.format == "csv") {
    emit_csv_pair({{"l", std::to_string(l)},
                   {"n", std::to_string(n)},
                   {"subset_size", std::to_string(s.size())},
                   {"found", w ? "true" : "false"},
                   {"residual", w ? std::to_string(w->residual) : ""},
                   {"max_row_norm", std::to_string(nb.max_row)},
                   {"max_col_norm", std::to_string(nb.max_col)},
                   {"schur_ok", schur_ok ? "true" : "false"}});
  } else {
    ordered_json j = report_header("witness");
    j["l"] = l;
    j["n"] = n;
    j["subset_size"] = s.size();
    j["lambda_re"] = bound.real_bound;
    j["lambda_im"] = 0.0;
    j["found"] = w.has_value();
    if (w) {
      j["residual"] = w->residual;
      ordered_json re = ordered_json::array(), im = ordered_json::array();
      for (long i = 0; i < w->vector.size(); ++i) {
        re.push_back(w->vector(i).real());
        im.push_back(w->vector(i).imag());
      }
      j["vector_re"] = std::move(re);
      j["vector_im"] = std::move(im);
    }
    j["max_row_norm"] = nb.max_row;
    j["max_col_norm"] = nb.max_col;
    j["schur_ok"] = schur_ok;
    emit(j);
  }
  return pass ? kExitPass : kExitFail;
}

int run_indep_set(int l, int m, const CommonOpts& opts) {
  VertexSubset x = referee_independent_set(l, m, opts.dim_limit);
  DiGraph g = build_cycle_power(l, m, opts.dim_limit);
  const bool independent = verify_independent(g, x);
  if (opts.format == "dot") {
    std::cout << to_dot(g, &x);
  } else if (opts.format == "csv") {
    std::cout << "vertex\n";
    for (long v : x.to_indices()) std::cout << v << "\n";
  } else {
    ordered_json j = report_header("indep-set");
    j["l"] = l;
    j["m"] = m;
    j["dim"] = g.num_vertices;
    j["size"] = x.size();
    j["independent"] = independent;
    j["vertices"] = x.to_indices();
    emit(j);
  }
  return independent ? kExitPass : kExitFail;
}

int run_search(int l, int n, long size, std::uint64_t iters, std::uint64_t seed,
               const std::string& init, const CommonOpts& opts) {
  SearchInit si = (init == "referee") ? SearchInit::Referee : SearchInit::Random;
  SearchResult res = search_min_max_degree(l, n, size, iters, seed, si, opts.dim_limit);
  if (opts.format == "csv") {
    emit_csv_pair({{"l", std::to_string(l)},
                   {"n", std::to_string(n)},
                   {"target_size", std::to_string(res.target_size)},
                   {"init", init},
                   {"iterations", std::to_string(res.iterations)},
                   {"seed", std::to_string(res.seed)},
                   {"best_max_degree", std::to_string(res.best_max_degree)},
                   {"best_subset", join_longs(res.best_subset)}});
  } else {
    ordered_json j = report_header("search");
    j["l"] = l;
    j["n"] = n;
    j["target_size"] = res.target_size;
    j["init"] = init;
    j["iterations"] = res.iterations;
    j["seed"] = res.seed;
    j["best_max_degree"] = res.best_max_degree;
    j["best_subset"] = res.best_subset;
    emit(j);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and spectral verification toolkit for root-of-unity matrices "
               "and induced subgraphs of directed cycle powers"};
  app.require_subcommand(1);

  CommonOpts opts;
  int l = 2, n = 1, m = 1;
  long size = 1;
  std::uint64_t samples = 10000, seed = 0, iters = 10000;
  std::string mode = "exhaustive", subset_text, init = "random";

  auto add_common = [&opts](CLI::App* cmd, std::initializer_list<const char*> formats) {
    std::set<std::string> allowed(formats.begin(), formats.end());
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    cmd->add_option("--dim-limit", opts.dim_limit, "max matrix dimension l^n")
        ->envname("QMAGIC_DIM_LIMIT")
        ->capture_default_str();
    cmd->add_flag("--timings", opts.timings, "include elapsed_ms in JSON (non-reproducible)");
  };
  auto add_l = [&l](CLI::App* cmd) {
    cmd->add_option("--l", l, "cycle length / root order")->required()->check(CLI::Range(2, 64));
  };
  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "Cartesian power / recursion depth")
        ->required()
        ->check(CLI::Range(1, 64));
  };

  CLI::App* build_b = app.add_subcommand("build-b", "construct B_n and print it");
  add_l(build_b);
  add_n(build_b);
  add_common(build_b, {"json", "dump", "csv"});

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);

  CLI::App* v_identity = verify->add_subcommand("identity", "check B_n^l = n*I exactly");
  add_l(v_identity);
  add_n(v_identity);
  add_common(v_identity, {"json", "csv"});

  CLI::App* v_pattern =
      verify->add_subcommand("pattern", "check abs pattern of B_n against M(C_l^n)");
  add_l(v_pattern);
  add_n(v_pattern);
  add_common(v_pattern, {"json", "csv"});

  CLI::App* v_theorem =
      verify->add_subcommand("theorem", "check the induced degree bound over subsets");
  add_l(v_theorem);
  add_n(v_theorem);
  add_common(v_theorem, {"json", "csv"});
  v_theorem->add_option("--mode", mode, "enumeration mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  v_theorem->add_option("--samples", samples, "sample count (sampled mode)")
      ->capture_default_str();
  v_theorem->add_option("--seed", seed, "sampling seed")->capture_default_str();
  v_theorem->add_option("--threads", opts.threads, "worker threads (0 = auto)")
      ->capture_default_str();
  v_theorem->add_option("--enum-limit", opts.enum_limit, "max subsets for exhaustive mode")
      ->envname("QMAGIC_ENUM_LIMIT")
      ->capture_default_str();

  CLI::App* spectral = app.add_subcommand("spectral", "eigenvalue multiplicity report for B_n");
  add_l(spectral);
  add_n(spectral);
  add_common(spectral, {"json", "csv"});
  spectral->add_option("--tol", opts.tol, "rank tolerance")->capture_default_str();
  spectral->add_option("--threads", opts.threads, "worker threads (0 = auto)")
      ->capture_default_str();

  CLI::App* witness =
      app.add_subcommand("witness", "eigenspace intersection witness and minor norms");
  add_l(witness);
  add_n(witness);
  add_common(witness, {"json", "csv"});
  witness->add_option("--subset", subset_text, "comma-separated vertex indices, or @file")
      ->required();
  witness->add_option("--tol", opts.tol, "rank tolerance")->capture_default_str();

  CLI::App* indep = app.add_subcommand("indep-set", "referee independent set in C_l^m");
  add_l(indep);
  indep->add_option("--m", m, "Cartesian power")->required()->check(CLI::Range(1, 64));
  add_common(indep, {"json", "csv", "dot"});

  CLI::App* search = app.add_subcommand("search", "local search for low induced max degree");
  add_l(search);
  add_n(search);
  add_common(search, {"json", "csv"});
  search->add_option("--size", size, "subset size")->required();
  search->add_option("--iters", iters, "iteration budget")->capture_default_str();
  search->add_option("--seed", seed, "search seed")->capture_default_str();
  search->add_option("--init", init, "starting subset")
      ->check(CLI::IsMember({"random", "referee"}))
      ->capture_default_str();
  search->add_option("--threads", opts.threads, "accepted for symmetry; search is sequential")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build_b->parsed()) return run_build_b(l, n, opts);
    if (v_identity->parsed()) return run_verify_identity(l, n, opts);
    if (v_pattern->parsed()) return run_verify_pattern(l, n, opts);
    if (v_theorem->parsed()) return run_verify_theorem(l, n, mode, samples, seed, opts);
    if (spectral->parsed()) return run_spectral(l, n, opts);
    if (witness->parsed()) return run_witness(l, n, subset_text, opts);
    if (indep->parsed()) return run_indep_set(l, m, opts);
    if (search->parsed()) return run_search(l, n, size, iters, seed, init, opts);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
