#include "bsgamma/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "bsgamma/errors.hpp"
#include "bsgamma/gamma.hpp"
#include "bsgamma/identities.hpp"
#include "bsgamma/json_io.hpp"
#include "bsgamma/tensor.hpp"

namespace bsgamma::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string p;  // one prime, or a comma list for sweep
  std::optional<int> n;
  std::optional<int> r;
  std::string lambda;
  std::string orbit_type;
  std::string route = "both";
  std::string identity;
  int m_max = 200;
  int max_blocks = 16;
  int max_k = 8;
  int max_d = 6;
  int n_min = 2;
  int n_max = 10;
  int jobs = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "json";
  bool check = false;
  std::string out_file;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + text + "' is not an integer list");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is required");
  return out;
}

int single_prime(const RunConfig& cfg) {
  const auto primes = parse_int_list(cfg.p, "--p");
  if (primes.size() != 1) throw UsageError("--p takes a single prime for this subcommand");
  if (!is_prime(primes[0])) throw UsageError("--p: " + std::to_string(primes[0]) + " is not prime");
  return primes[0];
}

PartitionPair instance(const RunConfig& cfg) {
  if (!cfg.lambda.empty()) {
    const auto parts = parse_int_list(cfg.lambda, "--lambda");
    if (parts.size() != 2) throw UsageError("--lambda expects two parts, e.g. 5,2");
    if (parts[0] < 0 || parts[1] < 0 || parts[0] + parts[1] < 1) throw UsageError("--lambda: parts must be >= 0");
    const PartitionPair pp = PartitionPair::from_lambda(parts[0], parts[1]);
    if (cfg.n && *cfg.n != pp.n()) throw UsageError("--n disagrees with --lambda");
    if (cfg.r && *cfg.r != pp.r() && *cfg.r != pp.lambda1()) throw UsageError("--r disagrees with --lambda");
    return pp;
  }
  if (!cfg.n) throw UsageError("--n is required (or --lambda)");
  if (!cfg.r) throw UsageError("--r is required (or --lambda)");
  if (*cfg.n < 1 || *cfg.n > 64) throw UsageError("--n must lie in 1..64");
  if (*cfg.r < 0 || *cfg.r > *cfg.n) throw UsageError("--r must lie in 0..n");
  return PartitionPair::from_nr(*cfg.n, *cfg.r);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_array()) {
    std::string joined;
    for (const auto& item : v) {
      if (!joined.empty()) joined += ' ';
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    return csv_escape(joined);
  }
  return csv_escape(v.dump());
}

// Emits JSON lines, or CSV with the given columns taken from each object.
class Emitter {
 public:
  Emitter(std::ostream& out, std::string format, std::vector<std::string> columns)
      : out_(out), csv_(format == "csv"), columns_(std::move(columns)) {}

  void emit(const nlohmann::json& row) {
    if (!csv_) {
      out_ << row.dump() << '\n';
      return;
    }
    if (!header_written_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
      header_written_ = true;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
      out_ << (i ? "," : "") << (row.contains(columns_[i]) ? csv_cell(row[columns_[i]]) : std::string());
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  bool csv_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  const int p = single_prime(cfg);
  const PartitionPair pp = instance(cfg);
  const GammaReport report = gamma_symmetric_group(pp, p, GammaOptions{cfg.budget, true});
  nlohmann::json row = gamma_report_json(report);
  Emitter emitter(out, cfg.format,
                  {"n", "lambda", "p", "gamma", "gamma_closed", "gamma_structural", "gamma_oracle", "oracle_skipped",
                   "witness_block", "agree"});
  emitter.emit(row);
  return cfg.check && !report.agree ? kCheckFailed : kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const int p = single_prime(cfg);
  const PartitionPair pp = instance(cfg);
  if (cfg.route != "formula" && cfg.route != "enumerated" && cfg.route != "both")
    throw UsageError("--route must be formula, enumerated or both");
  if (p > pp.n()) throw PrimeTooLarge(p, pp.n());
  const OrbitType type = cfg.orbit_type.empty() ? max_rank_type(pp.n(), p) : OrbitType::parse(cfg.orbit_type, pp.n(), p);

  Emitter emitter(out, cfg.format, {"route", "signature", "d", "dim", "mult", "projective"});
  const bool csv = cfg.format == "csv";
  auto emit = [&](const std::string& route, const OrbitType& t, const Decomposition& dec) {
    nlohmann::json rows = decomposition_rows(dec);
    if (csv) {
      for (auto& row : rows) {
        row["route"] = route;
        emitter.emit(row);
      }
      return;
    }
    emitter.emit({{"route", route},
                  {"n", pp.n()},
                  {"lambda", {pp.lambda1(), pp.lambda2()}},
                  {"p", p},
                  {"orbit_type", orbit_type_json(t)},
                  {"total_dimension", to_decimal(dec.total_dimension())},
                  {"rows", rows}});
  };

  std::optional<SymmetricDecomposition> formula;
  if (cfg.route != "enumerated") {
    formula = decompose_formula(pp, p);
    emit("formula", max_rank_type(pp.n(), p), formula->expand());
  }
  std::optional<Decomposition> enumerated;
  if (cfg.route != "formula") {
    enumerated = decompose_enumerated(pp, ElementaryGroup(type), cfg.budget);
    emit("enumerated", type, *enumerated);
  }
  if (cfg.check && formula && enumerated && type.is_max_rank() && !same_multiplicities(*formula, *enumerated))
    return kCheckFailed;
  return kOk;
}

int cmd_tensor_sim(const RunConfig& cfg, std::ostream& out) {
  const int p = single_prime(cfg);
  const PartitionPair pp = instance(cfg);
  GrowthOptions options;
  options.m_max = cfg.m_max;
  options.max_blocks = cfg.max_blocks;
  options.target = gamma_closed(pp, p);
  const GrowthEstimate g = growth(pp, p, options);

  Emitter emitter(out, cfg.format, {"m", "c", "ratio", "root"});
  for (std::size_t j = 0; j < g.c_values.size(); ++j) emitter.emit(growth_line(g, j));

  if (cfg.check) {
    const CoreState m = core_of(decompose_formula(pp, p), options.max_blocks);
    for (std::size_t j = 0; j < g.c_values.size(); ++j)
      if (core_dimension_by_faces(m, static_cast<int>(j + 1)) != g.c_values[j]) return kCheckFailed;
  }
  return kOk;
}

int cmd_verify_identities(const RunConfig& cfg, std::ostream& out) {
  std::vector<int> primes = cfg.p.empty() ? std::vector<int>{2, 3, 5, 7} : parse_int_list(cfg.p, "--p");
  for (int p : primes)
    if (!is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
  if (cfg.max_k < 1 || cfg.max_d < 1) throw UsageError("--max-k and --max-d must be >= 1");
  std::optional<Identity> only;
  if (!cfg.identity.empty()) only = parse_identity(cfg.identity);

  Emitter emitter(out, cfg.format, {"identity", "params", "lhs", "rhs", "equal"});
  bool all_equal = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (const IdentityCase& c : identity_grid(primes[i], IdentityGridLimits{cfg.max_k, cfg.max_d}, i == 0)) {
      if (only && c.identity != *only) continue;
      const IdentityCheck check = verify_identity(c.identity, c.params);
      all_equal = all_equal && check.equal;
      nlohmann::json row = identity_json(c, check);
      if (cfg.format == "csv") {
        std::string params;
        for (const auto& [key, value] : c.params) params += (params.empty() ? "" : " ") + key + "=" + std::to_string(value);
        row["params"] = params;
      }
      emitter.emit(row);
    }
  }
  return cfg.check && !all_equal ? kCheckFailed : kOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const int p = single_prime(cfg);
  const PartitionPair pp = instance(cfg);
  std::vector<OrbitType> types;
  if (cfg.orbit_type.empty()) types = enumerate_orbit_types(pp.n(), p);
  else types.push_back(OrbitType::parse(cfg.orbit_type, pp.n(), p));
  std::sort(types.begin(), types.end(),
            [](const OrbitType& a, const OrbitType& b) { return a.encoding() < b.encoding(); });

  const BigInt closed = gamma_closed(pp, p);
  Emitter emitter(out, cfg.format, {"orbit_type", "rank", "gamma_E", "witness"});
  bool consistent = true;
  for (const OrbitType& t : types) {
    const OracleGamma g = gamma_oracle(pp, t, cfg.budget);
    consistent = consistent && (t.is_max_rank() ? g.gamma == closed : g.gamma <= closed);
    nlohmann::json row = {{"orbit_type", orbit_type_json(t)},
                          {"rank", t.rank()},
                          {"gamma_E", to_decimal(g.gamma)},
                          {"witness", g.witness.line}};
    if (cfg.format == "csv") row["orbit_type"] = t.encoding();
    emitter.emit(row);
  }
  return cfg.check && !consistent ? kCheckFailed : kOk;
}

struct SweepRow {
  nlohmann::json row;
  bool ok = true;
};

SweepRow sweep_instance(int p, int n, int r, const RunConfig& cfg) {
  const PartitionPair pp = PartitionPair::from_nr(n, r);
  const GammaReport report = gamma_symmetric_group(pp, p, GammaOptions{cfg.budget, false});
  SweepRow out;
  out.ok = report.agree;
  nlohmann::json matches;
  if (cfg.check && tabloid_count(n, r) <= cfg.budget) {
    const bool same =
        same_multiplicities(decompose_formula(pp, p), decompose_enumerated(pp, ElementaryGroup(max_rank_type(n, p)), cfg.budget));
    matches = same;
    out.ok = out.ok && same;
  }
  out.row = {{"p", p},
             {"n", n},
             {"r", r},
             {"lambda", {pp.lambda1(), pp.lambda2()}},
             {"gamma", to_decimal(report.gamma_closed)},
             {"gamma_structural", to_decimal(report.gamma_structural)},
             {"gamma_oracle", report.gamma_oracle ? nlohmann::json(to_decimal(*report.gamma_oracle)) : nlohmann::json()},
             {"formula_matches_enumeration", matches},
             {"agree", out.ok}};
  return out;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> primes = cfg.p.empty() ? std::vector<int>{2, 3} : parse_int_list(cfg.p, "--p");
  for (int p : primes)
    if (!is_prime(p)) throw UsageError("--p: " + std::to_string(p) + " is not prime");
  if (cfg.n_min < 1 || cfg.n_max > 64 || cfg.n_min > cfg.n_max) throw UsageError("need 1 <= --n-min <= --n-max <= 64");

  struct Cell {
    int p, n, r;
  };
  std::vector<Cell> grid;
  for (int p : primes)
    for (int n = std::max(cfg.n_min, p); n <= cfg.n_max; ++n)
      for (int r = 0; r <= n / 2; ++r) grid.push_back({p, n, r});
  if (grid.empty()) throw UsageError("sweep grid is empty");

  const std::size_t jobs = cfg.jobs > 0 ? static_cast<std::size_t>(cfg.jobs)
                                        : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  Emitter emitter(out, cfg.format,
                  {"p", "n", "r", "lambda", "gamma", "gamma_structural", "gamma_oracle", "formula_matches_enumeration", "agree"});
  bool all_ok = true;
  // Results are computed in batches of `jobs` and written in grid order.
  for (std::size_t start = 0; start < grid.size(); start += jobs) {
    const std::size_t stop = std::min(grid.size(), start + jobs);
    std::vector<std::future<SweepRow>> pending;
    for (std::size_t i = start; i < stop; ++i) {
      const Cell c = grid[i];
      pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [c, &cfg] { return sweep_instance(c.p, c.n, c.r, cfg); }));
    }
    for (auto& f : pending) {
      SweepRow row = f.get();
      all_ok = all_ok && row.ok;
      emitter.emit(row.row);
    }
  }
  return cfg.check && !all_ok ? kCheckFailed : kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "gamma") return cmd_gamma(cfg, out);
  if (cfg.subcommand == "decompose") return cmd_decompose(cfg, out);
  if (cfg.subcommand == "tensor-sim") return cmd_tensor_sim(cfg, out);
  if (cfg.subcommand == "verify-identities") return cmd_verify_identities(cfg, out);
  if (cfg.subcommand == "oracle") return cmd_oracle(cfg, out);
  if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Benson-Symonds gamma invariant of two-part permutation modules", "bsgamma"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.require_subcommand(1, 1);

  app.add_option("--p", cfg.p, "Prime characteristic (comma list for sweep and verify-identities)");
  app.add_option("--n", cfg.n, "Degree n");
  app.add_option("--r", cfg.r, "Second part r = lambda2");
  app.add_option("--lambda", cfg.lambda, "Partition as 'lambda1,lambda2'");
  app.add_option("--orbit-type", cfg.orbit_type, "Orbit type as 'j:count,...', e.g. '1:2'");
  app.add_option("--m-max", cfg.m_max, "Tensor powers to simulate")->check(CLI::Range(2, 100000));
  app.add_option("--max-blocks", cfg.max_blocks, "Largest block count for tensor-sim")->check(CLI::Range(1, 24));
  app.add_option("--budget", cfg.budget, "Enumeration budget in tabloids")->check(CLI::Range(std::uint64_t{10000}, UINT64_MAX));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--check", cfg.check, "Exit 1 on any disagreement between routes");
  app.add_option("--out", cfg.out_file, "Write output to FILE instead of stdout");
  app.add_option("--route", cfg.route, "decompose: formula, enumerated or both");
  app.add_option("--identity", cfg.identity, "verify-identities: restrict to one identity");
  app.add_option("--max-k", cfg.max_k, "verify-identities: largest k");
  app.add_option("--max-d", cfg.max_d, "verify-identities: largest d");
  app.add_option("--n-min", cfg.n_min, "sweep: smallest n");
  app.add_option("--n-max", cfg.n_max, "sweep: largest n");
  app.add_option("--jobs", cfg.jobs, "sweep: worker threads (0 = hardware)");

  for (const char* name : {"gamma", "decompose", "tensor-sim", "verify-identities", "oracle", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&cfg, name] { cfg.subcommand = name; });
  }
  app.get_subcommand("gamma")->description("GammaReport for one instance");
  app.get_subcommand("decompose")->description("Summand multiplicities of the restriction");
  app.get_subcommand("tensor-sim")->description("Core dimensions of tensor powers");
  app.get_subcommand("verify-identities")->description("Evaluate both sides of every counting identity");
  app.get_subcommand("oracle")->description("Fixed-point gamma per orbit type");
  app.get_subcommand("sweep")->description("Grid over p, n, r; one JSON line per instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  if (!cfg.out_file.empty()) {
    file.open(cfg.out_file);
    if (!file) {
      err << "usage error: cannot open --out " << cfg.out_file << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = cfg.out_file.empty() ? out : file;

  try {
    return dispatch(cfg, sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PrimeTooLarge& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownIdentity& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ParamsOutOfDomain& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const InstanceTooLarge& e) {
    err << "InstanceTooLarge: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bsgamma::cli
