#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcldpc/bounds.hpp"
#include "qcldpc/construct.hpp"
#include "qcldpc/io.hpp"
#include "qcldpc/oracle.hpp"
#include "qcldpc/qc_code.hpp"

namespace {

using namespace qcldpc;

// exit codes: 0 success/verified, 1 verification failed, 2 parse/validation,
// 3 I/O, 4 construction precondition, 5 infeasible
constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_parse = 2;
constexpr int exit_io = 3;
constexpr int exit_construction = 4;
constexpr int exit_infeasible = 5;

constexpr std::size_t scan_j_cap = 10000;

struct RunConfig {
  std::string input;
  std::string codeword_path;
  std::string output;
  std::string format;  // per-command default when empty
  std::optional<std::uint32_t> s_override;
  std::vector<std::size_t> J;  // 1-based as given on the command line
  bool scan_j = false;
  bool random_exponents = false;
  std::uint64_t seed = 0;
  std::size_t dim_cap = oracle::default_dim_cap;
};

// Writes to --output if given, else stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw io::io_error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw io::io_error("write failed");
  }

 private:
  std::ofstream file_;
};

ExponentMatrix require_exponent_matrix(const RunConfig& cfg) {
  auto loaded = io::load_matrix(cfg.input);
  if (std::holds_alternative<ExponentMatrix>(loaded)) {
    const auto& em = std::get<ExponentMatrix>(loaded);
    if (cfg.s_override && *cfg.s_override != em.modulus())
      throw std::invalid_argument(
          "--s conflicts with the circulant size in the input file");
    return em;
  }
  const auto& wm = std::get<WeightMatrix>(loaded);
  if (!cfg.s_override)
    throw std::invalid_argument(
        "weight-matrix input needs --s to fix the circulant size");
  if (!cfg.random_exponents)
    throw std::invalid_argument(
        "weight-matrix input carries no exponents; pass --random-exponents "
        "with --seed to instantiate them");
  return instantiate_random(wm, *cfg.s_override, cfg.seed);
}

std::vector<std::size_t> default_column_set(const ExponentMatrix& em) {
  if (em.cols() < em.rows() + 1)
    throw construction_error("need at least m+1 columns to build a codeword");
  const auto sorted = sort_columns_ascending(em.weight_matrix());
  std::vector<std::size_t> J(sorted.perm.begin(),
                             sorted.perm.begin() + em.rows() + 1);
  std::sort(J.begin(), J.end());
  return J;
}

std::string join_1based(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

std::string csv_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string() + ".0";
  return r.to_string();
}

int cmd_expand(const RunConfig& cfg) {
  const auto em = require_exponent_matrix(cfg);
  OutputSink sink(cfg.output);
  io::write_binary_matrix(sink.stream(), expand(em));
  sink.finish();
  return exit_ok;
}

int cmd_bounds(const RunConfig& cfg) {
  auto loaded = io::load_matrix(cfg.input);
  BoundSummary summary;
  if (std::holds_alternative<ExponentMatrix>(loaded) || cfg.random_exponents) {
    summary = summarize(require_exponent_matrix(cfg), cfg.dim_cap);
  } else {
    const auto& wm = std::get<WeightMatrix>(loaded);
    if (!cfg.s_override)
      throw std::invalid_argument(
          "weight-matrix input needs --s to fix the circulant size");
    summary = summarize_weight_matrix(wm, *cfg.s_override, cfg.dim_cap);
  }
  if (!summary.det)
    std::cerr << "warning: n < m+1, determinant bound unavailable\n";

  OutputSink sink(cfg.output);
  std::ostream& out = sink.stream();
  if (cfg.format == "text") {
    out << "m: " << summary.m << "  n: " << summary.n << "  s: " << summary.s
        << "  N: " << summary.code_length << "\n";
    out << "design_rate: " << summary.design_rate.to_string() << "\n";
    switch (summary.d_base_status) {
      case oracle::DistanceStatus::exact:
        out << "d_base: " << summary.d_base << "\n";
        out << "bound_simple: " << *summary.bound_simple << "\n";
        break;
      case oracle::DistanceStatus::undefined:
        out << "d_base: UNDEFINED (base code has no nonzero codewords)\n";
        out << "bound_simple: UNAVAILABLE\n";
        break;
      case oracle::DistanceStatus::infeasible:
        out << "d_base: UNAVAILABLE (base nullspace above --dim-cap)\n";
        out << "bound_simple: UNAVAILABLE\n";
        break;
    }
    if (summary.det) {
      out << "bound_det_product: " << summary.det->bound_product << "\n";
      out << "bound_det_paper: " << summary.det->bound_average.to_string()
          << " (ceil " << summary.det->bound_average_ceil << ")\n";
      out << "k: " << summary.det->k
          << "  ell: " << summary.det->ell.to_string() << "\n";
    }
    if (summary.bound_constructive)
      out << "bound_constructive: " << *summary.bound_constructive << "\n";
    out << "linear_growth_possible: "
        << (summary.linear_growth_possible ? "true" : "false")
        << " (det bound is constant in s for fixed m, n)\n";
  } else {
    out << to_json(summary) << "\n";
  }
  sink.finish();
  return exit_ok;
}

int cmd_codeword(const RunConfig& cfg) {
  const auto em = require_exponent_matrix(cfg);
  std::vector<std::size_t> J;
  if (!cfg.J.empty()) {
    for (std::size_t one_based : cfg.J) {
      if (one_based < 1 || one_based > em.cols())
        throw construction_error("column index " + std::to_string(one_based) +
                                 " out of range [1, " +
                                 std::to_string(em.cols()) + "]");
      J.push_back(one_based - 1);
    }
    if (J.size() != em.rows() + 1)
      throw construction_error("--J must select exactly m+1 = " +
                               std::to_string(em.rows() + 1) + " columns");
  } else {
    J = default_column_set(em);
  }

  const auto built = construct_nonzero_codeword(em, J);
  const bool verified = syndrome_consistency_check(em, built.word);
  std::sort(J.begin(), J.end());

  if (!cfg.output.empty()) {
    OutputSink sink(cfg.output);
    io::write_codeword(sink.stream(), built.word);
    sink.finish();
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["J"] = std::vector<std::size_t>();
    for (std::size_t c : J) j["J"].push_back(c + 1);
    j["codeword"] = nlohmann::json::array();
    for (std::size_t i = 0; i < built.word.block_count(); ++i)
      j["codeword"].push_back(built.word.at(i).support());
    j["weight"] = built.word.weight();
    j["fallback"] = built.via_fallback;
    j["minor_order"] = built.minor_order;
    j["verified"] = verified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "J: " << join_1based(J) << "\n";
    if (built.via_fallback)
      std::cout << "fallback: all order-" << em.rows()
                << " minors vanish; built from a maximal nonzero minor of "
                   "order "
                << built.minor_order << "\n";
    std::cout << built.word.to_string() << ", weight " << built.word.weight()
              << ", " << (verified ? "VERIFIED" : "NOT VERIFIED") << "\n";
  }

  if (cfg.scan_j) {
    // exploratory sweep over column sets; not part of the bound computation
    const std::size_t n = em.cols(), size = em.rows() + 1;
    const auto advance = [n, size](std::vector<std::size_t>& c) {
      for (std::size_t i = size; i-- > 0;) {
        if (c[i] < n - (size - i)) {
          ++c[i];
          for (std::size_t t = i + 1; t < size; ++t) c[t] = c[t - 1] + 1;
          return true;
        }
      }
      return false;
    };
    std::vector<std::size_t> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    std::size_t tried = 0;
    std::optional<std::size_t> best_weight;
    std::vector<std::size_t> best_J;
    bool capped = false;
    do {
      if (tried == scan_j_cap) {
        capped = true;
        break;
      }
      ++tried;
      try {
        const auto c = construct_nonzero_codeword(em, combo);
        if (syndrome_consistency_check(em, c.word)) {
          const std::size_t w = c.word.weight();
          if (!best_weight || w < *best_weight) {
            best_weight = w;
            best_J = combo;
          }
        }
      } catch (const construction_error&) {
      }
    } while (advance(combo));
    std::cout << "J-scan (exploratory, beyond the headline construction";
    if (capped) std::cout << "; first " << scan_j_cap << " subsets";
    std::cout << "): ";
    if (best_weight)
      std::cout << "best J=" << join_1based(best_J) << ", weight "
                << *best_weight << "\n";
    else
      std::cout << "no nonzero codeword found\n";
  }

  return verified ? exit_ok : exit_verify_failed;
}

int cmd_mindist(const RunConfig& cfg) {
  const auto em = require_exponent_matrix(cfg);
  const auto result = oracle::min_distance_exhaustive(expand(em), cfg.dim_cap);

  std::cout << "nullspace_dim: " << result.nullspace_dim << "\n";
  if (result.status == oracle::DistanceStatus::infeasible) {
    std::cout << "INFEASIBLE: nullspace dimension " << result.nullspace_dim
              << " exceeds --dim-cap " << cfg.dim_cap
              << "; reduce s or raise the cap (hard ceiling "
              << oracle::hard_dim_cap << ")\n";
    return exit_infeasible;
  }
  if (result.status == oracle::DistanceStatus::undefined) {
    std::cout << "DISTANCE_UNDEFINED: the code has no nonzero codewords\n";
    return exit_ok;
  }

  const auto word =
      CodewordPoly::unflatten(result.achiever, em.cols(), em.modulus());
  std::cout << "min_distance: " << result.distance << "\n";
  std::cout << "achiever: " << word.to_string() << "\n";

  BoundSummary summary;
  try {
    summary = summarize(em, cfg.dim_cap);
  } catch (const std::invalid_argument& e) {
    // degenerate blueprints (zero-weight columns) have no determinant bound
    std::cout << "bounds unavailable: " << e.what() << "\n";
    return exit_ok;
  }
  bool all_hold = true;
  const auto compare = [&](const char* name, std::uint64_t bound) {
    const bool holds = result.distance <= bound;
    all_hold = all_hold && holds;
    std::cout << name << ": " << bound << "  (D <= bound: "
              << (holds ? "yes" : "NO") << ")\n";
  };
  if (summary.bound_simple) compare("bound_simple", *summary.bound_simple);
  if (summary.det) {
    compare("bound_det_product", summary.det->bound_product);
    compare("bound_det_paper", summary.det->bound_average_ceil);
  }
  if (summary.bound_constructive)
    compare("bound_constructive", *summary.bound_constructive);
  return all_hold ? exit_ok : exit_verify_failed;
}

int cmd_ddist(const RunConfig& cfg) {
  auto loaded = io::load_matrix(cfg.input);
  const WeightMatrix wm =
      std::holds_alternative<WeightMatrix>(loaded)
          ? std::get<WeightMatrix>(loaded)
          : std::get<ExponentMatrix>(loaded).weight_matrix();
  if (wm.cols() < 2)
    throw std::invalid_argument("ddist: need at least two columns");
  const auto sorted = sort_columns_ascending(wm).sorted;
  const auto weights = sorted.column_weights();

  OutputSink sink(cfg.output);
  std::ostream& out = sink.stream();
  out << "t,avg_weight_2_t\n";
  for (std::size_t t = 2; t <= wm.cols(); ++t) {
    // t == 2 degenerates to the single weight l_2
    const Rational value =
        t == 2 ? Rational(static_cast<std::int64_t>(weights[1]))
               : avg_weight(sorted, 2, t);
    out << t << "," << csv_rational(value) << "\n";
  }
  sink.finish();
  return exit_ok;
}

int cmd_check(const RunConfig& cfg) {
  const auto em = require_exponent_matrix(cfg);
  const auto word = io::load_codeword(cfg.codeword_path);
  const auto rows = syndrome(em, word);  // throws on dimension mismatch
  const bool ok = syndrome_consistency_check(em, word);
  if (ok) {
    std::cout << "VERIFIED\n";
    return exit_ok;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_zero()) {
      std::cout << "FAILED: syndrome nonzero at row " << (i + 1) << " ("
                << rows[i].to_string() << ")\n";
      break;
    }
  }
  return exit_verify_failed;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, bool with_instantiate) {
  sub->add_option("--input", cfg.input, "input matrix file")->required();
  sub->add_option("--output", cfg.output, "write output to this file");
  if (with_instantiate) {
    auto* s_opt = sub->add_option("--s", cfg.s_override,
                                  "circulant size for weight-matrix inputs");
    auto* seed_opt =
        sub->add_option("--seed", cfg.seed, "seed for --random-exponents");
    sub->add_flag("--random-exponents", cfg.random_exponents,
                  "instantiate random exponents on a weight matrix (needs "
                  "--s and --seed)")
        ->needs(s_opt)
        ->needs(seed_opt);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qcldpc: minimum-distance bounds, codeword construction and exact "
      "brute-force distance for type-1 quasi-cyclic LDPC codes"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* expand_cmd =
      app.add_subcommand("expand", "expand a polynomial matrix into the full "
                                   "binary parity-check matrix");
  add_common_options(expand_cmd, cfg, true);

  auto* bounds_cmd = app.add_subcommand(
      "bounds", "compute the distance bounds and emit a JSON summary");
  add_common_options(bounds_cmd, cfg, true);
  bounds_cmd->add_option("--dim-cap", cfg.dim_cap,
                         "nullspace-dimension budget for the exhaustive base "
                         "distance");
  bounds_cmd->add_option("--format", cfg.format, "json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* codeword_cmd = app.add_subcommand(
      "codeword", "construct a low-weight codeword from m+1 columns");
  add_common_options(codeword_cmd, cfg, true);
  codeword_cmd
      ->add_option("--J", cfg.J,
                   "1-based column indices (default: the m+1 lightest)")
      ->delimiter(',');
  codeword_cmd->add_flag("--scan-J", cfg.scan_j,
                         "also sweep column subsets (capped) and report the "
                         "lightest verified codeword");
  codeword_cmd->add_option("--format", cfg.format, "text (default) or json")
      ->check(CLI::IsMember({"json", "text"}));

  auto* mindist_cmd = app.add_subcommand(
      "mindist", "exhaustive minimum distance of the expanded code");
  add_common_options(mindist_cmd, cfg, true);
  mindist_cmd->add_option("--dim-cap", cfg.dim_cap,
                          "nullspace-dimension budget (hard ceiling 24)");

  auto* ddist_cmd = app.add_subcommand(
      "ddist", "CSV of running average column weights of the sorted matrix");
  add_common_options(ddist_cmd, cfg, false);

  auto* check_cmd = app.add_subcommand(
      "check", "verify a codeword against a matrix via both syndrome paths");
  add_common_options(check_cmd, cfg, true);
  check_cmd->add_option("--codeword", cfg.codeword_path, "codeword file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  try {
    if (app.got_subcommand(expand_cmd)) return cmd_expand(cfg);
    if (app.got_subcommand(bounds_cmd)) return cmd_bounds(cfg);
    if (app.got_subcommand(codeword_cmd)) return cmd_codeword(cfg);
    if (app.got_subcommand(mindist_cmd)) return cmd_mindist(cfg);
    if (app.got_subcommand(ddist_cmd)) return cmd_ddist(cfg);
    if (app.got_subcommand(check_cmd)) return cmd_check(cfg);
  } catch (const io::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const io::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return exit_io;
  } catch (const construction_error& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return exit_construction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}
