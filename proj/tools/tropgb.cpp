// tropgb: tropical Gröbner bases from the command line.
//
//   tropgb compute --input FILE --algo f5 --verify --fglm --stats out.json
//   tropgb bench --system katsura --n 4 --p 2 --weights alt --verify
//   tropgb random --degrees 2,2,2 --p 101 --precision 30 --trials 50 --seed 1

#include "tropgb/bench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tropgb;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct CommonFlags {
  std::string algo = "f5";
  bool verify = false;
  bool fglm = false;
  std::string stats_path;
  std::optional<unsigned> max_degree;
  bool no_criterion = false;
  bool no_rewritten = false;
  std::string zero_syzygies = "on";
  std::string f4_reduction = "lup";
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--algo", c.algo, "f5, f5it, f4 or buchberger")->check(CLI::IsMember({"f5", "f5it", "f4", "buchberger"}));
  cmd->add_flag("--verify", c.verify, "check the result with verify_gb");
  cmd->add_flag("--fglm", c.fglm, "convert the result to a lex basis");
  cmd->add_option("--stats", c.stats_path, "write a JSON report to this file");
  cmd->add_option("--max-degree", c.max_degree, "stop once the sugar degree exceeds D (exit code 3)");
  cmd->add_flag("--no-f5-criterion", c.no_criterion, "disable signature elimination");
  cmd->add_flag("--no-rewritten", c.no_rewritten, "disable the rewritten criterion");
  cmd->add_option("--record-zero-syzygies", c.zero_syzygies, "record signatures of zero rows")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--f4-reduction", c.f4_reduction, "lup, echelon-leading or echelon-full")
      ->check(CLI::IsMember({"lup", "echelon-leading", "echelon-full"}));
}

ExperimentOptions to_options(const CommonFlags& c) {
  ExperimentOptions o;
  o.algo = parse_algorithm(c.algo);
  o.verify = c.verify;
  o.fglm = c.fglm;
  o.f5.f5_criterion = !c.no_criterion;
  o.f5.rewritten = !c.no_rewritten;
  o.f5.record_zero_syzygies = c.zero_syzygies == "on";
  o.f5.max_degree = c.max_degree;
  if (c.f4_reduction == "echelon-leading") o.f4_reduction = F4Reduction::echelon_leading;
  if (c.f4_reduction == "echelon-full") o.f4_reduction = F4Reduction::echelon_full;
  return o;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

int exit_code(const ExperimentReport& r) {
  if (r.stats.degree_truncated) return kCapExceeded;
  if (r.verified && !*r.verified) return kVerifyFailed;
  return kOk;
}

void print_report(const ExperimentReport& r) {
  std::cout << "# " << algorithm_name(r.algo) << ": " << r.basis_size << " polynomials, " << r.stats.matrix_count()
            << " matrices, " << r.stats.zero_reductions << " zero reductions, " << r.gb_seconds << " s\n";
  for (const auto& p : r.basis) std::cout << p << '\n';
  if (r.stats.degree_truncated) std::cout << "# degree cap exceeded; basis is incomplete\n";
  if (r.stats.certificate_stop) std::cout << "# stopped early: the basis certified with pairs left\n";
  if (r.verified) std::cout << "# verify: " << (*r.verified ? "pass" : "FAIL " + r.verify_reason) << '\n';
  if (r.precision) {
    std::cout << "# f5-stage loss: mean " << r.f5_loss.mean << ", max " << r.f5_loss.max << '\n';
    if (r.fglm_loss) std::cout << "# fglm-stage loss: mean " << r.fglm_loss->mean << ", max " << r.fglm_loss->max << '\n';
  }
  if (!r.fglm_error.empty()) std::cout << "# fglm: " << r.fglm_error << '\n';
  if (!r.lex_basis.empty()) {
    std::cout << "# lex basis\n";
    for (const auto& p : r.lex_basis) std::cout << p << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<unsigned> parse_degrees(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long d = std::stoul(item, &used);
    if (used != item.size() || d == 0) throw std::invalid_argument("bad degree '" + item + "'");
    out.push_back(static_cast<unsigned>(d));
  }
  if (out.empty()) throw std::invalid_argument("no degrees given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Gröbner bases over fields with valuation"};
  app.require_subcommand(1);

  CommonFlags compute_flags;
  std::string input;
  auto* compute = app.add_subcommand("compute", "compute a basis for a system file");
  compute->add_option("--input", input, "system file")->required();
  add_common(compute, compute_flags);

  CommonFlags bench_flags;
  std::string system = "katsura";
  unsigned n = 3;
  std::uint64_t bench_p = 0;
  std::string weights = "zero";
  std::optional<std::int64_t> bench_precision;
  auto* bench = app.add_subcommand("bench", "run a Katsura or Cyclic system");
  bench->add_option("--system", system)->check(CLI::IsMember({"katsura", "cyclic"}));
  bench->add_option("--n", n)->required();
  bench->add_option("--p", bench_p, "prime for the p-adic valuation; 0 for the trivial valuation");
  bench->add_option("--weights", weights, "zero or alt (w_i = (-2)^(i-1))")->check(CLI::IsMember({"zero", "alt"}));
  bench->add_option("--precision", bench_precision, "track precision O(p^N)");
  add_common(bench, bench_flags);

  CommonFlags random_flags;
  std::string degrees = "2,2,2";
  std::uint64_t random_p = 101;
  std::int64_t random_precision = 30;
  unsigned trials = 50;
  std::uint64_t seed = 1;
  auto* random = app.add_subcommand("random", "random p-adic systems with precision tracking");
  random->add_option("--degrees", degrees);
  random->add_option("--p", random_p);
  random->add_option("--precision", random_precision);
  random->add_option("--trials", trials);
  random->add_option("--seed", seed);
  add_common(random, random_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*compute) {
      ParsedSystem sys = parse_system(read_file(input));
      const ExperimentReport r = run_experiment(sys, to_options(compute_flags), input);
      print_report(r);
      if (!compute_flags.stats_path.empty()) write_json(compute_flags.stats_path, to_json(r));
      return exit_code(r);
    }
    if (*bench) {
      SystemSpec spec = system == "katsura" ? gen_katsura(n) : gen_cyclic(n);
      const ValuationContext ctx = bench_p == 0 ? ValuationContext::trivial() : ValuationContext::padic(bench_p);
      spec = with_field(std::move(spec), ctx, weight_preset(parse_weight_preset(weights), spec.vars.size()), bench_precision);
      ParsedSystem sys = load_system(spec);
      const ExperimentReport r = run_experiment(sys, to_options(bench_flags), system + "-" + std::to_string(n));
      const nlohmann::json j = to_json(r);
      std::cout << j.dump(2) << '\n';
      if (!bench_flags.stats_path.empty()) write_json(bench_flags.stats_path, j);
      return exit_code(r);
    }
    const std::vector<unsigned> degs = parse_degrees(degrees);
    ExperimentOptions opts = to_options(random_flags);
    std::vector<ExperimentReport> runs;
    nlohmann::json per_run = nlohmann::json::array();
    int code = kOk;
    for (unsigned t = 0; t < trials; ++t) {
      const std::uint64_t s = seed + t;
      ParsedSystem sys = load_system(gen_random_padic(degs, random_p, random_precision, s));
      runs.push_back(run_experiment(sys, opts, "random-" + std::to_string(s)));
      per_run.push_back(to_json(runs.back()));
      code = std::max(code, exit_code(runs.back()));
    }
    unsigned dsum = 0;
    for (unsigned d : degs) dsum += d;
    nlohmann::json summary = to_json(summarize(runs));
    summary["degrees"] = degs;
    summary["macaulay_bound"] = static_cast<int>(dsum) - static_cast<int>(degs.size()) + 1;
    summary["p"] = random_p;
    summary["precision"] = random_precision;
    summary["seed"] = seed;
    std::cout << summary.dump(2) << '\n';
    if (!random_flags.stats_path.empty()) write_json(random_flags.stats_path, {{"summary", summary}, {"runs", per_run}});
    return code;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
