#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tiling/errors.hpp"
#include "tiling/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // negative finding, reported on stdout
constexpr int kExitUsage = 2;
constexpr int kExitTheorem = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tiling::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tiling::ParsedSystem load_system(const std::string& path) {
  tiling::ParsedSystem parsed = tiling::parse_system(read_file(path));
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

struct Options {
  std::string file;
  tiling::Int cell_budget = tiling::kDefaultCellBudget;
  std::int64_t budget_flag = 0;  // raw --budget value, 0 = unset
  int threads = 1;

  void apply_budget() {
    if (budget_flag > 0) cell_budget = budget_flag;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tilings of Z^d by cosets of axis-aligned sublattices: "
               "verification, generating-function identity, pole analysis, "
               "repeated-shape witnesses, and exhaustive search."};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker threads for search")
      ->check(CLI::Range(1, 4096));

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget_flag,
                    "cell/term budget override (default 100000000 cells)");
  };

  auto* verify = app.add_subcommand("verify", "check whether a system partitions Z^d");
  verify->add_option("file", opt.file, "system document")->required();
  add_budget(verify);

  auto* identity = app.add_subcommand("identity", "check the generating-function identity");
  identity->add_option("file", opt.file, "system document")->required();
  add_budget(identity);

  auto* witness = app.add_subcommand("witness", "extract the repeated maximal-shape witness");
  witness->add_option("file", opt.file, "system document")->required();
  add_budget(witness);

  auto* poles = app.add_subcommand("poles", "pole orders of the system sum at a root point");
  poles->add_option("file", opt.file, "system document")->required();
  std::string point_text;
  poles->add_option("--point", point_text, "root point k1/N1,...,kd/Nd")->required();
  bool numeric = false;
  poles->add_flag("--numeric", numeric, "add a numeric slope estimate");
  std::uint64_t pole_seed = 0;
  poles->add_option("--seed", pole_seed, "seed for probe directions");
  add_budget(poles);

  auto* search = app.add_subcommand("search", "enumerate exact covers with bounded moduli");
  tiling::SearchSpec spec;
  search->add_option("--dim", spec.d, "dimension")->required();
  search->add_option("--max-n", spec.max_n, "per-axis modulus bound")->required();
  search->add_flag("--distinct-shapes", spec.distinct_shapes_only,
                   "prune branches repeating a shape");
  search->add_flag("--exclude-trivial", spec.exclude_trivial,
                   "drop the full-lattice single-coset solution");
  int max_cosets = 0;
  search->add_option("--max-cosets", max_cosets, "bound on cosets per solution");
  double timeout = 0.0;
  search->add_option("--timeout", timeout, "seconds before reporting partial results");
  std::uint64_t search_seed = 0;
  search->add_option("--seed", search_seed, "accepted for interface uniformity");
  add_budget(search);

  auto* gen = app.add_subcommand("gen", "emit a random split cover as a system document");
  int gen_d = 1, gen_steps = 0, gen_max_factor = 3;
  std::uint64_t gen_seed = 0;
  gen->add_option("--dim", gen_d, "dimension")->required();
  gen->add_option("--steps", gen_steps, "number of splits")->required();
  gen->add_option("--seed", gen_seed, "rng seed")->required();
  gen->add_option("--max-factor", gen_max_factor, "largest split factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << tiling::error_object("usage", e.what());
    return kExitUsage;
  }
  opt.apply_budget();

  try {
    if (verify->parsed()) {
      auto parsed = load_system(opt.file);
      auto rep = tiling::verify_partition(parsed.system, opt.cell_budget);
      std::cout << tiling::report_verify(rep);
      return rep.is_partition ? kExitOk : kExitNegative;
    }
    if (identity->parsed()) {
      auto parsed = load_system(opt.file);
      const std::int64_t term_budget =
          opt.budget_flag > 0 ? opt.budget_flag : tiling::kDefaultTermBudget;
      auto S = tiling::system_sum(parsed.system, term_budget);
      bool holds = tiling::identity_check(parsed.system, term_budget);
      std::cout << tiling::report_identity(holds, S);
      return holds ? kExitOk : kExitNegative;
    }
    if (witness->parsed()) {
      auto parsed = load_system(opt.file);
      try {
        auto w = tiling::witness(parsed.system, opt.cell_budget);
        std::cout << tiling::report_witness(w, parsed.system);
        return kExitOk;
      } catch (const tiling::WitnessPrecondition& e) {
        std::cout << tiling::report_witness_precondition(e.what());
        return kExitNegative;
      }
    }
    if (poles->parsed()) {
      auto parsed = load_system(opt.file);
      auto p = tiling::parse_root_point(point_text, parsed.system.d);
      tiling::PoleProbeParams params;
      params.seed = pole_seed;
      const std::int64_t term_budget =
          opt.budget_flag > 0 ? opt.budget_flag : tiling::kDefaultTermBudget;
      auto rep = tiling::analyze_pole(parsed.system, p, numeric, params, term_budget);
      std::cout << tiling::report_poles(rep);
      return kExitOk;
    }
    if (search->parsed()) {
      if (max_cosets > 0) spec.max_cosets = max_cosets;
      if (timeout > 0) spec.timeout_seconds = timeout;
      if (opt.budget_flag > 0) spec.cell_budget = opt.budget_flag;
      spec.threads = opt.threads;
      auto result = tiling::search_exact_covers(spec);
      std::cout << tiling::report_search(spec, result);
      return kExitOk;
    }
    if (gen->parsed()) {
      auto sys = tiling::random_split_cover(gen_d, gen_steps, gen_max_factor, gen_seed);
      std::cout << tiling::emit_system(sys);
      return kExitOk;
    }
  } catch (const tiling::TheoremViolation& e) {
    std::cerr << tiling::error_object("theorem-violated", e.what());
    return kExitTheorem;
  } catch (const tiling::ParseError& e) {
    std::cerr << tiling::error_object("parse", e.what());
    return kExitUsage;
  } catch (const tiling::BudgetExceeded& e) {
    std::cerr << tiling::error_object("budget", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << tiling::error_object("input", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
