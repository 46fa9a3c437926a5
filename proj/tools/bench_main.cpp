// Benchmark driver: runs the solvers on OR-Library-style point files and
// prints a per-instance statistics table. Optional CSV and SVG output.

#include <iostream>
#include <string>
#include <vector>

#include "mpbh/mpbh.hpp"

namespace {

constexpr const char* kUsage =
    "usage: mpbh-bench --file <points.txt> [options]\n"
    "  --nr <k>        run only the k-th instance of the file (1-based; 0 = all)\n"
    "  --d <D>         hop-diameter bound (default 10)\n"
    "  --algo <name>   vns | gls | aco | all (default all)\n"
    "  --runs <r>      runs per (instance, algorithm) (default 10)\n"
    "  --seed <s>      master seed (default 1)\n"
    "  --kmax <k>      VNS shaking strength cap (default 30)\n"
    "  --pop <p>       GLS population size (default 75)\n"
    "  --offsp <o>     GLS offspring per generation (default 40)\n"
    "  --pm <p>        GLS mutation probability (default 0.5)\n"
    "  --pls <p>       GLS local-search probability (default 0.5)\n"
    "  --colsize <c>   ACO colony size (default 50)\n"
    "  --rho <r>       ACO pheromone decay in (0,1) (default 0.2)\n"
    "  --patience <n>  stop after n stale iterations (default 3)\n"
    "  --out <path>    write per-run CSV\n"
    "  --svg <dir>     write {D}_{n}_{nr}_{algo}.svg drawings of the best trees\n";

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 1 && (args[0] == "-h" || args[0] == "--help")) {
    std::cout << kUsage;
    return 0;
  }
  try {
    const mpbh::SolverConfig cfg = mpbh::load_config(args);
    if (cfg.file.empty()) throw mpbh::ConfigError("missing --file <path>");
    const mpbh::InstanceFile file = mpbh::load_orlib_file(cfg.file);
    for (const std::string& w : file.warnings) std::cerr << "warning: " << w << "\n";

    const auto reports = mpbh::run_benchmark(cfg, file);
    std::cout << mpbh::emit_table(reports);
    if (!cfg.csv_path.empty()) mpbh::emit_csv(reports, cfg.csv_path);
    if (!cfg.svg_dir.empty()) {
      for (const auto& rep : reports) {
        const mpbh::Instance inst =
            mpbh::build_instance(file.instances[rep.nr - 1], rep.hop_bound);
        const std::string path = cfg.svg_dir + "/" + std::to_string(rep.hop_bound) + "_" +
                                 std::to_string(rep.n) + "_" + std::to_string(rep.nr) + "_" +
                                 mpbh::algo_name(rep.algo) + ".svg";
        mpbh::render_svg(rep.best_tree, inst, path);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
