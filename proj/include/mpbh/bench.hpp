#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpbh/aco.hpp"
#include "mpbh/config.hpp"
#include "mpbh/constructive.hpp"
#include "mpbh/gls.hpp"
#include "mpbh/orlib.hpp"
#include "mpbh/vns.hpp"

namespace mpbh {

struct RunRecord {
  std::uint64_t seed = 0;
  double w = 0.0;
  double seconds = 0.0;
};

// Per-(instance, algorithm) statistics over repeated seeded runs. w_sd is the
// population standard deviation.
struct RunReport {
  int hop_bound = 0;
  int n = 0;
  int nr = 0;
  Algo algo = Algo::VNS;
  double w_initial = 0.0;
  double w_best = 0.0;
  double w_avg = 0.0;
  double w_sd = 0.0;
  double time_avg = 0.0;
  std::vector<RunRecord> runs;
  BoundedTree best_tree;
};

// Shared initial tree: one greedy construction plus nine randomized draws.
inline constexpr int kInitialAttempts = 10;

namespace detail {

inline BoundedTree run_algo(Algo a, const Instance& inst, const BoundedTree& t0,
                            const SolverConfig& cfg, Rng& rng) {
  StopTracker tracker(cfg.patience);
  switch (a) {
    case Algo::VNS:
      return vns(inst, t0, cfg.k_max, rng, tracker);
    case Algo::GLS:
      return gls(inst, {t0},
                 GlsParams{cfg.population_size, cfg.offspring_size,
                           cfg.mutation_probability, cfg.local_search_probability},
                 rng, tracker);
    default:
      return aco(inst, t0, AcoParams{cfg.colony_size, cfg.rho}, rng, tracker);
  }
}

}  // namespace detail

// Runs each selected (instance, algorithm) cell `runs` times from a shared
// best_initial tree; per-run seeds are master seed + 1-based run index, so
// everything except wall time is a pure function of (file, config, seed).
inline std::vector<RunReport> run_benchmark(const SolverConfig& cfg,
                                            const InstanceFile& file) {
  std::vector<int> selected;
  if (cfg.nr == 0) {
    for (int i = 0; i < file.count(); ++i) selected.push_back(i);
  } else {
    if (cfg.nr > file.count()) throw std::out_of_range("instance nr out of range");
    selected.push_back(cfg.nr - 1);
  }
  const std::vector<Algo> algos = cfg.algo == Algo::ALL
                                      ? std::vector<Algo>{Algo::ACO, Algo::GLS, Algo::VNS}
                                      : std::vector<Algo>{cfg.algo};

  std::vector<RunReport> reports;
  for (int idx : selected) {
    const Instance inst = build_instance(file.instances[idx], cfg.hop_bound);
    Rng init_rng = make_rng(cfg.seed);
    const BoundedTree t0 = best_initial(inst, kInitialAttempts, init_rng);
    for (Algo a : algos) {
      RunReport rep;
      rep.hop_bound = cfg.hop_bound;
      rep.n = inst.size();
      rep.nr = idx + 1;
      rep.algo = a;
      rep.w_initial = t0.objective;
      double sum = 0.0, time_sum = 0.0;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 1; r <= cfg.runs; ++r) {
        Rng rng = make_rng(cfg.seed + static_cast<std::uint64_t>(r));
        const auto start = std::chrono::steady_clock::now();
        BoundedTree result = detail::run_algo(a, inst, t0, cfg, rng);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.runs.push_back({cfg.seed + static_cast<std::uint64_t>(r), result.objective, secs});
        sum += result.objective;
        time_sum += secs;
        if (result.objective < best) {
          best = result.objective;
          rep.best_tree = std::move(result);
        }
      }
      rep.w_best = best;
      rep.w_avg = sum / cfg.runs;
      double ss = 0.0;
      for (const RunRecord& rec : rep.runs) ss += (rec.w - rep.w_avg) * (rec.w - rep.w_avg);
      rep.w_sd = std::sqrt(ss / cfg.runs);
      rep.time_avg = time_sum / cfg.runs;
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

// Aligned text table, one row per instance: D, n, nr, the shared initial
// objective, then per-algorithm W_best / W_av / W_sd / time columns. The best
// W_best in a row carries a leading '*'. Values print at 2 decimals.
inline std::string emit_table(const std::vector<RunReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("no reports to print");

  struct Row {
    int d, n, nr;
    double w_initial;
    std::map<Algo, const RunReport*> cells;
  };
  std::vector<Row> rows;
  std::vector<Algo> algos;
  for (const RunReport& r : reports) {
    Row* row = nullptr;
    for (Row& existing : rows) {
      if (existing.d == r.hop_bound && existing.n == r.n && existing.nr == r.nr) {
        row = &existing;
        break;
      }
    }
    if (!row) {
      rows.push_back({r.hop_bound, r.n, r.nr, r.w_initial, {}});
      row = &rows.back();
    }
    row->cells[r.algo] = &r;
    if (std::find(algos.begin(), algos.end(), r.algo) == algos.end())
      algos.push_back(r.algo);
  }

  std::vector<std::string> header = {"D", "n", "nr", "W_CH"};
  const char* metrics[4] = {"W_best", "W_av", "W_sd", "time_s"};
  for (const char* metric : metrics) {
    for (Algo a : algos) header.push_back(std::string(algo_name(a)) + ":" + metric);
  }

  std::vector<std::vector<std::string>> body;
  for (const Row& row : rows) {
    std::vector<std::string> cells = {std::to_string(row.d), std::to_string(row.n),
                                      std::to_string(row.nr), detail::fixed2(row.w_initial)};
    double best = std::numeric_limits<double>::infinity();
    for (Algo a : algos) {
      const auto it = row.cells.find(a);
      if (it != row.cells.end() && it->second->w_best < best) best = it->second->w_best;
    }
    for (int m = 0; m < 4; ++m) {
      for (Algo a : algos) {
        const auto it = row.cells.find(a);
        if (it == row.cells.end()) {
          cells.push_back("-");
          continue;
        }
        const RunReport& rep = *it->second;
        const double v = m == 0 ? rep.w_best : m == 1 ? rep.w_avg : m == 2 ? rep.w_sd : rep.time_avg;
        std::string cell = detail::fixed2(v);
        if (m == 0 && rep.w_best == best) cell = "*" + cell;
        cells.push_back(std::move(cell));
      }
    }
    body.push_back(std::move(cells));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& cells : body) width[c] = std::max(width[c], cells[c].size());
  }
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += std::string(width[c] - cells[c].size(), ' ') + cells[c];
      out += c + 1 == cells.size() ? "\n" : "  ";
    }
  };
  emit_row(header);
  for (const auto& cells : body) emit_row(cells);
  return out;
}

// One row per run plus three aggregate rows (seed column best/avg/sd) per
// (instance, algorithm). W keeps full precision; time is omitted on the
// best/sd aggregates.
inline std::string emit_csv(const std::vector<RunReport>& reports) {
  std::string out =
      "# aggregate rows carry best/avg/sd in the seed column; sd is the population "
      "standard deviation\n";
  out += "D,n,nr,algo,seed,W,time_s\n";
  for (const RunReport& rep : reports) {
    const std::string prefix = std::to_string(rep.hop_bound) + "," + std::to_string(rep.n) +
                               "," + std::to_string(rep.nr) + "," +
                               detail::csv_field(algo_name(rep.algo)) + ",";
    for (const RunRecord& rec : rep.runs) {
      out += prefix + std::to_string(rec.seed) + "," + format_double(rec.w) + "," +
             format_double(rec.seconds) + "\n";
    }
    out += prefix + "best," + format_double(rep.w_best) + ",\n";
    out += prefix + "avg," + format_double(rep.w_avg) + "," + format_double(rep.time_avg) + "\n";
    out += prefix + "sd," + format_double(rep.w_sd) + ",\n";
  }
  return out;
}

inline void emit_csv(const std::vector<RunReport>& reports, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << emit_csv(reports);
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace mpbh
