#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpbh {

enum class Algo { ACO, GLS, VNS, ALL };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::ACO: return "ACO";
    case Algo::GLS: return "GLS";
    case Algo::VNS: return "VNS";
    default: return "ALL";
  }
}

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Benchmark configuration. Algorithm parameters default to the tuned values
// used for the bundled benchmark sweeps.
struct SolverConfig {
  std::string file;
  int nr = 0;  // 1-based instance filter; 0 runs every instance in the file
  int hop_bound = 10;
  Algo algo = Algo::ALL;
  int runs = 10;
  std::uint64_t seed = 1;
  int patience = 3;
  int k_max = 30;
  int population_size = 75;
  int offspring_size = 40;
  double mutation_probability = 0.5;
  double local_search_probability = 0.5;
  int colony_size = 50;
  double rho = 0.2;
  std::string csv_path;  // --out
  std::string svg_dir;   // --svg
};

namespace detail {

inline double config_double(const std::string& flag, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size())
    throw ConfigError("invalid number for " + flag + ": '" + value + "'");
  return v;
}

inline int config_int(const std::string& flag, const std::string& value) {
  const double v = config_double(flag, value);
  if (v != static_cast<int>(v)) throw ConfigError("expected an integer for " + flag);
  return static_cast<int>(v);
}

inline std::uint64_t config_u64(const std::string& flag, const std::string& value) {
  const double v = config_double(flag, value);
  if (v < 0 || v != static_cast<std::uint64_t>(v))
    throw ConfigError("expected a non-negative integer for " + flag);
  return static_cast<std::uint64_t>(v);
}

inline Algo config_algo(const std::string& value) {
  std::string low;
  for (char c : value) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "vns") return Algo::VNS;
  if (low == "gls") return Algo::GLS;
  if (low == "aco") return Algo::ACO;
  if (low == "all") return Algo::ALL;
  throw ConfigError("unknown algorithm '" + value + "' (expected vns, gls, aco or all)");
}

}  // namespace detail

inline SolverConfig load_config(const std::vector<std::string>& args) {
  SolverConfig cfg;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& flag = args[i];
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw ConfigError("missing value after " + flag);
      return args[++i];
    };
    if (flag == "--file") cfg.file = value();
    else if (flag == "--nr") cfg.nr = detail::config_int(flag, value());
    else if (flag == "--d") cfg.hop_bound = detail::config_int(flag, value());
    else if (flag == "--algo") cfg.algo = detail::config_algo(value());
    else if (flag == "--runs") cfg.runs = detail::config_int(flag, value());
    else if (flag == "--seed") cfg.seed = detail::config_u64(flag, value());
    else if (flag == "--kmax") cfg.k_max = detail::config_int(flag, value());
    else if (flag == "--pop") cfg.population_size = detail::config_int(flag, value());
    else if (flag == "--offsp") cfg.offspring_size = detail::config_int(flag, value());
    else if (flag == "--pm") cfg.mutation_probability = detail::config_double(flag, value());
    else if (flag == "--pls") cfg.local_search_probability = detail::config_double(flag, value());
    else if (flag == "--colsize") cfg.colony_size = detail::config_int(flag, value());
    else if (flag == "--rho") cfg.rho = detail::config_double(flag, value());
    else if (flag == "--patience") cfg.patience = detail::config_int(flag, value());
    else if (flag == "--out") cfg.csv_path = value();
    else if (flag == "--svg") cfg.svg_dir = value();
    else throw ConfigError("unknown flag: " + flag);
  }
  if (cfg.nr < 0) throw ConfigError("--nr must be >= 0");
  if (cfg.hop_bound < 1) throw ConfigError("--d must be >= 1");
  if (cfg.runs < 1) throw ConfigError("--runs must be >= 1");
  if (cfg.patience < 1) throw ConfigError("--patience must be >= 1");
  if (cfg.k_max < 1) throw ConfigError("--kmax must be >= 1");
  if (cfg.population_size < 1) throw ConfigError("--pop must be >= 1");
  if (cfg.offspring_size < 1) throw ConfigError("--offsp must be >= 1");
  if (cfg.colony_size < 1) throw ConfigError("--colsize must be >= 1");
  if (cfg.mutation_probability < 0.0 || cfg.mutation_probability > 1.0)
    throw ConfigError("--pm must lie in [0, 1]");
  if (cfg.local_search_probability < 0.0 || cfg.local_search_probability > 1.0)
    throw ConfigError("--pls must lie in [0, 1]");
  if (!(cfg.rho > 0.0 && cfg.rho < 1.0)) throw ConfigError("--rho must lie in (0, 1)");
  return cfg;
}

}  // namespace mpbh
