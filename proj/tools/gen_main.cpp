// Writes OR-Library-format files of uniform random points in the unit
// square. The bundled data/ files were produced with this tool.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mpbh/orlib.hpp"

int main(int argc, char** argv) {
  int n = 50;
  int count = 15;
  std::uint64_t seed_base = 0;  // 0 derives 1000 * n + nr
  std::string out;
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto value = [&]() -> const std::string& {
        if (i + 1 >= args.size()) throw std::runtime_error("missing value after " + args[i]);
        return args[++i];
      };
      if (args[i] == "--n") n = std::stoi(value());
      else if (args[i] == "--count") count = std::stoi(value());
      else if (args[i] == "--seed") seed_base = std::stoull(value());
      else if (args[i] == "--out") out = value();
      else throw std::runtime_error("unknown flag: " + args[i]);
    }
    if (n < 2 || count < 1 || out.empty())
      throw std::runtime_error("usage: mpbh-gen --n <points> --count <instances> --out <path> [--seed <base>]");

    mpbh::InstanceFile file;
    for (int nr = 1; nr <= count; ++nr) {
      const std::uint64_t seed =
          seed_base == 0 ? 1000ULL * n + nr : seed_base + static_cast<std::uint64_t>(nr);
      file.instances.push_back(mpbh::generate_uniform(n, seed));
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << mpbh::serialize_orlib(file);
    std::cout << "wrote " << count << " instance(s) of " << n << " points to " << out << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
