// Runs every acceptance criterion at full scale and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "skeinalg/checks/criteria.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (const char* env = std::getenv("SKEINALG_SEED")) seed = std::stoull(env);
  if (argc > 1) seed = std::stoull(argv[1]);
  const skeinalg::checks::Scale scale;

  bool all = true;
  for (const auto& check : skeinalg::checks::acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = check.run(scale, seed + static_cast<std::uint64_t>(check.id));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << check.id << ": " << check.name << " ("
              << r.instances << " instances, " << r.failures << " failures, " << secs << "s) " << r.detail << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << " (seed " << seed << ")" << std::endl;
  return all ? 0 : 1;
}
