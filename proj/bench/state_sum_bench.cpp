// Times the serial and OpenMP state sums against the compositional evaluator.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "skeinalg/skein/state_sum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using skeinalg::LaurentPoly;
using namespace skeinalg::skein;

namespace {

template <typename Fn>
double seconds(Fn&& fn, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

BraidWord torus_word(int strands, int twists) {
  BraidWord w;
  for (int t = 0; t < twists; ++t)
    for (int g = 1; g < strands; ++g) w.push_back(g);
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_crossings = argc > 1 ? std::atoi(argv[1]) : 20;
#ifdef _OPENMP
  std::cout << "threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP\n";
#endif
  std::cout << "crossings  serial_s  parallel_s  speedup  compositional_s  agree\n";
  for (int c = 8; c <= max_crossings; c += 4) {
    const SliceTangle t = braid_closure(torus_word(3, c / 2), 3);
    const int repeats = c <= 12 ? 20 : 1;
    LaurentPoly serial;
    LaurentPoly parallel;
    LaurentPoly direct;
    const double ts = seconds([&] { serial = bracket_state_sum_serial(t); }, repeats);
    const double tp = seconds([&] { parallel = bracket_state_sum_parallel(t); }, repeats);
    const double td = seconds([&] { direct = kauffman_bracket(t); }, repeats);
    std::cout << c << "  " << ts << "  " << tp << "  " << ts / tp << "  " << td << "  "
              << (serial == parallel && serial == direct ? "yes" : "NO") << "\n";
    if (serial != parallel || serial != direct) return 1;
  }
  return 0;
}
