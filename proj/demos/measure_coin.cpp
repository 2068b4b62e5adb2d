// Builds a biased two-outcome state, collapses it a few times, then
// estimates the outcome probabilities from a long deterministic run.
//
// usage: measure_coin [seed]

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "qmeta/qmeta.hpp"

int main(int argc, char** argv) {
  using namespace qmeta;
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2026;

  QubitState coin(Basis({"heads", "tails"}),
                  {Complex(std::sqrt(0.3), 0.0), Complex(std::sqrt(0.7), 0.0)});

  RandomStream rng(seed);
  for (int i = 0; i < 5; ++i) {
    MeasurementOutcome out = measure(coin, rng);
    std::cout << "collapse " << i + 1 << ": " << to_text(out.collapsed)
              << "\n";
  }

  MeasurementStatistics stats = measure_statistics(coin, 100000, seed);
  std::cout << "after " << stats.trials << " trials with seed " << stats.seed
            << ":\n";
  for (const MeasurementRecord& r : stats.records)
    std::cout << "  " << r.atom << "  " << r.count << "  frequency "
              << to_text_sig12(r.frequency) << "  expected "
              << to_text_sig12(r.expected) << "\n";
  return 0;
}
