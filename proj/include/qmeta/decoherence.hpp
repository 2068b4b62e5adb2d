#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/semantics.hpp"

namespace qmeta {

/// Counter-based splitmix64 stream: draw k of seed s mixes the word
/// s + (k+1) * 0x9E3779B97F4A7C15, so identical (seed, counter) pairs yield
/// identical draws on every platform and disjoint counter ranges can be
/// drawn independently.
///
/// Test vector (seed 0, counters 0,1,2):
///   0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  /// The draw at an absolute counter position, without any stream state.
  static std::uint64_t bits_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// bits_at mapped to [0,1) with 53 significant bits.
  static double unit_at(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(bits_at(seed, counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_bits() { return bits_at(seed_, counter_++); }
  double next_unit() { return unit_at(seed_, counter_++); }

private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// The classical mode a measurement leaves behind: the chosen basis atom,
/// asserted with degree exactly 1, plus the Born probability of the choice.
struct MeasurementOutcome {
  std::size_t index;
  std::string atom;
  Assertion collapsed;
  TruthValue probability;  // squared modulus of the chosen amplitude
};

/// Projective measurement: collapses the state to basis index i with
/// probability |amplitude_i|^2, consuming exactly one draw. Sampling inverts
/// the cumulative profile; a draw equal to a boundary resolves to the lower
/// index, and zero-probability bins are never chosen.
inline MeasurementOutcome measure(const QubitState& state, RandomStream& rng) {
  const double u = rng.next_unit();
  const std::vector<Complex>& amps = state.amplitudes();
  std::size_t chosen = amps.size();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = squared_modulus(amps[i]);
    if (p == 0.0) continue;
    cumulative += p;
    chosen = i;
    if (u <= cumulative) break;
  }
  // chosen already holds the last nonzero bin if rounding left u beyond the
  // total mass; a valid state has mass within tolerance of 1, so one exists.
  const std::string& atom = state.basis().at(chosen);
  return MeasurementOutcome{chosen, atom,
                            Assertion::classical(Prop::atom(atom)),
                            TruthValue(squared_modulus(amps[chosen]))};
}

struct MeasurementRecord {
  std::string atom;
  std::uint64_t count;
  double frequency;  // count / trials
  double expected;   // squared amplitude modulus
};

struct MeasurementStatistics {
  std::uint64_t seed;
  std::uint64_t trials;
  std::vector<MeasurementRecord> records;  // one per basis atom, basis order
};

/// Repeated measurement of the same state: trial t consumes the draw at
/// counter t of the seed's stream, so any split of the trial range into
/// disjoint chunks reproduces the same counts. Counts sum to trials.
inline MeasurementStatistics measure_statistics(const QubitState& state,
                                                std::uint64_t trials,
                                                std::uint64_t seed) {
  if (trials < 1)
    throw ArityError("measurement statistics need at least 1 trial");
  std::vector<std::uint64_t> counts(state.basis().size(), 0);
  RandomStream rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t)
    ++counts[measure(state, rng).index];
  MeasurementStatistics stats{seed, trials, {}};
  stats.records.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    stats.records.push_back(MeasurementRecord{
        state.basis().at(i), counts[i],
        static_cast<double>(counts[i]) / static_cast<double>(trials),
        squared_modulus(state.amplitudes()[i])});
  return stats;
}

}  // namespace qmeta
