#pragma once

#include <cstdint>

namespace evenflows::sweeps {

// Bulk verification kernels. Each comes in a serial variant (the reference)
// and an OpenMP variant; both walk the same deterministic index space and
// derive per-item randomness from splitmix64(seed, index), so their results
// are identical and independent of scheduling.
struct SweepResult {
  long long checked = 0;
  long long failures = 0;
};

// Closed-form even-minuscule test vs the brute-force oracle over the full
// dominant grid: coordinates 1..n-1 in {0..3}, omega_n coefficient in
// {-1,0,1}, for n_min <= n <= n_max.
SweepResult minuscule_equivalence_serial(int n_min, int n_max);
SweepResult minuscule_equivalence_parallel(int n_min, int n_max);

// Divisor-side classifier vs the per-point even-minuscule classifier on
// pseudo-random tuples (rank 2..10, up to 6 points, multiplicities up to 4).
// Also checks very stable => even very stable and the minuscule reading of
// very stability.
SweepResult classifier_equivalence_serial(long long samples, std::uint64_t seed);
SweepResult classifier_equivalence_parallel(long long samples, std::uint64_t seed);

// The four lifted-lattice facts on random nonzero nonnegative combinations
// of lifted even roots (coefficients up to 5, rank up to 10).
SweepResult lifted_lattice_serial(long long samples, std::uint64_t seed);
SweepResult lifted_lattice_parallel(long long samples, std::uint64_t seed);

// Replaying hecke_path from the zero tuple against delta_from_mu.
SweepResult hecke_replay_serial(long long samples, std::uint64_t seed);
SweepResult hecke_replay_parallel(long long samples, std::uint64_t seed);

// Rank-2 tuples: every one must be even very stable, and very stable exactly
// when delta_1 is reduced.
SweepResult rank2_classification_serial(long long samples, std::uint64_t seed);
SweepResult rank2_classification_parallel(long long samples, std::uint64_t seed);

}  // namespace evenflows::sweeps
