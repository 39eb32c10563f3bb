#include "evenflows/sweeps.hpp"

#include <vector>

#include "evenflows/higgs.hpp"
#include "evenflows/weights.hpp"

namespace evenflows::sweeps {

namespace {

using higgs::DivisorTuple;
using higgs::WeightMap;
using weights::DominantWeight;

// Small deterministic generator, seeded per item so that serial and parallel
// sweeps agree exactly.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

constexpr const char* kPoints[6] = {"p0", "p1", "p2", "p3", "p4", "p5"};

// ---- even-minuscule grid ---------------------------------------------------

long long grid_size(int n) {
  long long s = 3;
  for (int i = 0; i < n - 1; ++i) s *= 4;
  return s;
}

DominantWeight decode_grid_weight(int n, long long index) {
  std::vector<long long> coords(static_cast<size_t>(n));
  coords[static_cast<size_t>(n - 1)] = index % 3 - 1;
  index /= 3;
  for (int i = 0; i < n - 1; ++i) {
    coords[static_cast<size_t>(i)] = index % 4;
    index /= 4;
  }
  return DominantWeight(n, std::move(coords));
}

bool minuscule_item_ok(int n, long long index) {
  const DominantWeight lambda = decode_grid_weight(n, index);
  return weights::is_even_minuscule(lambda) ==
         weights::is_even_minuscule_oracle(lambda, weights::default_oracle_bound(lambda));
}

// ---- random instances -------------------------------------------------------

DivisorTuple random_tuple(Rng& rng, int n) {
  higgs::Divisor d0;
  std::vector<higgs::Divisor> mid(static_cast<size_t>(n - 1));
  const int npts = static_cast<int>(rng.range(0, 6));
  for (int t = 0; t < npts; ++t) {
    const char* c = kPoints[rng.range(0, 5)];
    if (rng.range(0, 1) == 0) {
      long long m = rng.range(-4, 4);
      if (m != 0) d0.add(c, m - d0.at(c));  // set, not accumulate
    }
    const int hits = static_cast<int>(rng.range(0, 3));
    for (int h = 0; h < hits; ++h) {
      int i = static_cast<int>(rng.range(1, n - 1));
      auto& div = mid[static_cast<size_t>(i - 1)];
      long long cur = div.at(c);
      long long target = rng.range(1, 4);
      if (target != cur) div.add(c, target - cur);
    }
  }
  return DivisorTuple(n, std::move(d0), std::move(mid));
}

bool classifier_item_ok(std::uint64_t item_seed) {
  Rng rng(item_seed);
  const int n = static_cast<int>(rng.range(2, 10));
  const DivisorTuple delta = random_tuple(rng, n);
  const auto rep = higgs::classify(delta);
  if (rep.even_very_stable != rep.witnesses.empty()) return false;
  if (rep.even_very_stable != higgs::classify_via_weights(delta)) return false;
  if (rep.very_stable && !rep.even_very_stable) return false;
  const auto mu = higgs::mu_from_delta(delta);
  if (!(higgs::delta_from_mu(mu) == delta)) return false;  // dictionary round trip
  if (!(higgs::mu_from_delta(higgs::delta_from_mu(mu)) == mu)) return false;
  // Very stability is the all-minuscule condition for the ordinary order.
  bool all_minuscule = true;
  for (const auto& [c, w] : mu.assignments) all_minuscule &= weights::is_minuscule(w);
  return rep.very_stable == all_minuscule;
}

bool lifted_lattice_item_ok(std::uint64_t item_seed) {
  Rng rng(item_seed);
  const int n = static_cast<int>(rng.range(3, 10));
  const auto roots = weights::even_positive_roots(n);
  std::vector<long long> x(static_cast<size_t>(n + 1), 0);
  const int picks = static_cast<int>(rng.range(1, 4));
  for (int t = 0; t < picks; ++t) {
    const auto idx = roots[static_cast<size_t>(rng.range(0, static_cast<long long>(roots.size()) - 1))];
    const long long coeff = rng.range(1, 5);
    const auto lifted = weights::lifted_root_coords(idx, n);
    for (size_t i = 0; i < x.size(); ++i) x[i] += coeff * lifted.coords[i];
  }

  if (x[0] > 0 || x[static_cast<size_t>(n)] > 0) return false;  // (1)
  long long all = 0, even_sum = 0, odd_sum = 0;
  for (size_t j = 0; j < x.size(); ++j) {
    all += x[j];
    (j % 2 == 0 ? even_sum : odd_sum) += x[j];
  }
  if (all != 0 || even_sum != 0 || odd_sum != 0) return false;  // (2)
  long long mid = 0;
  for (int j = 2; j <= n - 2; ++j) mid += x[static_cast<size_t>(j)];
  if (mid < 0) return false;  // (3)
  int first = -1, last = -1;
  for (int j = 0; j <= n; ++j)
    if (x[static_cast<size_t>(j)] != 0) {
      if (first < 0) first = j;
      last = j;
    }
  if (first < 0) return false;  // combinations here are nonzero by construction
  return x[static_cast<size_t>(first)] < 0 && x[static_cast<size_t>(last)] < 0;  // (4)
}

bool hecke_item_ok(std::uint64_t item_seed) {
  Rng rng(item_seed);
  const int n = static_cast<int>(rng.range(2, 8));
  std::map<higgs::PointLabel, DominantWeight> assignments;
  const int npts = static_cast<int>(rng.range(0, 5));
  for (int t = 0; t < npts; ++t) {
    std::vector<long long> coords(static_cast<size_t>(n), 0);
    for (int i = 0; i < n - 1; ++i) coords[static_cast<size_t>(i)] = rng.range(0, 1) ? rng.range(1, 3) : 0;
    coords[static_cast<size_t>(n - 1)] = rng.range(0, 3);
    assignments.insert_or_assign(kPoints[rng.range(0, 5)], DominantWeight(n, std::move(coords)));
  }
  const WeightMap mu(n, std::move(assignments));
  DivisorTuple acc = DivisorTuple::zero(n);
  for (const auto& op : higgs::hecke_path(mu)) acc = higgs::apply_hecke(acc, op);
  return acc == higgs::delta_from_mu(mu);
}

bool rank2_item_ok(std::uint64_t item_seed) {
  Rng rng(item_seed);
  const DivisorTuple delta = random_tuple(rng, 2);
  const auto rep = higgs::classify(delta);
  if (!rep.even_very_stable) return false;
  bool reduced = true;
  for (const auto& [c, m] : delta.delta(1).support) reduced &= (m <= 1);
  return rep.very_stable == reduced;
}

template <typename ItemOk>
SweepResult run_serial(long long total, ItemOk&& ok) {
  SweepResult r;
  r.checked = total;
  for (long long i = 0; i < total; ++i)
    if (!ok(i)) ++r.failures;
  return r;
}

template <typename ItemOk>
SweepResult run_parallel(long long total, ItemOk&& ok) {
  SweepResult r;
  r.checked = total;
  long long failures = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
  for (long long i = 0; i < total; ++i)
    if (!ok(i)) ++failures;
  r.failures = failures;
  return r;
}

std::uint64_t mix(std::uint64_t seed, long long i) {
  Rng r(seed ^ (0x517cc1b727220a95ULL * static_cast<std::uint64_t>(i + 1)));
  return r.next();
}

struct GridIndex {
  std::vector<int> ns;
  std::vector<long long> offsets;  // size ns.size()+1
};

GridIndex build_grid(int n_min, int n_max) {
  GridIndex g;
  g.offsets.push_back(0);
  for (int n = n_min; n <= n_max; ++n) {
    g.ns.push_back(n);
    g.offsets.push_back(g.offsets.back() + grid_size(n));
  }
  return g;
}

bool grid_item_ok(const GridIndex& g, long long i) {
  size_t lo = 0;
  while (g.offsets[lo + 1] <= i) ++lo;
  return minuscule_item_ok(g.ns[lo], i - g.offsets[lo]);
}

}  // namespace

SweepResult minuscule_equivalence_serial(int n_min, int n_max) {
  const GridIndex g = build_grid(n_min, n_max);
  return run_serial(g.offsets.back(), [&](long long i) { return grid_item_ok(g, i); });
}

SweepResult minuscule_equivalence_parallel(int n_min, int n_max) {
  const GridIndex g = build_grid(n_min, n_max);
  return run_parallel(g.offsets.back(), [&](long long i) { return grid_item_ok(g, i); });
}

SweepResult classifier_equivalence_serial(long long samples, std::uint64_t seed) {
  return run_serial(samples, [&](long long i) { return classifier_item_ok(mix(seed, i)); });
}

SweepResult classifier_equivalence_parallel(long long samples, std::uint64_t seed) {
  return run_parallel(samples, [&](long long i) { return classifier_item_ok(mix(seed, i)); });
}

SweepResult lifted_lattice_serial(long long samples, std::uint64_t seed) {
  return run_serial(samples, [&](long long i) { return lifted_lattice_item_ok(mix(seed, i)); });
}

SweepResult lifted_lattice_parallel(long long samples, std::uint64_t seed) {
  return run_parallel(samples, [&](long long i) { return lifted_lattice_item_ok(mix(seed, i)); });
}

SweepResult hecke_replay_serial(long long samples, std::uint64_t seed) {
  return run_serial(samples, [&](long long i) { return hecke_item_ok(mix(seed, i)); });
}

SweepResult hecke_replay_parallel(long long samples, std::uint64_t seed) {
  return run_parallel(samples, [&](long long i) { return hecke_item_ok(mix(seed, i)); });
}

SweepResult rank2_classification_serial(long long samples, std::uint64_t seed) {
  return run_serial(samples, [&](long long i) { return rank2_item_ok(mix(seed, i)); });
}

SweepResult rank2_classification_parallel(long long samples, std::uint64_t seed) {
  return run_parallel(samples, [&](long long i) { return rank2_item_ok(mix(seed, i)); });
}

}  // namespace evenflows::sweeps
