// Times the serial reference sweeps against their OpenMP counterparts and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "evenflows/sweeps.hpp"

namespace {

using evenflows::sweeps::SweepResult;

double seconds(const std::function<SweepResult()>& fn, SweepResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

int compare(const std::string& name, const std::function<SweepResult()>& serial,
            const std::function<SweepResult()>& parallel) {
  SweepResult rs, rp;
  const double ts = seconds(serial, rs);
  const double tp = seconds(parallel, rp);
  const bool same = rs.checked == rp.checked && rs.failures == rp.failures;
  std::printf("%-28s %10lld items  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name.c_str(), rs.checked, ts, tp, tp > 0 ? ts / tp : 0.0,
              same && rs.failures == 0 ? "ok" : (same ? "FAILURES" : "MISMATCH"));
  return same && rs.failures == 0 ? 0 : 1;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run serially\n");
#endif
  namespace sw = evenflows::sweeps;
  int bad = 0;
  bad += compare(
      "minuscule equivalence n<=7", [] { return sw::minuscule_equivalence_serial(2, 7); },
      [] { return sw::minuscule_equivalence_parallel(2, 7); });
  bad += compare(
      "classifier equivalence", [] { return sw::classifier_equivalence_serial(20000, 1); },
      [] { return sw::classifier_equivalence_parallel(20000, 1); });
  bad += compare(
      "lifted lattice facts", [] { return sw::lifted_lattice_serial(50000, 2); },
      [] { return sw::lifted_lattice_parallel(50000, 2); });
  bad += compare(
      "hecke replay", [] { return sw::hecke_replay_serial(5000, 3); },
      [] { return sw::hecke_replay_parallel(5000, 3); });
  return bad == 0 ? 0 : 1;
}
