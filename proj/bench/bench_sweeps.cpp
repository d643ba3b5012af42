// Times each sweep kernel in its serial and OpenMP flavors and checks that
// the two agree. Sizes are tuned so a run takes a few seconds; pass
// "--quick" to shrink them.

#include <omp.h>

#include <cstdio>
#include <cstring>

#include "betti/monotonicity.hpp"
#include "betti/quiver.hpp"
#include "betti/sparse_ray.hpp"

using namespace betti;

namespace {

struct Timed {
  double seconds = 0.0;
};

template <typename F>
Timed time_call(F&& f) {
  const double start = omp_get_wtime();
  f();
  return {omp_get_wtime() - start};
}

void report(const char* name, Timed serial, Timed parallel, bool equal) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              name, serial.seconds, parallel.seconds,
              parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const int max_degree = quick ? 8 : 11;
    const int n = 5, i = 2;
    SweepReport rs, rp;
    const Timed ts = time_call([&] { rs = sweep_verify(max_degree, n, i, ExecutionPolicy::serial); });
    const Timed tp = time_call([&] { rp = sweep_verify(max_degree, n, i, ExecutionPolicy::parallel); });
    std::printf("  (monotonicity: %lld pairs)\n", rs.pairs_checked);
    report("monotonicity sweep", ts, tp,
           rs.pairs_checked == rp.pairs_checked &&
               rs.counterexample == rp.counterexample);
  }

  {
    const int bound = quick ? 120 : 220;
    CongruenceSweepReport rs, rp;
    const Timed ts = time_call([&] { rs = verify_admissibility_congruences(bound, ExecutionPolicy::serial); });
    const Timed tp = time_call([&] { rp = verify_admissibility_congruences(bound, ExecutionPolicy::parallel); });
    std::printf("  (admissibility: %lld triplets)\n", rs.checked);
    report("admissibility congruence sweep", ts, tp,
           rs.checked == rp.checked && rs.mismatch == rp.mismatch);
  }

  {
    const int bound = quick ? 30 : 60;
    EnumerationReport rs, rp;
    const Timed ts = time_call([&] { rs = enumerate_members(bound, ExecutionPolicy::serial, false); });
    const Timed tp = time_call([&] { rp = enumerate_members(bound, ExecutionPolicy::parallel, false); });
    std::printf("  (enumeration: %lld admissible)\n", rs.admissible);
    report("semigroup enumeration", ts, tp,
           rs.admissible == rp.admissible && rs.members == rp.members &&
               rs.agreement() == rp.agreement());
  }

  {
    const unsigned long p = quick ? 5 : 7;
    const int window = quick ? 10 : 14;
    std::optional<SparseRayCertificate> rs, rp;
    const Timed ts = time_call([&] { rs = find_obstructed_ray(p, window, ExecutionPolicy::serial); });
    const Timed tp = time_call([&] { rp = find_obstructed_ray(p, window, ExecutionPolicy::parallel); });
    const bool equal = rs.has_value() == rp.has_value() &&
                       (!rs || (rs->diagram == rp->diagram &&
                                rs->sequences == rp->sequences));
    report("obstructed-ray search", ts, tp, equal);
  }

  return 0;
}
