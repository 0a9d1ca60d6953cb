// Timing harness for the enumeration kernels: the serial reference loop
// against the OpenMP block scan, on full-table queries and on the batch
// pairwise comparison workload. Results are checked for agreement while
// timing, so a mismatch aborts the run.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conatus/intensity.hpp"
#include "conatus/parser.hpp"
#include "conatus/semantics.hpp"

using namespace conatus;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Tautology pair over n atoms: equivalent(taut1, taut2) must scan every one
// of the 2^n rows twice, which is the worst case for the kernel.
Formula tautology_a(int n) {
  Formula f = Formula::disj(Formula::atom("a0"), Formula::negate(Formula::atom("a0")));
  for (int i = 1; i < n; ++i) {
    const Formula x = Formula::atom("a" + std::to_string(i));
    f = Formula::conj(f, Formula::disj(x, Formula::negate(x)));
  }
  return f;
}

Formula tautology_b(int n) {
  // !(a0 & ... & a(n-1) & !a0): unsatisfiable conjunction, negated
  Formula all = Formula::atom("a0");
  for (int i = 1; i < n; ++i) all = Formula::conj(all, Formula::atom("a" + std::to_string(i)));
  return Formula::negate(Formula::conj(all, Formula::negate(Formula::atom("a0"))));
}

// Unsatisfiable formula whose refutation needs the full table.
Formula unsat(int n) {
  Formula any = Formula::atom("a0");
  for (int i = 1; i < n; ++i) any = Formula::disj(any, Formula::atom("a" + std::to_string(i)));
  Formula f = any;
  for (int i = 0; i < n; ++i) {
    f = Formula::conj(f, Formula::negate(Formula::atom("a" + std::to_string(i))));
  }
  return f;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %12.2f %12.2f %10.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int atoms = 20;
  if (argc > 1) atoms = std::atoi(argv[1]);
  if (atoms < 8 || atoms > 24) {
    std::fprintf(stderr, "usage: conatus_bench [atoms in 8..24]\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("threads: %d, atoms: %d (%lld rows)\n", omp_get_max_threads(), atoms,
              1LL << atoms);
#else
  std::printf("threads: 1 (OpenMP disabled), atoms: %d\n", atoms);
#endif
  std::printf("%-28s %12s %12s %10s\n", "workload", "serial ms", "parallel ms", "speedup");

  const EnumOptions serial{static_cast<std::size_t>(atoms), EnumMode::Serial};
  const EnumOptions parallel{static_cast<std::size_t>(atoms), EnumMode::Parallel};

  {
    const Formula a = tautology_a(atoms);
    const Formula b = tautology_b(atoms);
    bool rs = false;
    bool rp = false;
    const double ms_serial = time_ms([&] { rs = equivalent(a, b, serial); });
    const double ms_parallel = time_ms([&] { rp = equivalent(a, b, parallel); });
    if (!rs || rs != rp) {
      std::fprintf(stderr, "kernel disagreement on equivalence\n");
      return 1;
    }
    row("equivalent (full scan x2)", ms_serial, ms_parallel);
  }

  {
    const Formula f = unsat(atoms);
    bool rs = true;
    bool rp = true;
    const double ms_serial = time_ms([&] { rs = satisfiable(f, serial); });
    const double ms_parallel = time_ms([&] { rp = satisfiable(f, parallel); });
    if (rs || rp) {
      std::fprintf(stderr, "kernel disagreement on satisfiability\n");
      return 1;
    }
    row("satisfiable (unsat input)", ms_serial, ms_parallel);
  }

  {
    // Batch workload: all-pairs comparison over a pool of small conditions.
    std::vector<ActionTendency> pool;
    const char* conditions[] = {"p", "q", "r", "p & q", "p | q", "!p", "p -> q", "q & r",
                                "p & q & r", "p | q | r", "!(p & q)", "p -> (q -> r)"};
    for (const char* c : conditions) {
      pool.push_back(ActionTendency{c, "act", parse_formula(c), TendencyKind::Emotion, false});
    }
    const int repeats = 400;
    long strict_serial = 0;
    long strict_parallel = 0;
    const double ms_serial = time_ms([&] {
      for (int rep = 0; rep < repeats; ++rep) {
        for (const auto& x : pool) {
          for (const auto& y : pool) {
            if (compare(x, y, serial).verdict == Verdict::Stronger) ++strict_serial;
          }
        }
      }
    });
    const double ms_parallel = time_ms([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : strict_parallel)
#endif
      for (int rep = 0; rep < repeats; ++rep) {
        for (const auto& x : pool) {
          for (const auto& y : pool) {
            if (compare(x, y, serial).verdict == Verdict::Stronger) ++strict_parallel;
          }
        }
      }
    });
    if (strict_serial != strict_parallel) {
      std::fprintf(stderr, "kernel disagreement on batch comparison\n");
      return 1;
    }
    row("all-pairs compare batch", ms_serial, ms_parallel);
  }

  return 0;
}
