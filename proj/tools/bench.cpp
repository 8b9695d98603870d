// Benchmark of the enumeration kernels: the serial reference loop vs the
// OpenMP partitioned sweep, on the same seeded corpus, with a checksum
// comparison proving both modes compute identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "bilat/generator.hpp"
#include "bilat/semantics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace bilat;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SweepResult {
  std::uint64_t checksum = 0;
  double seconds = 0;
};

// Full classification sweep over 4^n: cl-model filter, then support,
// stability and the unfounded view per surviving row.
SweepResult classify_sweep(const std::vector<GroundProgram<four::Value>>& corpus,
                           ExecMode mode) {
  auto start = Clock::now();
  std::uint64_t checksum = 1469598103934665603ull;
  for (const auto& g : corpus) {
    ClassifyOptions opt;
    opt.mode = mode;
    opt.limit = g.size();
    auto report = classify(g, opt);
    for (const auto& mc : report.rows) {
      checksum ^= four_index_of(mc.interpretation) * 1099511628211ull;
      checksum ^= four_index_of(mc.support) + mc.flags.is_stable;
    }
    checksum ^= four_index_of(report.wf);
  }
  return {checksum, seconds_since(start)};
}

// Brute-force support oracle: the sweep over interpretation points is the
// partitioned dimension; each point's 2^n candidate join runs inline.
SweepResult oracle_sweep(const std::vector<GroundProgram<four::Value>>& corpus,
                         ExecMode mode) {
  auto start = Clock::now();
  std::uint64_t checksum = 1469598103934665603ull;
  for (const auto& g : corpus) {
    constexpr std::uint64_t stride = 16;
    std::uint64_t points = four_space_size(g.size()) / stride;
    std::vector<std::uint64_t> results(points);
    for_each_index(points, mode, [&](std::uint64_t p) {
      auto i = four_interp_at(g.atoms, p * stride);
      results[p] = four_index_of(
          brute_force_support(g, i, kSupportOracleLimit, ExecMode::serial));
    });
    for (std::uint64_t r : results) checksum ^= r * 1099511628211ull;
  }
  return {checksum, seconds_since(start)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP enumeration kernel benchmark"};
  std::uint64_t seed = 1;
  size_t programs = 8;
  size_t atoms = 8;
  int repeat = 3;
  app.add_option("--seed", seed, "Corpus seed");
  app.add_option("--programs", programs, "Corpus size");
  app.add_option("--atoms", atoms, "Atoms per program (enumeration is 4^n)");
  app.add_option("--repeat", repeat, "Timed repetitions, best-of");
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  GenOptions gopt;
  gopt.min_atoms = atoms;
  gopt.max_atoms = atoms;
  gopt.max_rules = atoms + 2;
  std::vector<GroundProgram<four::Value>> corpus;
  for (size_t n = 0; n < programs; ++n)
    corpus.push_back(build_pstar(random_program<four::Value>(rng, gopt)));

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: unavailable (serial fallback)\n");
#endif
  std::printf("corpus: %zu programs, up to %zu atoms, seed %llu\n", corpus.size(),
              atoms, static_cast<unsigned long long>(seed));

  struct Kernel {
    const char* name;
    SweepResult (*run)(const std::vector<GroundProgram<four::Value>>&, ExecMode);
  };
  const Kernel kernels[] = {{"classify", classify_sweep}, {"support-oracle", oracle_sweep}};

  bool all_match = true;
  for (const Kernel& k : kernels) {
    SweepResult serial, parallel;
    for (int r = 0; r < repeat; ++r) {
      SweepResult s = k.run(corpus, ExecMode::serial);
      SweepResult p = k.run(corpus, ExecMode::parallel);
      if (r == 0 || s.seconds < serial.seconds) serial = s;
      if (r == 0 || p.seconds < parallel.seconds) parallel = p;
    }
    bool match = serial.checksum == parallel.checksum;
    all_match = all_match && match;
    std::printf("%-15s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  results %s\n",
                k.name, serial.seconds, parallel.seconds,
                parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0,
                match ? "identical" : "DIVERGED");
  }
  return all_match ? 0 : 1;
}
