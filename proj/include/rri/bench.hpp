#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rri/intpoly.hpp"
#include "rri/vas.hpp"

namespace rri {

/* Benchmark families:
 *   W   product of (x - i), i = 1..n
 *   mW  W_n - 1
 *   IW  product of (i x - 1), i = 1..n
 *   mIW IW_n - 1
 *   T   Chebyshev, first kind
 *   U   Chebyshev, second kind
 *   L   Laguerre scaled by n! (integer coefficients)
 *   M   x^n - 2 (5x - 1)^2
 *   R   random: degree n, |a_i| <= b, Pr[a_i = 0] = r, seeded
 */
enum class Family { W, mW, IW, mIW, T, U, L, M, R };

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws domain_error

struct BenchSpec {
  Family family = Family::W;
  long n = 1;
  long b = 1024;        // R only: coefficient magnitude bound
  double r = 0.5;       // R only: probability of a zero coefficient
  std::uint64_t seed = 0;
  int trials = 1;
};

struct BenchRecord {
  BenchSpec spec;
  int trial = 0;
  double wall_seconds = 0.0;
  long root_count = 0;
  bool verified = false;
};

/* The polynomial an isolation trial runs on. For the random family each trial
 * index yields its own deterministic instance; other families ignore it. */
IntPoly generate_instance(const BenchSpec& spec, int trial);
IntPoly generate(const BenchSpec& spec);  // = generate_instance(spec, 0)

/* Run spec.trials isolation trials, timing each and verifying its root count
 * (see family_name for the family semantics; random/mIW and small mW/M verify
 * against the Sturm oracle). */
std::vector<BenchRecord> run(const BenchSpec& spec,
                             const IsolateOptions& opts = {});

double mean_seconds(const std::vector<BenchRecord>& records);

/* CSV columns: family,n,b,r,seed,trial,wall_seconds,root_count,verified.
 * Random multi-trial runs append a mean row. include_timing=false zeroes the
 * timing fields so identical invocations are byte-identical. */
std::string to_csv(const std::vector<BenchRecord>& records,
                   bool include_timing = true);
std::string to_json(const std::vector<BenchRecord>& records,
                    bool include_timing = true);

}  // namespace rri
