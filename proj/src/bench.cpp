#include "rri/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rri/oracle.hpp"

namespace rri {

std::string family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::mW: return "mW";
    case Family::IW: return "IW";
    case Family::mIW: return "mIW";
    case Family::T: return "T";
    case Family::U: return "U";
    case Family::L: return "L";
    case Family::M: return "M";
    case Family::R: return "R";
  }
  throw internal_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "W") return Family::W;
  if (name == "mW") return Family::mW;
  if (name == "IW") return Family::IW;
  if (name == "mIW") return Family::mIW;
  if (name == "T") return Family::T;
  if (name == "U") return Family::U;
  if (name == "L") return Family::L;
  if (name == "M") return Family::M;
  if (name == "R") return Family::R;
  throw domain_error("unknown family: " + name);
}

namespace {

IntPoly wilkinson(long n) {
  // product of (x - i), i = 1..n
  IntPoly acc({1});
  for (long i = 1; i <= n; ++i)
    acc = mul(acc, IntPoly(std::vector<BigInt>{BigInt(-i), BigInt(1)}));
  return acc;
}

IntPoly inverse_wilkinson(long n) {
  // product of (i x - 1), i = 1..n
  IntPoly acc({1});
  for (long i = 1; i <= n; ++i)
    acc = mul(acc, IntPoly(std::vector<BigInt>{BigInt(-1), BigInt(i)}));
  return acc;
}

IntPoly chebyshev(long n, bool second_kind) {
  // X_{k+1} = 2 x X_k - X_{k-1}; T0=1, T1=x / U0=1, U1=2x
  IntPoly prev({1});
  if (n == 0) return prev;
  IntPoly cur = second_kind ? IntPoly({0, 2}) : IntPoly({0, 1});
  const IntPoly two_x({0, 2});
  for (long k = 1; k < n; ++k) {
    IntPoly next = sub(mul(two_x, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly laguerre_scaled(long n) {
  // G_k = k! L_k: G_0 = 1, G_1 = 1 - x, G_{k+1} = (2k+1-x) G_k - k^2 G_{k-1}
  IntPoly prev({1});
  if (n == 0) return prev;
  IntPoly cur({1, -1});
  for (long k = 1; k < n; ++k) {
    IntPoly factor(std::vector<BigInt>{BigInt(2 * k + 1), BigInt(-1)});
    IntPoly next = sub(mul(factor, cur),
                       mul(IntPoly::constant(BigInt(k) * k), prev));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly mignotte(long n) {
  // x^n - 2 (5x - 1)^2 = x^n - 50 x^2 + 20 x - 2
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(n, 2L)) + 1, BigInt(0));
  c[0] = -2;
  c[1] = 20;
  c[2] = -50;
  c[static_cast<std::size_t>(n)] += 1;
  return IntPoly(std::move(c));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, m); std::uniform_int_distribution is not
// bit-reproducible across standard libraries, the engine itself is.
std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % m;
}

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

IntPoly random_poly(long n, long b, double r, std::uint64_t seed) {
  if (b < 1) throw domain_error("random family: b must be >= 1");
  if (r < 0.0 || r >= 1.0)
    throw domain_error("random family: r must be in [0, 1)");
  std::mt19937_64 rng(seed);
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  // High-to-low draws; the leading coefficient is forced nonzero.
  for (long i = n; i >= 0; --i) {
    if (i < n && unit_double(rng) < r) continue;
    BigInt mag(static_cast<unsigned long>(
        1 + bounded_u64(rng, static_cast<std::uint64_t>(b))));
    c[static_cast<std::size_t>(i)] = (rng() & 1) ? -mag : mag;
  }
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly generate_instance(const BenchSpec& spec, int trial) {
  if (spec.n < 1) throw domain_error("bench: n must be >= 1");
  switch (spec.family) {
    case Family::W: return wilkinson(spec.n);
    case Family::mW: return sub(wilkinson(spec.n), IntPoly({1}));
    case Family::IW: return inverse_wilkinson(spec.n);
    case Family::mIW: return sub(inverse_wilkinson(spec.n), IntPoly({1}));
    case Family::T: return chebyshev(spec.n, false);
    case Family::U: return chebyshev(spec.n, true);
    case Family::L: return laguerre_scaled(spec.n);
    case Family::M: return mignotte(spec.n);
    case Family::R:
      return random_poly(
          spec.n, spec.b, spec.r,
          splitmix64(spec.seed ^
                     (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1))));
  }
  throw internal_error("generate_instance: unknown family");
}

IntPoly generate(const BenchSpec& spec) { return generate_instance(spec, 0); }

namespace {

bool verify_roots(const BenchSpec& spec, const IntPoly& poly,
                  const std::vector<RootInterval>& roots) {
  const long count = static_cast<long>(roots.size());
  auto oracle_count = [&] {
    return static_cast<long>(oracle_isolate(poly).size());
  };
  switch (spec.family) {
    case Family::W:
    case Family::IW:
    case Family::T:
    case Family::U:
      return count == spec.n;
    case Family::L: {
      if (count != spec.n) return false;
      for (const auto& iv : roots) {
        if (iv.kind == IntervalKind::exact && sign_of(iv.lo) <= 0) return false;
        if (iv.kind == IntervalKind::open && sign_of(iv.lo) < 0) return false;
      }
      return true;
    }
    case Family::mW:
      // n > 10: all n roots stay real; below that compare with the oracle.
      return spec.n > 10 ? count == spec.n : count == oracle_count();
    case Family::M:
      // 4 real roots for even n, 3 for odd, valid from n = 3 upward.
      if (spec.n >= 3) return count == (spec.n % 2 == 0 ? 4 : 3);
      return count == oracle_count();
    case Family::mIW:
    case Family::R:
      return count == oracle_count();
  }
  throw internal_error("verify_roots: unknown family");
}

}  // namespace

std::vector<BenchRecord> run(const BenchSpec& spec, const IsolateOptions& opts) {
  if (spec.trials < 1) throw domain_error("bench: trials must be >= 1");
  std::vector<BenchRecord> records;
  records.reserve(static_cast<std::size_t>(spec.trials));
  for (int trial = 0; trial < spec.trials; ++trial) {
    IntPoly poly = generate_instance(spec, trial);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RootInterval> roots = isolate(poly, opts);
    auto t1 = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.spec = spec;
    rec.trial = trial;
    rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rec.root_count = static_cast<long>(roots.size());
    rec.verified = verify_roots(spec, poly, roots);
    records.push_back(std::move(rec));
  }
  return records;
}

double mean_seconds(const std::vector<BenchRecord>& records) {
  if (records.empty()) return 0.0;
  double total = 0.0;
  for (const auto& r : records) total += r.wall_seconds;
  return total / static_cast<double>(records.size());
}

namespace {

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<BenchRecord>& records, bool include_timing) {
  std::ostringstream out;
  out << "family,n,b,r,seed,trial,wall_seconds,root_count,verified\n";
  for (const auto& rec : records) {
    out << family_name(rec.spec.family) << ',' << rec.spec.n << ','
        << rec.spec.b << ',' << format_double("%.6g", rec.spec.r) << ','
        << rec.spec.seed << ',' << rec.trial << ','
        << format_double("%.6f", include_timing ? rec.wall_seconds : 0.0) << ','
        << rec.root_count << ',' << (rec.verified ? "true" : "false") << '\n';
  }
  if (!records.empty() && records.front().spec.family == Family::R &&
      records.size() > 1) {
    const BenchSpec& spec = records.front().spec;
    out << family_name(spec.family) << ',' << spec.n << ',' << spec.b << ','
        << format_double("%.6g", spec.r) << ',' << spec.seed << ",mean,"
        << format_double("%.6f", include_timing ? mean_seconds(records) : 0.0)
        << ",,\n";
  }
  return out.str();
}

std::string to_json(const std::vector<BenchRecord>& records, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["family"] = family_name(rec.spec.family);
    row["n"] = rec.spec.n;
    row["b"] = rec.spec.b;
    row["r"] = rec.spec.r;
    row["seed"] = rec.spec.seed;
    row["trial"] = rec.trial;
    row["wall_seconds"] = include_timing ? rec.wall_seconds : 0.0;
    row["root_count"] = rec.root_count;
    row["verified"] = rec.verified;
    doc["records"].push_back(std::move(row));
  }
  doc["mean_wall_seconds"] = include_timing ? mean_seconds(records) : 0.0;
  return doc.dump(2) + "\n";
}

}  // namespace rri
