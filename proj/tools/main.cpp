#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rri/bench.hpp"
#include "rri/bounds.hpp"
#include "rri/errors.hpp"
#include "rri/io.hpp"
#include "rri/oracle.hpp"
#include "rri/vas.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rri::domain_error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rri::domain_error("cannot open output file: " + path);
  out << content;
  if (!out) throw rri::domain_error("cannot write output file: " + path);
}

rri::PolyFormat format_from_name(const std::string& name) {
  if (name == "expr") return rri::PolyFormat::expr;
  if (name == "coeffs") return rri::PolyFormat::coeffs;
  if (name == "sparse") return rri::PolyFormat::sparse;
  throw rri::domain_error("unknown polynomial format: " + name);
}

rri::IntPoly read_poly(const std::string& path, const std::string& format) {
  rri::PolySource src;
  src.format = format_from_name(format);
  src.payload = read_input(path);
  return rri::parse_poly(src);
}

int run_isolate(const std::string& in, const std::string& format,
                const std::string& out, bool no_subst, bool no_early_split,
                bool paranoid) {
  rri::IntPoly p = read_poly(in, format);
  rri::IsolateOptions opts;
  opts.use_substitution = !no_subst;
  opts.use_early_split = !no_early_split;
  opts.paranoid = paranoid;
  rri::IsolateStats stats;
  std::vector<rri::RootInterval> roots = rri::isolate(p, opts, &stats);
  if (paranoid && stats.paranoid_violations > 0)
    throw rri::internal_error(
        "paranoid recheck found " + std::to_string(stats.paranoid_violations) +
        " unexpanded emission(s) whose sign-variation count is not 1");
  if (out == "json") {
    std::cout << rri::format_results(roots, rri::OutputMode::json) << "\n";
  } else {
    std::cout << rri::format_results(roots, rri::OutputMode::human);
  }
  return 0;
}

int run_bound(const std::string& alg, const std::string& in,
              const std::string& format) {
  rri::IntPoly p = read_poly(in, format);
  rri::Rational value;
  if (alg == "logcf") {
    value = rri::up_bound(p);
  } else if (alg == "cauchy") {
    value = rri::cauchy_bound(p);
  } else {
    value = rri::asv_bound(p);
  }
  std::cout << rri::format_rational(value) << "\n";
  return 0;
}

int run_bench(const rri::BenchSpec& spec, const std::string& csv_path,
              const std::string& json_path, bool no_timing) {
  std::vector<rri::BenchRecord> records = rri::run(spec);
  const bool include_timing = !no_timing;
  if (!csv_path.empty())
    write_file(csv_path, rri::to_csv(records, include_timing));
  if (!json_path.empty())
    write_file(json_path, rri::to_json(records, include_timing));
  if (csv_path.empty() && json_path.empty())
    std::cout << rri::to_csv(records, include_timing);
  return 0;
}

int run_oracle_check(const std::string& in, const std::string& format) {
  rri::IntPoly p = read_poly(in, format);
  rri::IntPoly f = rri::square_free_part(p);
  std::vector<rri::RootInterval> engine = rri::isolate(p);
  std::vector<rri::RootInterval> oracle = rri::oracle_isolate(p);
  if (!rri::same_roots(f, engine, oracle)) {
    std::cerr << "mismatch: engine found " << engine.size()
              << " root(s), oracle found " << oracle.size() << "\n";
    return 2;
  }
  std::cout << "ok: " << engine.size() << " root(s), engine and oracle agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact real-root isolation for integer polynomials"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"expr", "coeffs", "sparse"};

  std::string iso_in = "-", iso_format = "expr", iso_out = "human";
  bool iso_no_subst = false, iso_no_early_split = false, iso_paranoid = false;
  CLI::App* iso = app.add_subcommand("isolate", "isolate all real roots");
  iso->add_option("--in", iso_in, "input file, or - for stdin");
  iso->add_option("--format", iso_format, "input format")
      ->check(CLI::IsMember(formats));
  iso->add_option("--out", iso_out, "output mode")
      ->check(CLI::IsMember({"human", "json"}));
  iso->add_flag("--no-subst", iso_no_subst,
                "disable the power-substitution shortcut");
  iso->add_flag("--no-early-split", iso_no_early_split,
                "disable the two-variation split shortcut");
  iso->add_flag("--paranoid", iso_paranoid,
                "recheck every interval emitted without expansion");

  std::string bnd_alg = "logcf", bnd_in = "-", bnd_format = "expr";
  CLI::App* bnd =
      app.add_subcommand("bound", "print a positive-root bound as p/q");
  bnd->add_option("--alg", bnd_alg, "bound algorithm")
      ->check(CLI::IsMember({"logcf", "cauchy", "asv"}));
  bnd->add_option("--in", bnd_in, "input file, or - for stdin");
  bnd->add_option("--format", bnd_format, "input format")
      ->check(CLI::IsMember(formats));

  std::string bench_family;
  long bench_n = 0;
  long bench_b = 1024;
  double bench_r = 0.5;
  std::uint64_t bench_seed = 0;
  int bench_trials = 1;
  std::string bench_csv, bench_json;
  bool bench_no_timing = false;
  CLI::App* bench =
      app.add_subcommand("bench", "run a benchmark family and report timings");
  bench->add_option("--family", bench_family, "polynomial family")
      ->required()
      ->check(CLI::IsMember({"W", "mW", "IW", "mIW", "T", "U", "L", "M", "R"}));
  bench->add_option("--n", bench_n, "degree parameter")->required();
  bench->add_option("--b", bench_b, "random family: coefficient bound");
  bench->add_option("--r", bench_r, "random family: zero-coefficient rate");
  bench->add_option("--seed", bench_seed, "random family: seed");
  bench->add_option("--trials", bench_trials, "random family: trial count");
  bench->add_option("--csv", bench_csv, "write records to this CSV file");
  bench->add_option("--json", bench_json, "write records to this JSON file");
  bench->add_flag("--no-timing", bench_no_timing,
                  "zero the timing fields for reproducible output");

  std::string oc_in = "-", oc_format = "expr";
  CLI::App* oc = app.add_subcommand(
      "oracle-check", "isolate with both engines and compare the results");
  oc->add_option("--in", oc_in, "input file, or - for stdin");
  oc->add_option("--format", oc_format, "input format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (iso->parsed())
      return run_isolate(iso_in, iso_format, iso_out, iso_no_subst,
                         iso_no_early_split, iso_paranoid);
    if (bnd->parsed()) return run_bound(bnd_alg, bnd_in, bnd_format);
    if (bench->parsed()) {
      rri::BenchSpec spec;
      spec.family = rri::family_from_name(bench_family);
      spec.n = bench_n;
      spec.b = bench_b;
      spec.r = bench_r;
      spec.seed = bench_seed;
      spec.trials = bench_trials;
      return run_bench(spec, bench_csv, bench_json, bench_no_timing);
    }
    if (oc->parsed()) return run_oracle_check(oc_in, oc_format);
  } catch (const rri::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rri::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rri::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
