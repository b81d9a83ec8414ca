#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "chiral/chirality.hpp"
#include "chiral/errors.hpp"
#include "chiral/input.hpp"
#include "chiral/montecarlo.hpp"
#include "chiral/symmetry.hpp"
#include "chiral/tables.hpp"

namespace {

using namespace chiral;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;       // cmd_test only: symmetry rejected
constexpr int kExitUsage = 2;        // bad input, flags or configuration
constexpr int kExitDegenerate = 3;   // n < 2 or zero inertia
constexpr int kExitOffGrid = 4;      // cmd_test: n not tabulated, no --interpolate

struct ChiOptions {
  std::string input;
  std::string method = "asc-desc";
};

struct TestOptions {
  std::string input;
  std::string law;
  double level = 0.95;
  bool interpolate = false;
};

struct SimulateOptions {
  std::string law;
  std::vector<int> sizes;
  int observations = 10000;
  int replicates = 100;
  std::vector<double> levels{kTableLevels.begin(), kTableLevels.end()};
  std::uint64_t seed = kDefaultMasterSeed;
  std::string format = "paper-text";
  std::string out;
  unsigned threads = 0;
};

struct TablesOptions {
  std::string law;
  bool verify = false;
};

struct OracleOptions {
  std::string input;
  int max_n = 8;
};

// "-" or an empty path selects standard input.
std::vector<double> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_numbers(std::cin);
  std::ifstream file(path);
  if (!file) throw Error("cannot open input file '" + path + "'");
  return read_numbers(file);
}

Law law_from_name(const std::string& name) {
  const auto law = parse_law(name);
  if (!law) throw Error("unknown law '" + name + "'");
  return *law;
}

// Shortest decimal form that parses back to the identical double.
std::string fmt(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc() ? std::string(buffer, end) : std::string("?");
}

void print_report(const ChiralIndexReport& report) {
  std::printf("chi %s\n", fmt(report.chi).c_str());
  std::printf("r_m %s\n", fmt(report.r_m).c_str());
  std::printf("n %lld\n", static_cast<long long>(report.n));
  std::printf("method %s\n", std::string(to_string(report.method)).c_str());
}

int run_chi(const ChiOptions& options) {
  try {
    const std::vector<double> numbers = read_input(options.input);
    const Sample sample{std::span<const double>(numbers)};
    if (options.method == "all") {
      const ChiralIndexReport asc_desc = chiral_index(sample);
      const ChiralIndexReport midrange = chiral_index_midrange(sample);
      const ChiralIndexReport halfrange = chiral_index_halfrange(sample);
      const double discrepancy =
          std::max({std::abs(asc_desc.chi - midrange.chi),
                    std::abs(asc_desc.chi - halfrange.chi),
                    std::abs(midrange.chi - halfrange.chi)});
      std::printf("chi[asc-desc] %s\n", fmt(asc_desc.chi).c_str());
      std::printf("chi[midrange] %s\n", fmt(midrange.chi).c_str());
      std::printf("chi[halfrange] %s\n", fmt(halfrange.chi).c_str());
      std::printf("r_m %s\n", fmt(asc_desc.r_m).c_str());
      std::printf("n %lld\n", static_cast<long long>(asc_desc.n));
      std::printf("max-discrepancy %s\n", fmt(discrepancy).c_str());
    } else if (options.method == "midrange") {
      print_report(chiral_index_midrange(sample));
    } else if (options.method == "halfrange") {
      print_report(chiral_index_halfrange(sample));
    } else {
      print_report(chiral_index(sample));
    }
    return kExitOk;
  } catch (const ZeroInertia& error) {
    std::cerr << "chi: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const DegenerateSample& error) {
    std::cerr << "chi: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& error) {
    std::cerr << "chi: " << error.what() << '\n';
    return kExitUsage;
  }
}

int run_test(const TestOptions& options) {
  try {
    const std::vector<double> numbers = read_input(options.input);
    const Sample sample{std::span<const double>(numbers)};
    const LookupPolicy policy = options.interpolate ? LookupPolicy::interpolate
                                                    : LookupPolicy::exact;
    const TestResult result =
        test_symmetry(sample, law_from_name(options.law), options.level, policy);
    std::printf("n=%d law=%s level=%g policy=%s\n", result.n,
                std::string(to_string(result.law)).c_str(), result.level,
                result.policy == LookupPolicy::exact ? "exact" : "interpolate");
    if (result.reject) {
      std::printf("chi = %s exceeds K_%g = %s: reject symmetry\n",
                  fmt(result.chi).c_str(), result.level,
                  fmt(result.critical).c_str());
    } else {
      std::printf(
          "chi = %s does not exceed K_%g = %s: symmetry not rejected\n",
          fmt(result.chi).c_str(), result.level, fmt(result.critical).c_str());
    }
    if (result.max_rejected_level) {
      std::printf("max rejected level %g\n", *result.max_rejected_level);
    }
    std::printf("%s %s %d\n", fmt(result.chi).c_str(),
                fmt(result.critical).c_str(), result.reject ? 1 : 0);
    return result.reject ? kExitReject : kExitOk;
  } catch (const ZeroInertia& error) {
    std::cerr << "test: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const DegenerateSample& error) {
    std::cerr << "test: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const SampleSizeNotTabulated& error) {
    std::cerr << "test: " << error.what() << '\n';
    return kExitOffGrid;
  } catch (const std::exception& error) {
    std::cerr << "test: " << error.what() << '\n';
    return kExitUsage;
  }
}

int run_simulate(const SimulateOptions& options) {
  try {
    SimulationConfig config;
    config.dist = law_from_name(options.law) == Law::uniform
                      ? DistributionSpec::uniform(0.0, 1.0)
                      : DistributionSpec::normal(0.0, 1.0);
    config.sample_sizes = options.sizes;
    config.observations_per_replicate = options.observations;
    config.replicates = options.replicates;
    config.levels = options.levels;
    config.master_seed = options.seed;
    validate(config);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<QuantileTableRow> rows =
        run_simulation(config, options.threads);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;

    const TableFormat format = options.format == "csv"
                                   ? TableFormat::csv
                                   : TableFormat::paper_text;
    const std::string text = emit_table(config.dist.law, rows, format);
    if (options.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(options.out, std::ios::binary);
      if (!file || !(file << text)) {
        throw Error("cannot write output file '" + options.out + "'");
      }
    }
    std::fprintf(stderr,
                 "simulate: %d replicates x %zu sample sizes in %.2f s\n",
                 config.replicates, config.sample_sizes.size(),
                 elapsed.count());
    return kExitOk;
  } catch (const std::exception& error) {
    std::cerr << "simulate: " << error.what() << '\n';
    return kExitUsage;
  }
}

int run_tables(const TablesOptions& options) {
  if (options.verify) {
    const std::vector<std::string> violations = verify_embedded_tables();
    if (violations.empty()) {
      std::printf("embedded tables verified: %zu rows per law\n",
                  reference_grid().size());
      return kExitOk;
    }
    for (const std::string& violation : violations) {
      std::cerr << "tables: " << violation << '\n';
    }
    return 1;
  }
  if (options.law.empty()) {
    std::cerr << "tables: pass --law uniform|normal to print, or --verify\n";
    return kExitUsage;
  }
  try {
    std::cout << embedded_table_text(law_from_name(options.law));
    return kExitOk;
  } catch (const std::exception& error) {
    std::cerr << "tables: " << error.what() << '\n';
    return kExitUsage;
  }
}

int run_oracle(const OracleOptions& options) {
  try {
    const std::vector<double> numbers = read_input(options.input);
    const Sample sample{std::span<const double>(numbers)};
    const double brute = min_correlation_bruteforce(sample, options.max_n);
    const double sorted = chiral_index(sample).r_m;
    std::printf("r_m[brute-force] %s\n", fmt(brute).c_str());
    std::printf("r_m[sort-correlate] %s\n", fmt(sorted).c_str());
    std::printf("diff %s\n", fmt(std::abs(brute - sorted)).c_str());
    return kExitOk;
  } catch (const ZeroInertia& error) {
    std::cerr << "oracle: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const DegenerateSample& error) {
    std::cerr << "oracle: " << error.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& error) {
    std::cerr << "oracle: " << error.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiral index of a univariate sample: compute, test, tabulate"};
  app.require_subcommand(1);

  ChiOptions chi_options;
  CLI::App* chi_cmd =
      app.add_subcommand("chi", "compute the chiral index of a sample");
  chi_cmd->add_option("input", chi_options.input,
                      "input file ('-' or absent reads standard input)");
  chi_cmd->add_option("--method", chi_options.method,
                      "asc-desc (default), midrange, halfrange, or all")
      ->check(CLI::IsMember({"asc-desc", "midrange", "halfrange", "all"}));

  TestOptions test_options;
  CLI::App* test_cmd =
      app.add_subcommand("test", "test the sample for symmetry");
  test_cmd->add_option("input", test_options.input,
                       "input file ('-' or absent reads standard input)");
  test_cmd->add_option("--law", test_options.law, "parent law under the null")
      ->required()
      ->check(CLI::IsMember({"uniform", "normal"}));
  test_cmd->add_option("--level", test_options.level,
                       "confidence level (0.90, 0.95, 0.98 or 0.99)");
  test_cmd->add_flag("--interpolate", test_options.interpolate,
                     "interpolate critical values between grid sizes");

  SimulateOptions simulate_options;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "regenerate quantile tables by Monte Carlo");
  simulate_cmd->add_option("--law", simulate_options.law, "sampled law")
      ->required()
      ->check(CLI::IsMember({"uniform", "normal"}));
  simulate_cmd
      ->add_option("--n-list", simulate_options.sizes, "sample sizes")
      ->required()
      ->delimiter(',');
  simulate_cmd->add_option("--obs", simulate_options.observations,
                           "chi observations per replicate (N)");
  simulate_cmd->add_option("--replicates", simulate_options.replicates,
                           "replicate count (R)");
  simulate_cmd->add_option("--levels", simulate_options.levels,
                           "quantile levels")
      ->delimiter(',');
  simulate_cmd->add_option("--seed", simulate_options.seed, "master seed");
  simulate_cmd->add_option("--format", simulate_options.format,
                           "paper-text (default) or csv")
      ->check(CLI::IsMember({"paper-text", "csv"}));
  simulate_cmd->add_option("--out", simulate_options.out,
                           "output file (default: standard output)");
  simulate_cmd->add_option("--threads", simulate_options.threads,
                           "worker threads (0 = available parallelism)");

  TablesOptions tables_options;
  CLI::App* tables_cmd =
      app.add_subcommand("tables", "print or audit the embedded tables");
  tables_cmd->add_option("--law", tables_options.law, "which table to print")
      ->check(CLI::IsMember({"uniform", "normal"}));
  tables_cmd->add_flag("--verify", tables_options.verify,
                       "audit the embedded data instead of printing");

  OracleOptions oracle_options;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "compare sort-correlate r_m with brute-force enumeration");
  oracle_cmd->add_option("input", oracle_options.input,
                         "input file ('-' or absent reads standard input)");
  oracle_cmd->add_option("--max-n", oracle_options.max_n,
                         "largest sample size to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (chi_cmd->parsed()) return run_chi(chi_options);
  if (test_cmd->parsed()) return run_test(test_options);
  if (simulate_cmd->parsed()) return run_simulate(simulate_options);
  if (tables_cmd->parsed()) return run_tables(tables_options);
  return run_oracle(oracle_options);
}
