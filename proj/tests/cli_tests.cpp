#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "chiral/montecarlo.hpp"

using namespace chiral;

namespace {

struct CliResult {
  int code = -1;
  std::string output;
};

// Black-box driver: feeds `input` on stdin, captures stdout (and stderr
// when `merge_stderr`), reports the exit code.
CliResult run_cli(const std::string& args, const std::string& input = "",
                  bool merge_stderr = true) {
  const std::string stdin_path = "/tmp/chiral_cli_stdin.txt";
  {
    std::ofstream file(stdin_path, std::ios::binary);
    file << input;
  }
  const std::string command = std::string(CHIRAL_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null") +
                              " < " + stdin_path;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(static_cast<bool>(file));
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string last_line(const std::string& text) {
  const std::size_t end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  const std::size_t start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1,
                     end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::string many_numbers(int count) {
  std::string text;
  for (int i = 1; i <= count; ++i) text += std::to_string(i) + "\n";
  return text;
}

}  // namespace

TEST_CASE("chi on worked examples") {
  const CliResult symmetric = run_cli("chi", "0 1 2");
  CHECK(symmetric.code == 0);
  CHECK(symmetric.output.find("chi 0\n") != std::string::npos);

  const CliResult tied = run_cli("chi", "0, 0, 1");
  CHECK(tied.code == 0);
  CHECK(tied.output.find("chi 0.25\n") != std::string::npos);
  CHECK(tied.output.find("r_m -0.5\n") != std::string::npos);

  const CliResult flat = run_cli("chi", "5 5 5");
  CHECK(flat.code == 3);
  CHECK(flat.output.find("inertia") != std::string::npos);

  const CliResult single = run_cli("chi", "5");
  CHECK(single.code == 3);
}

TEST_CASE("chi across methods") {
  const CliResult all = run_cli("chi --method all", "0 0 1");
  CHECK(all.code == 0);
  CHECK(all.output.find("chi[asc-desc] 0.25\n") != std::string::npos);
  CHECK(all.output.find("chi[midrange] 0.25\n") != std::string::npos);
  CHECK(all.output.find("chi[halfrange] 0.25") != std::string::npos);
  CHECK(all.output.find("max-discrepancy ") != std::string::npos);

  CHECK(run_cli("chi --method midrange", "0 0 1").output.find(
            "method midrange-variance") != std::string::npos);
  CHECK(run_cli("chi --method silly", "0 0 1").code == 2);
}

TEST_CASE("chi reads files and rejects bad input") {
  {
    std::ofstream file("/tmp/chiral_cli_numbers.txt");
    file << "0\n0\n1\n";
  }
  const CliResult from_file = run_cli("chi /tmp/chiral_cli_numbers.txt");
  CHECK(from_file.code == 0);
  CHECK(from_file.output.find("chi 0.25\n") != std::string::npos);

  CHECK(run_cli("chi /tmp/no_such_file_anywhere.txt").code == 2);

  const CliResult malformed = run_cli("chi", "1.5 2.x 3");
  CHECK(malformed.code == 2);
  CHECK(malformed.output.find("line 1, column 5") != std::string::npos);
}

TEST_CASE("test verdicts, exit codes and machine line") {
  const CliResult reject = run_cli("test --law uniform --level 0.95",
                                   "0 0 1", false);
  CHECK(reject.code == 1);
  CHECK(last_line(reject.output) == "0.25 0.231432 1");
  CHECK(reject.output.find("reject symmetry") != std::string::npos);

  const CliResult accept = run_cli("test --law normal --level 0.99",
                                   "0 1 2", false);
  CHECK(accept.code == 0);
  CHECK(last_line(accept.output) == "0 0.245439 0");
  CHECK(accept.output.find("not rejected") != std::string::npos);

  CHECK(run_cli("test --law uniform", "5 5 5").code == 3);
  CHECK(run_cli("test --law uniform --level 0.93", "0 0 1").code == 2);
  CHECK(run_cli("test --law klingon", "0 0 1").code == 2);
  CHECK(run_cli("test", "0 0 1").code == 2);  // --law is required
}

TEST_CASE("test distinguishes off-grid from other errors") {
  const std::string values = many_numbers(101);
  CHECK(run_cli("test --law uniform", values).code == 4);
  const CliResult bridged =
      run_cli("test --law uniform --interpolate", values);
  CHECK(bridged.code == 0);
  CHECK(bridged.output.find("policy=interpolate") != std::string::npos);
  // n = 2 is out of table range entirely, not bridgeable
  CHECK(run_cli("test --law uniform --interpolate", "1 2").code == 2);
}

TEST_CASE("simulate is reproducible byte for byte") {
  const std::string flags =
      "simulate --law uniform --n-list 3,10 --obs 500 --replicates 3 "
      "--seed 7 --out ";
  CHECK(run_cli(flags + "/tmp/chiral_sim_a.txt").code == 0);
  CHECK(run_cli(flags + "/tmp/chiral_sim_b.txt").code == 0);
  CHECK(run_cli(flags + "/tmp/chiral_sim_c.txt --threads 1").code == 0);
  CHECK(run_cli(flags + "/tmp/chiral_sim_d.txt --threads 2").code == 0);
  const std::string reference = read_file("/tmp/chiral_sim_a.txt");
  CHECK(reference == read_file("/tmp/chiral_sim_b.txt"));
  CHECK(reference == read_file("/tmp/chiral_sim_c.txt"));
  CHECK(reference == read_file("/tmp/chiral_sim_d.txt"));
  CHECK(reference.find("# n K90 K95 K98 K99 S90 S95 S98 S99\n") == 0);
}

TEST_CASE("simulate reports progress on stderr and data on stdout") {
  const CliResult data = run_cli(
      "simulate --law uniform --n-list 3 --obs 200 --replicates 2 --seed 1",
      "", false);
  CHECK(data.code == 0);
  CHECK(data.output.find("# n ") == 0);
  CHECK(data.output.find("replicates") == std::string::npos);

  const CliResult merged = run_cli(
      "simulate --law uniform --n-list 3 --obs 200 --replicates 2 --seed 1");
  CHECK(merged.output.find("2 replicates") != std::string::npos);
}

TEST_CASE("simulate validates its configuration") {
  CHECK(run_cli("simulate --law uniform --n-list 3 --obs 50").code == 2);
  CHECK(run_cli("simulate --law uniform --n-list 1 --obs 200").code == 2);
  CHECK(run_cli("simulate --law uniform").code == 2);  // --n-list required
  CHECK(run_cli("simulate --n-list 3").code == 2);     // --law required
  CHECK(run_cli("simulate --law uniform --n-list 3 --levels 0.9995 --obs 200")
            .code == 2);
}

TEST_CASE("simulate csv output re-parses to the in-memory rows") {
  const CliResult csv = run_cli(
      "simulate --law normal --n-list 3,5 --obs 500 --replicates 3 --seed 9 "
      "--format csv",
      "", false);
  CHECK(csv.code == 0);
  const ParsedTable parsed = parse_csv_table(csv.output);
  CHECK(parsed.law == Law::normal);

  SimulationConfig config;
  config.dist = DistributionSpec::normal(0.0, 1.0);
  config.sample_sizes = {3, 5};
  config.observations_per_replicate = 500;
  config.replicates = 3;
  config.master_seed = 9;
  const std::vector<QuantileTableRow> rows = run_simulation(config);

  REQUIRE(parsed.rows.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed.rows[i].n == rows[i].n);
    REQUIRE(parsed.rows[i].estimates.size() == rows[i].estimates.size());
    for (std::size_t l = 0; l < rows[i].estimates.size(); ++l) {
      CHECK(parsed.rows[i].estimates[l].level == rows[i].estimates[l].level);
      CHECK(parsed.rows[i].estimates[l].mean_k == rows[i].estimates[l].mean_k);
      CHECK(parsed.rows[i].estimates[l].sd_k == rows[i].estimates[l].sd_k);
    }
  }
}

TEST_CASE("tables prints and audits the embedded data") {
  const CliResult uniform = run_cli("tables --law uniform", "", false);
  CHECK(uniform.code == 0);
  std::istringstream lines(uniform.output);
  std::string header, first_row;
  std::getline(lines, header);
  std::getline(lines, first_row);
  CHECK(first_row ==
        "3 0.212764 0.231432 0.242661 0.246342 0.001020 0.000774 0.000583 "
        "0.000320");

  const CliResult normal = run_cli("tables --law normal", "", false);
  CHECK(normal.output.find(
            "\n10000 0.000184 0.000224 0.000276 0.000317 0.000002 0.000003 "
            "0.000005 0.000006\n") != std::string::npos);

  CHECK(run_cli("tables --verify").code == 0);
  CHECK(run_cli("tables").code == 2);
}

TEST_CASE("oracle compares the enumeration with the shortcut") {
  const CliResult tied = run_cli("oracle", "0 0 1", false);
  CHECK(tied.code == 0);
  CHECK(tied.output.find("r_m[brute-force] -0.5\n") != std::string::npos);
  CHECK(tied.output.find("r_m[sort-correlate] -0.5\n") != std::string::npos);
  CHECK(tied.output.find("diff 0\n") != std::string::npos);

  const CliResult symmetric = run_cli("oracle", "0 1 2", false);
  CHECK(symmetric.output.find("r_m[brute-force] -1\n") != std::string::npos);

  CHECK(run_cli("oracle", many_numbers(9)).code == 2);
  CHECK(run_cli("oracle --max-n 9", many_numbers(9)).code == 0);
}

TEST_CASE("bare and unknown invocations fail with usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("chi --unknown-flag", "1 2").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("chi --help").code == 0);
}
