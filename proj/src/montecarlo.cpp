#include "chiral/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "chiral/chirality.hpp"
#include "chiral/errors.hpp"

namespace chiral {

namespace detail {

double sorted_quantile(std::span<const double> ascending, double p) noexcept {
  const auto count = static_cast<std::ptrdiff_t>(ascending.size());
  if (count == 0) return std::numeric_limits<double>::quiet_NaN();
  if (count == 1) return ascending[0];
  const double k_real = p * static_cast<double>(count);
  // tolerate rounding noise in p*count itself (e.g. 0.9 * 10000)
  const double k_round = std::round(k_real);
  if (std::abs(k_real - k_round) <= 1e-9 * std::max(1.0, k_real)) {
    const auto k = std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(k_round), 1, count - 1);
    return 0.5 * (ascending[k - 1] + ascending[k]);
  }
  const auto k = std::clamp<std::ptrdiff_t>(
      static_cast<std::ptrdiff_t>(std::ceil(k_real)), 1, count);
  return ascending[k - 1];
}

}  // namespace detail

namespace {

// "90" for level 0.90, "92.5" for 0.925.
std::string level_label(double level) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", level * 100.0);
  return buffer;
}

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw std::invalid_argument("unformattable double");
  return std::string(buffer, end);
}

std::string emit_paper_text(std::span<const QuantileTableRow> rows) {
  std::string out = "# n";
  for (const auto& estimate : rows.front().estimates) {
    out += " K" + level_label(estimate.level);
  }
  for (const auto& estimate : rows.front().estimates) {
    out += " S" + level_label(estimate.level);
  }
  out += '\n';
  char buffer[32];
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    for (const auto& estimate : row.estimates) {
      std::snprintf(buffer, sizeof buffer, " %.6f", estimate.mean_k);
      out += buffer;
    }
    for (const auto& estimate : row.estimates) {
      std::snprintf(buffer, sizeof buffer, " %.6f", estimate.sd_k);
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

std::string emit_csv(Law law, std::span<const QuantileTableRow> rows) {
  std::string out = "law,n,level,mean_K,sd_K\n";
  const std::string law_name(to_string(law));
  for (const auto& row : rows) {
    for (const auto& estimate : row.estimates) {
      out += law_name;
      out += ',';
      out += std::to_string(row.n);
      out += ',';
      out += format_double(estimate.level);
      out += ',';
      out += format_double(estimate.mean_k);
      out += ',';
      out += format_double(estimate.sd_k);
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(separator, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double_field(std::string_view field, std::size_t line_number) {
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw Error("csv line " + std::to_string(line_number) +
                ": bad numeric field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void validate(const SimulationConfig& config) {
  if (config.observations_per_replicate < 100) {
    throw InvalidConfig(
        "observations per replicate must be at least 100, got " +
        std::to_string(config.observations_per_replicate));
  }
  if (config.replicates < 2) {
    throw InvalidConfig("need at least 2 replicates for a spread, got " +
                        std::to_string(config.replicates));
  }
  for (int n : config.sample_sizes) {
    if (n < 2) {
      throw InvalidConfig("sample size must be at least 2, got " +
                          std::to_string(n));
    }
  }
  const double count = config.observations_per_replicate;
  for (double p : config.levels) {
    if (!(p > 0.0) || !(p < 1.0)) {
      throw InvalidConfig("level must lie strictly inside (0, 1), got " +
                          std::to_string(p));
    }
    if (p * count > count - 1.0) {
      throw InvalidConfig("level " + std::to_string(p) +
                          " needs more than " +
                          std::to_string(config.observations_per_replicate) +
                          " observations per replicate");
    }
  }
}

std::vector<double> replicate_quantiles(const DistributionSpec& dist, int n,
                                        int observations,
                                        std::span<const double> levels,
                                        GeneratorState& gen) {
  Eigen::ArrayXd draw(n);
  Eigen::ArrayXd indices(observations);
  const std::span<double> draw_span(draw.data(), static_cast<std::size_t>(n));
  for (int j = 0; j < observations; ++j) {
    draw_into(gen, dist, draw_span);
    std::sort(draw.data(), draw.data() + n);
    if (!(draw(0) < draw(n - 1))) {
      throw ZeroInertia("all " + std::to_string(n) +
                        " observations of a replicate draw coincide");
    }
    indices(j) = 0.5 * (1.0 + detail::min_correlation_of_sorted(draw));
  }
  std::sort(indices.data(), indices.data() + observations);
  const std::span<const double> ascending(
      indices.data(), static_cast<std::size_t>(observations));
  std::vector<double> out;
  out.reserve(levels.size());
  for (double p : levels) {
    out.push_back(detail::sorted_quantile(ascending, p));
  }
  return out;
}

std::vector<QuantileTableRow> run_simulation(const SimulationConfig& config,
                                             unsigned threads) {
  validate(config);
  const int replicate_count = config.replicates;
  const std::size_t size_count = config.sample_sizes.size();

  // One slot per (sample size, replicate); workers never share slots, so
  // the aggregation below is a pure function of the config.
  std::vector<std::vector<double>> estimates(size_count *
                                             static_cast<std::size_t>(replicate_count));

  unsigned worker_count =
      threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count == 0) worker_count = 1;
  worker_count = std::min(worker_count, static_cast<unsigned>(replicate_count));

  std::atomic<int> next_replicate{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto work = [&]() noexcept {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const int replicate =
            next_replicate.fetch_add(1, std::memory_order_relaxed);
        if (replicate >= replicate_count) break;
        auto gen = make_generator(
            {config.master_seed, static_cast<std::uint64_t>(replicate)});
        for (std::size_t i = 0; i < size_count; ++i) {
          estimates[i * static_cast<std::size_t>(replicate_count) +
                    static_cast<std::size_t>(replicate)] =
              replicate_quantiles(config.dist, config.sample_sizes[i],
                                  config.observations_per_replicate,
                                  config.levels, gen);
        }
      }
    } catch (...) {
      const std::scoped_lock lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };

  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<QuantileTableRow> rows;
  rows.reserve(size_count);
  for (std::size_t i = 0; i < size_count; ++i) {
    QuantileTableRow row;
    row.n = config.sample_sizes[i];
    row.estimates.reserve(config.levels.size());
    const auto* slot =
        &estimates[i * static_cast<std::size_t>(replicate_count)];
    for (std::size_t l = 0; l < config.levels.size(); ++l) {
      double sum = 0.0;
      for (int r = 0; r < replicate_count; ++r) sum += slot[r][l];
      const double mean = sum / replicate_count;
      double spread = 0.0;
      for (int r = 0; r < replicate_count; ++r) {
        const double dev = slot[r][l] - mean;
        spread += dev * dev;
      }
      row.estimates.push_back(
          {config.levels[l], mean, std::sqrt(spread / (replicate_count - 1))});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_table(Law law, std::span<const QuantileTableRow> rows,
                       TableFormat format) {
  if (rows.empty()) throw std::invalid_argument("emit_table: no rows");
  if (format == TableFormat::paper_text) return emit_paper_text(rows);
  return emit_csv(law, rows);
}

ParsedTable parse_csv_table(std::string_view text) {
  ParsedTable table;
  bool saw_header = false;
  bool saw_law = false;
  std::size_t line_number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "law,n,level,mean_K,sd_K") {
        throw Error("csv line " + std::to_string(line_number) +
                    ": expected header 'law,n,level,mean_K,sd_K'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw Error("csv line " + std::to_string(line_number) + ": expected " +
                  "5 fields, got " + std::to_string(fields.size()));
    }
    const auto law = parse_law(fields[0]);
    if (!law) {
      throw Error("csv line " + std::to_string(line_number) +
                  ": unknown law '" + std::string(fields[0]) + "'");
    }
    if (!saw_law) {
      table.law = *law;
      saw_law = true;
    } else if (*law != table.law) {
      throw Error("csv line " + std::to_string(line_number) +
                  ": mixed laws in one table");
    }
    int n = 0;
    const auto [end, ec] =
        std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), n);
    if (ec != std::errc() || end != fields[1].data() + fields[1].size()) {
      throw Error("csv line " + std::to_string(line_number) +
                  ": bad sample size '" + std::string(fields[1]) + "'");
    }
    QuantileEstimate estimate;
    estimate.level = parse_double_field(fields[2], line_number);
    estimate.mean_k = parse_double_field(fields[3], line_number);
    estimate.sd_k = parse_double_field(fields[4], line_number);
    if (table.rows.empty() || table.rows.back().n != n) {
      table.rows.push_back({n, {}});
    }
    table.rows.back().estimates.push_back(estimate);
  }
  if (!saw_header) throw Error("csv input has no header line");
  return table;
}

}  // namespace chiral
