#include "opdr/harness.hpp"

#include "opdr/error.hpp"
#include "opdr/knn.hpp"
#include "opdr/opm.hpp"
#include "opdr/subsample.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace opdr {

namespace {

void validate(const VectorSet& x, const SweepConfig& cfg) {
  if (cfg.sample_sizes.empty()) throw Error(Errc::InvalidConfig, "no sample sizes");
  if (!std::is_sorted(cfg.sample_sizes.begin(), cfg.sample_sizes.end()) ||
      std::adjacent_find(cfg.sample_sizes.begin(), cfg.sample_sizes.end()) != cfg.sample_sizes.end()) {
    throw Error(Errc::InvalidConfig, "sample sizes must be strictly ascending");
  }
  if (cfg.k < 1 || cfg.k >= cfg.sample_sizes.front()) {
    throw Error(Errc::InvalidConfig, "k = " + std::to_string(cfg.k) + " must satisfy 1 <= k < " +
                                         std::to_string(cfg.sample_sizes.front()));
  }
  if (cfg.repeats < 1) throw Error(Errc::InvalidConfig, "repeats must be >= 1");
  if (x.count() < cfg.sample_sizes.back()) {
    throw Error(Errc::DatasetTooSmall, "dataset has " + std::to_string(x.count()) + " points, sweep needs " +
                                           std::to_string(cfg.sample_sizes.back()));
  }
  for (auto m : cfg.sample_sizes) {
    if (dims_for(cfg, m, x.dim()).empty()) {
      throw Error(Errc::InvalidConfig, "no valid target dimension for m = " + std::to_string(m));
    }
  }
}

// Runs job(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any job is rethrown on the calling thread.
template <typename Job>
void parallel_for(std::size_t count, std::size_t threads, Job job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

struct Group {
  std::size_t m;
  std::size_t repeat;
  std::optional<VectorSet> subset;
  KnnTable table_x;
};

struct Cell {
  std::size_t group;
  std::size_t n;
};

}  // namespace

std::vector<std::size_t> dims_for(const SweepConfig& cfg, std::size_t m, std::size_t dim) {
  const std::size_t upper = std::min(m - 1, max_target_dim(cfg.method, m, dim));
  std::vector<std::size_t> out;
  if (cfg.dims.empty()) {
    for (std::size_t n = 1; n <= upper; ++n) out.push_back(n);
  } else {
    for (auto n : cfg.dims) {
      if (n >= 1 && n <= upper) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<SweepRecord> run_sweep(const VectorSet& x, const SweepConfig& cfg) {
  validate(x, cfg);

  std::vector<Group> groups;
  for (auto m : cfg.sample_sizes) {
    for (std::size_t r = 0; r < cfg.repeats; ++r) groups.push_back({m, r, std::nullopt, {}});
  }
  parallel_for(groups.size(), cfg.threads, [&](std::size_t g) {
    auto& group = groups[g];
    group.subset = x.select(subsample(x.count(), group.m, stream_key(cfg.seed, group.m, group.repeat)));
    group.table_x = knn_table(*group.subset, cfg.k, cfg.metric);
  });

  // Canonical order (m, n, repeat) is fixed here; workers fill slots in place.
  std::vector<Cell> cells;
  for (std::size_t mi = 0; mi < cfg.sample_sizes.size(); ++mi) {
    for (auto n : dims_for(cfg, cfg.sample_sizes[mi], x.dim())) {
      for (std::size_t r = 0; r < cfg.repeats; ++r) cells.push_back({mi * cfg.repeats + r, n});
    }
  }
  std::vector<SweepRecord> records(cells.size());
  parallel_for(cells.size(), cfg.threads, [&](std::size_t c) {
    const auto& group = groups[cells[c].group];
    const auto n = cells[c].n;
    const auto reduced = reduce(*group.subset, {cfg.method, n, cfg.metric});
    const auto table_y = knn_table(reduced.y, cfg.k, cfg.metric);
    records[c] = {group.m,     n,         static_cast<double>(n) / static_cast<double>(group.m),
                  cfg.k,       cfg.metric, cfg.method,
                  group.repeat, accuracy(group.table_x, table_y).accuracy};
  });
  return records;
}

std::vector<RatioBin> summarize(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw Error(Errc::EmptyInput, "no records to summarize");
  std::map<double, std::pair<double, std::size_t>> bins;
  for (const auto& r : records) {
    auto& [sum, count] = bins[r.ratio];
    sum += r.accuracy;
    ++count;
  }
  std::vector<RatioBin> out;
  out.reserve(bins.size());
  for (const auto& [ratio, acc] : bins) out.push_back({ratio, acc.first / static_cast<double>(acc.second), acc.second});
  return out;
}

std::vector<FitSample> to_fit_samples(const std::vector<SweepRecord>& records) {
  std::vector<FitSample> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.n, r.m, r.accuracy});
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  return out;
}

template <typename T>
T parse_field(const std::string& text, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::MalformedValue, "sweep csv line " + std::to_string(line_no) + ": cannot parse '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_sweep_csv(const std::vector<SweepRecord>& records, const std::string& comment) {
  std::string out = "#" + comment + "\n";
  out += kSweepHeader;
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + format_double(r.ratio) + ',' +
           std::to_string(r.k) + ',' + std::string(to_string(r.metric)) + ',' + std::string(to_string(r.method)) +
           ',' + std::to_string(r.repeat) + ',' + format_double(r.accuracy) + '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(const std::string& text) {
  std::stringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> column;
  std::vector<SweepRecord> out;
  auto field = [&](const std::vector<std::string>& fields, const std::string& name) -> const std::string& {
    auto it = column.find(name);
    if (it == column.end() || it->second >= fields.size()) {
      throw Error(Errc::MalformedHeader, "sweep csv line " + std::to_string(line_no) + ": missing column " + name);
    }
    return fields[it->second];
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#' || line == "\r") continue;
    const auto fields = split(line);
    if (column.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) column[fields[i]] = i;
      for (const char* required : {"m", "n", "accuracy"}) {
        if (!column.contains(required)) {
          throw Error(Errc::MalformedHeader, std::string("sweep csv header lacks column ") + required);
        }
      }
      continue;
    }
    SweepRecord r;
    r.m = parse_field<std::size_t>(field(fields, "m"), line_no);
    r.n = parse_field<std::size_t>(field(fields, "n"), line_no);
    r.accuracy = parse_field<double>(field(fields, "accuracy"), line_no);
    r.ratio = column.contains("ratio") ? parse_field<double>(field(fields, "ratio"), line_no)
                                       : static_cast<double>(r.n) / static_cast<double>(r.m);
    if (column.contains("k")) r.k = parse_field<std::size_t>(field(fields, "k"), line_no);
    if (column.contains("repeat")) r.repeat = parse_field<std::size_t>(field(fields, "repeat"), line_no);
    if (column.contains("metric")) {
      auto metric = parse_metric(field(fields, "metric"));
      if (!metric) throw Error(Errc::MalformedValue, "sweep csv line " + std::to_string(line_no) + ": bad metric");
      r.metric = *metric;
    }
    if (column.contains("method")) {
      auto method = parse_method(field(fields, "method"));
      if (!method) throw Error(Errc::MalformedValue, "sweep csv line " + std::to_string(line_no) + ": bad method");
      r.method = *method;
    }
    out.push_back(r);
  }
  if (column.empty()) throw Error(Errc::EmptyFile, "sweep csv has no header");
  return out;
}

}  // namespace opdr
