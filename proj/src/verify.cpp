#include "permroots/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permroots/counting.hpp"
#include "permroots/oracle.hpp"
#include "permroots/series.hpp"

namespace permroots {
namespace {

struct Task {
  std::uint64_t k;
  std::uint64_t n;
  CycleType type;
};

struct TaskResult {
  bool pass = false;
  std::string detail;  // filled on failure
};

std::string triple(const RootCount& rc) {
  return "(" + rc.total.str() + "," + rc.even.str() + "," + rc.odd.str() + ")";
}

TaskResult check_task(const Task& task, const EgfSeries& total_series,
                      const EgfSeries& signed_series) {
  RootCount from_oracle = oracle_count_roots(task.k, task.type);
  RootCount from_formula = count_roots(task.k, task.type);
  BigInt series_total = to_integer(egf_coefficient(total_series, task.type));
  BigInt series_diff = to_integer(egf_coefficient(signed_series, task.type));

  TaskResult result;
  result.pass = from_oracle == from_formula &&
                from_formula.total == series_total &&
                from_formula.difference() == series_diff &&
                has_kth_root(task.k, task.type) == (from_formula.total > 0);
  if (!result.pass) {
    std::ostringstream os;
    os << "k=" << task.k << " n=" << task.n << " type="
       << (task.type.empty() ? "(empty)" : format_cycle_type(task.type))
       << ": oracle=" << triple(from_oracle) << " counting=" << triple(from_formula)
       << " series_total=" << series_total << " series_diff=" << series_diff;
    result.detail = os.str();
  }
  return result;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n > kMaxOracleSize) {
    throw std::invalid_argument("verify: max_n exceeds the oracle cap of " +
                                std::to_string(kMaxOracleSize));
  }
  if (options.ks.empty()) {
    throw std::invalid_argument("verify: need at least one k");
  }
  for (std::uint64_t k : options.ks) {
    if (k == 0) {
      throw std::invalid_argument("verify: k must be >= 1");
    }
  }
  unsigned workers = std::max(1u, options.workers);

  auto t0 = std::chrono::steady_clock::now();

  // Series are built once per k and shared read-only across workers.
  std::vector<std::pair<EgfSeries, EgfSeries>> series;
  series.reserve(options.ks.size());
  for (std::uint64_t k : options.ks) {
    series.emplace_back(build_total_root_series(k, options.max_n),
                        build_signed_difference_series(k, options.max_n));
  }

  std::vector<Task> tasks;
  std::vector<std::size_t> series_index;
  for (std::size_t ki = 0; ki < options.ks.size(); ++ki) {
    for (std::uint64_t n = 0; n <= options.max_n; ++n) {
      for (CycleType& type : partitions_of(n)) {
        tasks.push_back(Task{options.ks[ki], n, std::move(type)});
        series_index.push_back(ki);
      }
    }
  }

  std::vector<TaskResult> results(tasks.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      results[i] = check_task(tasks[i], series[series_index[i]].first,
                              series[series_index[i]].second);
    }
  };

  if (workers == 1 || tasks.size() < 2) {
    run_range(0, tasks.size());
  } else {
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (tasks.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(tasks.size(), begin + chunk);
      if (begin < end) {
        pool.emplace_back(run_range, begin, end);
      }
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  auto t1 = std::chrono::steady_clock::now();

  VerifyReport report;
  report.checks = tasks.size();
  report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();

  std::ostringstream os;
  os << "verify max_n=" << options.max_n << " k=";
  for (std::size_t i = 0; i < options.ks.size(); ++i) {
    os << (i == 0 ? "" : ",") << options.ks[i];
  }
  os << "\n";

  const std::string* first_failure = nullptr;
  std::size_t index = 0;
  for (std::size_t ki = 0; ki < options.ks.size(); ++ki) {
    for (std::uint64_t n = 0; n <= options.max_n; ++n) {
      std::uint64_t types = 0, passes = 0;
      while (index < tasks.size() && tasks[index].k == options.ks[ki] &&
             tasks[index].n == n && series_index[index] == ki) {
        ++types;
        if (results[index].pass) {
          ++passes;
        } else {
          ++report.failures;
          if (first_failure == nullptr) {
            first_failure = &results[index].detail;
          }
        }
        ++index;
      }
      os << "k=" << options.ks[ki] << " n=" << n << " types=" << types
         << " pass=" << passes << "\n";
    }
  }
  os << "checks=" << report.checks << " failures=" << report.failures << "\n";
  if (first_failure != nullptr) {
    os << "first counterexample: " << *first_failure << "\n";
  }
  report.ok = report.failures == 0;
  os << "result: " << (report.ok ? "PASS" : "FAIL") << "\n";
  report.text = os.str();
  return report;
}

}  // namespace permroots
