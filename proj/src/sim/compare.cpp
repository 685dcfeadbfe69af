#include "rfwsn/sim/compare.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rfwsn/format.hpp"
#include "rfwsn/sim/simulator.hpp"

namespace rfwsn::sim {

std::vector<ComparisonAggregate> ComparisonTable::aggregates() const {
  std::vector<ComparisonAggregate> out;
  for (const auto p : protocols) {
    ComparisonAggregate a;
    a.protocol = p;
    for (const auto& r : rows) {
      if (r.protocol != p) continue;
      ++a.runs;
      a.mean_avg_residual += r.avg_residual;
      a.mean_min_residual += r.min_residual;
    }
    if (a.runs > 0) {
      a.mean_avg_residual /= static_cast<double>(a.runs);
      a.mean_min_residual /= static_cast<double>(a.runs);
    }
    out.push_back(a);
  }
  return out;
}

const ComparisonRow& ComparisonTable::at(routing::ProtocolKind protocol, std::uint64_t seed) const {
  for (const auto& r : rows) {
    if (r.protocol == protocol && r.seed == seed) return r;
  }
  throw std::out_of_range("no comparison row for that protocol and seed");
}

ComparisonTable compare_protocols(const Scenario& base,
                                  const std::vector<routing::ProtocolKind>& protocols,
                                  std::size_t repetitions, unsigned workers) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  if (protocols.empty()) throw std::invalid_argument("at least one protocol is required");
  base.validate();

  ComparisonTable table;
  table.protocols = protocols;
  const std::size_t total = repetitions * protocols.size();
  table.rows.resize(total);

  auto run_one = [&](std::size_t i) {
    Scenario s = base;
    s.seed = base.seed + i / protocols.size();
    s.protocol = protocols[i % protocols.size()];
    const RunResult r = run(s);
    double avg = 0.0;
    double low = 0.0;
    for (const auto& m : r.timeline.samples) {
      avg += m.average_residual;
      low += m.minimum_residual;
    }
    const auto n = static_cast<double>(r.timeline.samples.size());
    const MetricSample& last = r.timeline.samples.back();
    table.rows[i] = {s.protocol, s.seed, avg / n, low / n, last.packets_generated,
                     last.packets_delivered};
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, total); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) {
        try {
          run_one(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
  out << "protocol,seed,avg_residual,min_residual\n";
  for (const auto& r : table.rows) {
    out << routing::to_string(r.protocol) << ',' << r.seed << ',' << format_double(r.avg_residual)
        << ',' << format_double(r.min_residual) << '\n';
  }
  for (const auto& a : table.aggregates()) {
    out << routing::to_string(a.protocol) << ",mean," << format_double(a.mean_avg_residual) << ','
        << format_double(a.mean_min_residual) << '\n';
  }
}

}  // namespace rfwsn::sim
