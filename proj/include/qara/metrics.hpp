#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace qara {

/// Per-instance statistics over R runs of one algorithm.
struct InstanceMetrics {
  std::uint64_t c_opt = 0;  // best objective
  double c_avg = 0.0;       // mean objective
  double p_success = 0.0;   // fraction of runs with objective 0
  double t_itr = 0.0;       // mean optimizer iterations per run
  std::size_t run_count = 0;
};

/// Means over the K instances of one size, plus the solved fraction.
struct SizeSummary {
  std::size_t m = 0;
  double mean_c_opt = 0.0;
  double mean_c_avg = 0.0;
  double mean_p_success = 0.0;
  double mean_t_itr = 0.0;
  double s_ratio = 0.0;  // instances with c_opt == 0, over K
  std::size_t instance_count = 0;
};

InstanceMetrics compute_instance_metrics(std::span<const std::uint64_t> objectives,
                                         std::span<const std::int64_t> iteration_counts);

SizeSummary compute_size_summary(std::span<const InstanceMetrics> per_instance, std::size_t m = 0);

}  // namespace qara
