#include "qara/metrics.hpp"

#include <algorithm>

#include "qara/errors.hpp"

namespace qara {

InstanceMetrics compute_instance_metrics(std::span<const std::uint64_t> objectives,
                                         std::span<const std::int64_t> iteration_counts) {
  if (objectives.empty()) throw InvalidArgument("instance metrics need at least one run");
  if (objectives.size() != iteration_counts.size()) {
    throw InvalidArgument("objective and iteration lists differ in length");
  }
  const auto r = static_cast<double>(objectives.size());
  InstanceMetrics out;
  out.run_count = objectives.size();
  out.c_opt = *std::min_element(objectives.begin(), objectives.end());
  double sum = 0.0;
  double successes = 0.0;
  for (auto c : objectives) {
    sum += static_cast<double>(c);
    if (c == 0) successes += 1.0;
  }
  double iterations = 0.0;
  for (auto t : iteration_counts) iterations += static_cast<double>(t);
  out.c_avg = sum / r;
  out.p_success = successes / r;
  out.t_itr = iterations / r;
  return out;
}

SizeSummary compute_size_summary(std::span<const InstanceMetrics> per_instance, std::size_t m) {
  if (per_instance.empty()) throw InvalidArgument("size summary needs at least one instance");
  const auto k = static_cast<double>(per_instance.size());
  SizeSummary out;
  out.m = m;
  out.instance_count = per_instance.size();
  double exact = 0.0;
  for (const auto& im : per_instance) {
    out.mean_c_opt += static_cast<double>(im.c_opt);
    out.mean_c_avg += im.c_avg;
    out.mean_p_success += im.p_success;
    out.mean_t_itr += im.t_itr;
    if (im.c_opt == 0) exact += 1.0;
  }
  out.mean_c_opt /= k;
  out.mean_c_avg /= k;
  out.mean_p_success /= k;
  out.mean_t_itr /= k;
  out.s_ratio = exact / k;
  return out;
}

}  // namespace qara
