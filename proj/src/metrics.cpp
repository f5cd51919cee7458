#include "epf/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace epf {

double hellinger(const DensityGrid& p, const DensityGrid& q) {
  if (p.axes.size() != q.axes.size()) throw structural_error("hellinger: grid dimension mismatch");
  for (std::size_t a = 0; a < p.axes.size(); ++a) {
    const auto& pa = p.axes[a];
    const auto& qa = q.axes[a];
    if (pa.lo != qa.lo || pa.hi != qa.hi || pa.count != qa.count)
      throw structural_error("hellinger: grids must share identical axes");
  }
  double bc = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    bc += p.cell_weight(i) * std::sqrt(std::max(0.0, p.values[i] * q.values[i]));
  }
  const double h2 = std::clamp(1.0 - bc, 0.0, 1.0);
  return std::sqrt(h2);
}

ComparisonTrace moment_trace(const std::vector<double>& times_a, const std::vector<double>& values_a,
                             const std::vector<double>& times_b, const std::vector<double>& values_b,
                             const std::string& label_a, const std::string& label_b) {
  if (times_a.size() != values_a.size() || times_b.size() != values_b.size())
    throw structural_error("moment_trace: times/values length mismatch");
  if (times_a.size() != times_b.size())
    throw capability_error("moment_trace: sources sampled on different time grids");
  ComparisonTrace trace;
  trace.label_a = label_a;
  trace.label_b = label_b;
  trace.times.reserve(times_a.size());
  trace.values.reserve(times_a.size());
  for (std::size_t i = 0; i < times_a.size(); ++i) {
    if (std::abs(times_a[i] - times_b[i]) > 1e-9)
      throw capability_error("moment_trace: sources sampled on different time grids");
    trace.times.push_back(times_a[i]);
    trace.values.push_back(std::abs(values_a[i] - values_b[i]));
  }
  return trace;
}

}  // namespace epf
