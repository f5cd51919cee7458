#pragma once

#include <string>
#include <vector>

#include "epf/reference.hpp"
#include "epf/types.hpp"

namespace epf {

/// Hellinger distance H = sqrt(1 - BC) with the Bhattacharyya coefficient
/// BC = trapezoidal integral of sqrt(p q). Both grids must share axes and be
/// normalized; 1 - BC is clamped to [0,1] against rounding.
double hellinger(const DensityGrid& p, const DensityGrid& q);

struct ComparisonTrace {
  std::vector<double> times;
  std::vector<double> values;
  std::string label_a;
  std::string label_b;
};

/// |E_a[x^idx] - E_b[x^idx]| over aligned time stamps. Mismatched time grids
/// are a capability error, not interpolated over.
ComparisonTrace moment_trace(const std::vector<double>& times_a, const std::vector<double>& values_a,
                             const std::vector<double>& times_b, const std::vector<double>& values_b,
                             const std::string& label_a, const std::string& label_b);

}  // namespace epf
