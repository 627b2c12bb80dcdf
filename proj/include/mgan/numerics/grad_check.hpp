#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mgan/numerics/autograd.hpp"

namespace mgan {

struct GradCheckOptions {
  double eps = 1e-4;
  // Fraction of each input's coordinates to probe (at least one).
  double fraction = 1.0;
  // Upper bound on probed coordinates per input; 0 means unbounded.
  std::size_t max_coords = 0;
  std::uint64_t seed = 0;
};

// Max over probed coordinates of |analytic - central difference| / max(1, |analytic|).
// `f` must rebuild its graph from the current values of `inputs` on every call.
double grad_check(const std::function<Var<double>()>& f, std::vector<Var<double>> inputs,
                  const GradCheckOptions& opts = {});

struct GradCheckReport {
  double max_rel_error = 0;  // same quantity grad_check returns
  std::size_t probes = 0;
  // Probes failing `tolerance` whose failure is explained by kinks of piecewise-linear ops lying
  // within eps: a central difference with eps / 10 (or eps / 100) matches the analytic value.
  // Kinks may sit on both sides of the probe, so one-sided differences are not required to match.
  std::size_t kink_probes = 0;
  // Failing probes not explained by a kink.
  std::size_t unexplained = 0;
  // Max error over probes without a kink in their interval.
  double max_rel_error_smooth = 0;
};

GradCheckReport grad_check_report(const std::function<Var<double>()>& f, std::vector<Var<double>> inputs,
                                  const GradCheckOptions& opts, double tolerance);

}  // namespace mgan
