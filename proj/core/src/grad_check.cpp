#include "scarn/grad_check.hpp"

#include <cmath>
#include <sstream>

#include "scarn/error.hpp"

namespace scarn {

std::string GradCheckReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " max_rel_error=" << max_rel_error
     << " tolerance=" << tolerance;
  for (const auto& e : per_param) os << " " << e.name << "=" << e.max_rel_error;
  return os.str();
}

GradCheckReport finite_diff_check(const std::function<double()>& loss_fn,
                                  const std::vector<NamedParam>& params,
                                  const std::vector<Tensor>& analytic, double epsilon,
                                  double tolerance) {
  if (epsilon < 1e-7 || epsilon > 1e-4) {
    throw ArgumentError("finite_diff_check epsilon must lie in [1e-7, 1e-4], got " +
                        std::to_string(epsilon));
  }
  if (params.size() != analytic.size()) {
    throw ArgumentError("finite_diff_check: " + std::to_string(params.size()) +
                        " params but " + std::to_string(analytic.size()) + " gradients");
  }
  const double base1 = loss_fn();
  const double base2 = loss_fn();
  if (base1 != base2) {
    throw ContractError("finite_diff_check: loss_fn is not deterministic (" +
                        std::to_string(base1) + " vs " + std::to_string(base2) + ")");
  }

  GradCheckReport report;
  report.tolerance = tolerance;
  for (size_t p = 0; p < params.size(); ++p) {
    Tensor& t = *params[p].tensor;
    const Tensor& g = analytic[p];
    if (!t.same_shape(g)) {
      throw DimensionError("finite_diff_check: gradient shape " + g.shape_string() +
                           " does not match parameter " + params[p].name + " shape " +
                           t.shape_string());
    }
    double worst = 0.0;
    for (int i = 0; i < t.size(); ++i) {
      const double saved = t[i];
      t[i] = saved + epsilon;
      const double up = loss_fn();
      t[i] = saved - epsilon;
      const double down = loss_fn();
      t[i] = saved;
      const double numeric = (up - down) / (2.0 * epsilon);
      const double analytic_v = g[i];
      const double denom =
          std::max({std::fabs(analytic_v), std::fabs(numeric), 1e-8});
      const double rel = std::fabs(analytic_v - numeric) / denom;
      worst = std::max(worst, rel);
    }
    report.per_param.push_back({params[p].name, worst});
    report.max_rel_error = std::max(report.max_rel_error, worst);
  }
  report.pass = report.max_rel_error < tolerance;
  return report;
}

}  // namespace scarn
