#include "scarn/adam.hpp"

#include <cmath>

#include "scarn/error.hpp"

namespace scarn {

void adam_step(Tensor& param, const Tensor& grad, AdamState& state) {
  if (!param.same_shape(grad) || !param.same_shape(state.m) || !param.same_shape(state.v)) {
    throw DimensionError("adam_step shape mismatch: param " + param.shape_string() + ", grad " +
                         grad.shape_string() + ", m " + state.m.shape_string() + ", v " +
                         state.v.shape_string());
  }
  state.t += 1;
  const AdamConfig& c = state.config;
  const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.t));
  const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.t));
  double* p = param.data();
  const double* g = grad.data();
  double* m = state.m.data();
  double* v = state.v.data();
  const int n = param.size();
  for (int i = 0; i < n; ++i) {
    m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g[i];
    v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g[i] * g[i];
    const double mhat = m[i] / bc1;
    const double vhat = v[i] / bc2;
    p[i] -= c.lr * mhat / (std::sqrt(vhat) + c.eps);
  }
}

}  // namespace scarn
