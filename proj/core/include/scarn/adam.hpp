#ifndef SCARN_ADAM_HPP_
#define SCARN_ADAM_HPP_

#include <cstdint>

#include "scarn/tensor.hpp"

namespace scarn {

struct AdamConfig {
  double lr = 0.0003;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Per-parameter Adam state: first and second moment estimates plus the step
// counter, which increases by exactly one per adam_step call.
struct AdamState {
  AdamState() = default;
  AdamState(const std::vector<int>& shape, AdamConfig cfg)
      : m(Tensor::zeros(shape)), v(Tensor::zeros(shape)), t(0), config(cfg) {}

  Tensor m;
  Tensor v;
  int64_t t = 0;
  AdamConfig config;
};

// One Adam update with bias correction:
//   m <- b1*m + (1-b1)*g;  v <- b2*v + (1-b2)*g^2
//   param <- param - lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
void adam_step(Tensor& param, const Tensor& grad, AdamState& state);

}  // namespace scarn

#endif  // SCARN_ADAM_HPP_
