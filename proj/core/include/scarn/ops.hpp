#ifndef SCARN_OPS_HPP_
#define SCARN_OPS_HPP_

#include <cmath>

#include "scarn/tensor.hpp"

namespace scarn {

// Standard matrix product of two rank-2 tensors; shapes [m,k] x [k,n] -> [m,n].
Tensor matmul(const Tensor& a, const Tensor& b);

// Numerically stable softmax of a rank-1 tensor (max subtraction before exp).
Tensor softmax(const Tensor& v);

// y += alpha * x, elementwise over equal-shaped tensors.
void axpy(double alpha, const Tensor& x, Tensor& y);

double dot(const double* a, const double* b, int n);

inline double sigmoid(double x) {
  if (x >= 0) {
    const double z = std::exp(-x);
    return 1.0 / (1.0 + z);
  }
  const double z = std::exp(x);
  return z / (1.0 + z);
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace scarn

#endif  // SCARN_OPS_HPP_
