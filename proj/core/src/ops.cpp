#include "scarn/ops.hpp"

#include <algorithm>
#include <cmath>

#include "scarn/error.hpp"

namespace scarn {

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.rank() != 2 || b.rank() != 2) {
    throw DimensionError("matmul expects rank-2 tensors, got " + a.shape_string() + " and " +
                         b.shape_string());
  }
  if (a.dim(1) != b.dim(0)) {
    throw DimensionError("matmul shape mismatch: " + a.shape_string() + " x " +
                         b.shape_string());
  }
  const int m = a.dim(0), k = a.dim(1), n = b.dim(1);
  Tensor out({m, n});
  for (int i = 0; i < m; ++i) {
    const double* arow = a.row(i);
    double* orow = out.row(i);
    for (int p = 0; p < k; ++p) {
      const double av = arow[p];
      const double* brow = b.row(p);
      for (int j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  return out;
}

Tensor softmax(const Tensor& v) {
  if (v.rank() != 1 || v.size() == 0) {
    throw ArgumentError("softmax expects a non-empty rank-1 tensor, got " + v.shape_string());
  }
  const int n = v.size();
  Tensor out({n});
  double mx = v[0];
  for (int i = 1; i < n; ++i) mx = std::max(mx, v[i]);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    out[i] = std::exp(v[i] - mx);
    sum += out[i];
  }
  for (int i = 0; i < n; ++i) out[i] /= sum;
  return out;
}

void axpy(double alpha, const Tensor& x, Tensor& y) {
  if (!x.same_shape(y)) {
    throw DimensionError("axpy shape mismatch: " + x.shape_string() + " vs " + y.shape_string());
  }
  const double* xs = x.data();
  double* ys = y.data();
  const int n = x.size();
  for (int i = 0; i < n; ++i) ys[i] += alpha * xs[i];
}

double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace scarn
