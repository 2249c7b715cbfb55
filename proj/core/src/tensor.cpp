#include "scarn/tensor.hpp"

#include <cmath>
#include <sstream>

#include "scarn/error.hpp"

namespace scarn {

namespace {

size_t checked_size(const std::vector<int>& shape) {
  if (shape.empty() || shape.size() > 3) {
    throw ArgumentError("tensor rank must be 1..3, got shape " + shape_to_string(shape));
  }
  size_t n = 1;
  for (int d : shape) {
    if (d <= 0) {
      throw ArgumentError("tensor dimensions must be positive, got shape " +
                          shape_to_string(shape));
    }
    n *= static_cast<size_t>(d);
  }
  return n;
}

}  // namespace

std::string shape_to_string(const std::vector<int>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ", ";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  data_.assign(checked_size(shape_), 0.0);
}

Tensor Tensor::zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<int> shape, double value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

Tensor Tensor::vector(std::vector<double> values) {
  if (values.empty()) throw ArgumentError("tensor vector literal must be non-empty");
  Tensor t;
  t.shape_ = {static_cast<int>(values.size())};
  t.data_ = std::move(values);
  return t;
}

Tensor Tensor::matrix(std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() == 0) throw ArgumentError("tensor matrix literal must be non-empty");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  Tensor t({r, c});
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw ArgumentError("tensor matrix literal has ragged rows");
    }
    int j = 0;
    for (double v : row) t.at(i, j++) = v;
    ++i;
  }
  return t;
}

int Tensor::dim(int axis) const {
  if (axis < 0 || axis >= rank()) {
    throw IndexError("axis " + std::to_string(axis) + " out of range for shape " +
                     shape_string());
  }
  return shape_[axis];
}

double& Tensor::at(int i) {
  if (rank() != 1) throw DimensionError("rank-1 access on shape " + shape_string());
  if (i < 0 || i >= shape_[0]) {
    throw IndexError("index " + std::to_string(i) + " out of range for shape " + shape_string());
  }
  return data_[static_cast<size_t>(i)];
}

double Tensor::at(int i) const { return const_cast<Tensor*>(this)->at(i); }

double& Tensor::at(int i, int j) {
  if (rank() != 2) throw DimensionError("rank-2 access on shape " + shape_string());
  if (i < 0 || i >= shape_[0] || j < 0 || j >= shape_[1]) {
    throw IndexError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") out of range for shape " + shape_string());
  }
  return data_[static_cast<size_t>(i) * shape_[1] + j];
}

double Tensor::at(int i, int j) const { return const_cast<Tensor*>(this)->at(i, j); }

double& Tensor::at(int i, int j, int k) {
  if (rank() != 3) throw DimensionError("rank-3 access on shape " + shape_string());
  if (i < 0 || i >= shape_[0] || j < 0 || j >= shape_[1] || k < 0 || k >= shape_[2]) {
    throw IndexError("index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(k) + ") out of range for shape " + shape_string());
  }
  return data_[(static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k];
}

double Tensor::at(int i, int j, int k) const { return const_cast<Tensor*>(this)->at(i, j, k); }

void Tensor::ensure_grad() {
  if (grad_.empty()) grad_.assign(data_.size(), 0.0);
}

void Tensor::zero_grad() {
  if (grad_.empty()) {
    grad_.assign(data_.size(), 0.0);
  } else {
    std::fill(grad_.begin(), grad_.end(), 0.0);
  }
}

void Tensor::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::shape_string() const { return shape_to_string(shape_); }

}  // namespace scarn
