#ifndef SCARN_TENSOR_HPP_
#define SCARN_TENSOR_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace scarn {

// Dense row-major tensor of doubles, rank 1 to 3. Values are stored in a
// flat buffer; an optional gradient buffer of the same size can be attached
// for parameter tensors.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, double value);
  // Rank-1 tensor from values.
  static Tensor vector(std::vector<double> values);
  // Rank-2 tensor from nested rows; all rows must have equal length.
  static Tensor matrix(std::initializer_list<std::initializer_list<double>> rows);

  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  int dim(int axis) const;
  int size() const { return static_cast<int>(data_.size()); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  double& operator[](int i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int i) const { return data_[static_cast<size_t>(i)]; }

  // Checked element access.
  double& at(int i);
  double at(int i) const;
  double& at(int i, int j);
  double at(int i, int j) const;
  double& at(int i, int j, int k);
  double at(int i, int j, int k) const;

  // Unchecked rank-2 row pointer.
  double* row(int i) { return data_.data() + static_cast<size_t>(i) * shape_[1]; }
  const double* row(int i) const { return data_.data() + static_cast<size_t>(i) * shape_[1]; }

  // Gradient buffer, allocated on demand and zero-filled.
  bool has_grad() const { return !grad_.empty(); }
  void ensure_grad();
  void zero_grad();
  double* grad() { return grad_.data(); }
  const double* grad() const { return grad_.data(); }
  std::vector<double>& grad_values() { return grad_; }
  const std::vector<double>& grad_values() const { return grad_; }

  void fill(double value);
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  // True when every stored value is finite.
  bool all_finite() const;

  std::string shape_string() const;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
  std::vector<double> grad_;
};

std::string shape_to_string(const std::vector<int>& shape);

}  // namespace scarn

#endif  // SCARN_TENSOR_HPP_
