#ifndef SCARN_GRAD_CHECK_HPP_
#define SCARN_GRAD_CHECK_HPP_

#include <functional>
#include <string>
#include <vector>

#include "scarn/tensor.hpp"

namespace scarn {

struct NamedParam {
  std::string name;
  Tensor* tensor;
};

struct GradCheckReport {
  struct Entry {
    std::string name;
    double max_rel_error;
  };
  std::vector<Entry> per_param;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  std::string summary() const;
};

// Central-difference gradient check. loss_fn must be a deterministic scalar
// function of the parameter tensors (dropout disabled or mask-frozen); it is
// evaluated twice at the base point first, and a mismatch raises
// ContractError. analytic holds one gradient tensor per entry of params, in
// the same order. Relative error is |a - n| / max(|a|, |n|, 1e-8) per
// element; the report carries the max per parameter and overall.
GradCheckReport finite_diff_check(const std::function<double()>& loss_fn,
                                  const std::vector<NamedParam>& params,
                                  const std::vector<Tensor>& analytic, double epsilon,
                                  double tolerance);

}  // namespace scarn

#endif  // SCARN_GRAD_CHECK_HPP_
