#ifndef SCARN_ERROR_HPP_
#define SCARN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace scarn {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatch between tensors (matmul, adam_step, dense, ...).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Invalid argument value (empty input, out-of-range n, bad window, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Index out of range (embedding ids, tensor access).
class IndexError : public Error {
 public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Invalid model/run configuration; lists the offending fields.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Unreadable or unwritable file.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Malformed input data (TSV lines, config JSON); names the location.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Corrupt or incompatible serialized artifact (checkpoints).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Operation requested on a model that lacks the capability (e.g. attention
// export on an attention-free model).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& msg) : Error(msg) {}
};

// A caller-supplied callable violated its contract (e.g. a non-deterministic
// loss function handed to the gradient checker).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Training-time failure (NaN loss); names the epoch and batch.
class TrainingError : public Error {
 public:
  explicit TrainingError(const std::string& msg) : Error(msg) {}
};

}  // namespace scarn

#endif  // SCARN_ERROR_HPP_
