#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tao {

// Validation failures (bad inputs, malformed files, mismatched artifacts).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failures that occur while an otherwise valid computation runs.
struct RuntimeFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProgram : ValidationError {
  using ValidationError::ValidationError;
};
struct BudgetExceeded : RuntimeFault {
  using RuntimeFault::RuntimeFault;
};
struct EmptyTrace : ValidationError {
  using ValidationError::ValidationError;
};
struct MalformedTrace : ValidationError {
  using ValidationError::ValidationError;
};

struct SequenceMismatch : ValidationError {
  std::size_t position;
  std::string expected;
  std::string found;
  SequenceMismatch(std::size_t pos, std::string exp, std::string got)
      : ValidationError("sequence mismatch at position " + std::to_string(pos) +
                        ": expected " + exp + ", found " + got),
        position(pos),
        expected(std::move(exp)),
        found(std::move(got)) {}
};

struct UnalignedPC : ValidationError {
  using ValidationError::ValidationError;
};
struct UnknownOpcode : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NoGraph : RuntimeFault {
  using RuntimeFault::RuntimeFault;
};
struct SchemaMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct FrozenViolation : RuntimeFault {
  using RuntimeFault::RuntimeFault;
};
struct NonPSD : ValidationError {
  using ValidationError::ValidationError;
};
struct SpaceTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct DegenerateMetrics : ValidationError {
  using ValidationError::ValidationError;
};
struct NegativeLatency : ValidationError {
  using ValidationError::ValidationError;
};
struct PartitionTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct NotImplemented : RuntimeFault {
  using RuntimeFault::RuntimeFault;
};

}  // namespace tao
