#pragma once

#include <stdexcept>
#include <string>

namespace vsr {

struct ConstraintViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRepresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RationalizationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StepTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vsr
