#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fnls {

// Bad arguments or violated preconditions. The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failures discovered while a computation runs (blow-up, lost resolution,
// wrap-around, non-contraction). The CLI maps these to exit code 2.
class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BlowUpError : public RuntimeFailure {
 public:
  BlowUpError(double time_reached, const std::string& detail)
      : RuntimeFailure("blow-up guard tripped at t=" + std::to_string(time_reached) + ": " +
                       detail),
        time_reached_(time_reached) {}
  double time_reached() const { return time_reached_; }

 private:
  double time_reached_;
};

class ResolutionError : public RuntimeFailure {
 public:
  using RuntimeFailure::RuntimeFailure;
};

class WrapAroundError : public RuntimeFailure {
 public:
  using RuntimeFailure::RuntimeFailure;
};

class NonContractionError : public RuntimeFailure {
 public:
  using RuntimeFailure::RuntimeFailure;
};

// Wraps a failure from one stage of a multi-stage pipeline so the caller sees
// which stage failed.
class StageError : public RuntimeFailure {
 public:
  StageError(std::string stage, const std::string& what)
      : RuntimeFailure(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace fnls
