#pragma once

#include <stdexcept>
#include <string>

namespace conekit {

// Error taxonomy shared by all modules. The CLI maps kinds to exit codes:
// input/precondition problems -> 2, legitimate negative verdicts
// (infeasibility, missing surjectivity) -> 1, internal solver trouble -> 3.
enum class ErrorKind {
  InputError,
  NotPolyhedral,
  SolverError,
  NotDecomposable,
  EmptyIntersection,
  NotGenerating,
  NotCoadditive,
  WitnessNotFound,
  PreconditionError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Exit-code semantics used by the CLI and documented in the README.
  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::NotDecomposable:
      case ErrorKind::EmptyIntersection:
      case ErrorKind::NotGenerating:
      case ErrorKind::NotCoadditive:
        return 1;
      case ErrorKind::InputError:
      case ErrorKind::NotPolyhedral:
      case ErrorKind::PreconditionError:
        return 2;
      case ErrorKind::SolverError:
      case ErrorKind::WitnessNotFound:
        return 3;
    }
    return 3;
  }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::NotPolyhedral: return "NotPolyhedral";
    case ErrorKind::SolverError: return "SolverError";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotCoadditive: return "NotCoadditive";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::PreconditionError: return "PreconditionError";
  }
  return "UnknownError";
}

}  // namespace conekit
