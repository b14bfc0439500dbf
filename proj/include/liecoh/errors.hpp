#ifndef LIECOH_ERRORS_HPP
#define LIECOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecoh {

// Base type for every computational failure the library reports.
// CLI maps these to exit status 1; usage problems map to 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotNilpotentError : Error {
  explicit NotNilpotentError(const std::string& msg) : Error(msg) {}
};

struct NotUnipotentError : Error {
  explicit NotUnipotentError(const std::string& msg) : Error(msg) {}
};

struct InconsistentError : Error {
  explicit InconsistentError(const std::string& msg) : Error(msg) {}
};

struct InconsistentConstantsError : Error {
  explicit InconsistentConstantsError(const std::string& msg) : Error(msg) {}
};

struct NotCocycleError : Error {
  explicit NotCocycleError(const std::string& msg) : Error(msg) {}
};

struct NoVacuumError : Error {
  explicit NoVacuumError(const std::string& msg) : Error(msg) {}
};

struct NotAnExtensionError : Error {
  explicit NotAnExtensionError(const std::string& msg) : Error(msg) {}
};

struct WindowOverflowError : Error {
  explicit WindowOverflowError(const std::string& msg) : Error(msg) {}
};

struct LogOutsidePositivePartError : Error {
  explicit LogOutsidePositivePartError(const std::string& msg) : Error(msg) {}
};

struct SolverInconsistentError : Error {
  explicit SolverInconsistentError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace liecoh

#endif
