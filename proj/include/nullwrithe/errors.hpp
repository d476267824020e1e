#pragma once

#include <stdexcept>
#include <string>

namespace nullwrithe {

/// Base class of every error raised by the library. `kind()` is a stable
/// short identifier used in diagnostics and JSON output.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept = 0;
  /// Throws an error of the same dynamic type with `prefix` prepended.
  [[noreturn]] virtual void rethrow_with_context(const std::string& prefix) const = 0;
};

#define NULLWRITHE_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(what) {}            \
    const char* kind() const noexcept override { return #Name; }       \
    [[noreturn]] void rethrow_with_context(                            \
        const std::string& prefix) const override {                    \
      throw Name(prefix + what());                                     \
    }                                                                  \
  };

// Input errors (CLI exit code 2).
NULLWRITHE_DEFINE_ERROR(SyntaxError)
NULLWRITHE_DEFINE_ERROR(ArcConsistencyError)
NULLWRITHE_DEFINE_ERROR(DegenerateError)
NULLWRITHE_DEFINE_ERROR(LoopEdgeError)
NULLWRITHE_DEFINE_ERROR(DuplicateNameError)

// Precondition failures of the verifiers.
NULLWRITHE_DEFINE_ERROR(NotAlternatingError)
NULLWRITHE_DEFINE_ERROR(NotApplicableError)

// File access (CLI exit code 3).
NULLWRITHE_DEFINE_ERROR(IoError)

#undef NULLWRITHE_DEFINE_ERROR

}  // namespace nullwrithe
