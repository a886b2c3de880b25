#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet_rkhs {

/// Base of every error raised by the library. `name()` is the stable
/// machine-readable tag reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define DIRICHLET_RKHS_ERROR(Type)                                  \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {}  \
  }

DIRICHLET_RKHS_ERROR(DomainError);
DIRICHLET_RKHS_ERROR(PoleError);
DIRICHLET_RKHS_ERROR(ConvergenceError);
DIRICHLET_RKHS_ERROR(NumericalError);
DIRICHLET_RKHS_ERROR(SizeError);
DIRICHLET_RKHS_ERROR(IllConditionedError);
DIRICHLET_RKHS_ERROR(ExhaustionError);

#undef DIRICHLET_RKHS_ERROR

}  // namespace dirichlet_rkhs
