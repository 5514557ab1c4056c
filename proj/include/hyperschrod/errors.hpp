#pragma once

#include <stdexcept>
#include <string>

namespace hyperschrod {

// Error taxonomy. `kind` drives the CLI exit code: bad input (2) vs. a
// numerical failure discovered mid-computation (3).
enum class ErrorKind { Input, Numeric };

class Error : public std::runtime_error {
public:
  Error(std::string code, ErrorKind kind, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)), kind_(kind) {}
  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

private:
  std::string code_;
  ErrorKind kind_;
};

struct UnsupportedSpace : Error {
  explicit UnsupportedSpace(const std::string& w) : Error("UNSUPPORTED_SPACE", ErrorKind::Input, w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error("DOMAIN_ERROR", ErrorKind::Input, w) {}
};

struct ParamError : Error {
  explicit ParamError(const std::string& w) : Error("PARAM_ERROR", ErrorKind::Input, w) {}
};

struct GridError : Error {
  explicit GridError(const std::string& w) : Error("GRID_MISMATCH", ErrorKind::Input, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error("IO_ERROR", ErrorKind::Input, w) {}
};

struct PoleError : Error {
  explicit PoleError(const std::string& w) : Error("POLE", ErrorKind::Numeric, w) {}
};

struct DensityUndefined : Error {
  explicit DensityUndefined(const std::string& w) : Error("DENSITY_UNDEFINED", ErrorKind::Numeric, w) {}
};

struct XiAccuracyError : Error {
  explicit XiAccuracyError(const std::string& w) : Error("XI_ACCURACY", ErrorKind::Numeric, w) {}
};

struct KernelUndefined : Error {
  explicit KernelUndefined(const std::string& w) : Error("KERNEL_UNDEFINED", ErrorKind::Numeric, w) {}
};

struct FitError : Error {
  explicit FitError(const std::string& w) : Error("FIT_ERROR", ErrorKind::Numeric, w) {}
};

struct NonFiniteError : Error {
  explicit NonFiniteError(const std::string& w) : Error("NONFINITE", ErrorKind::Numeric, w) {}
};

} // namespace hyperschrod
