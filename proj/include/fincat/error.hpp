#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fincat {

enum class ErrorCode {
  structural,     // dangling ids, malformed presentation
  composability,  // compose() on a non-composable pair
  contract,       // precondition of an operation violated
  capacity,       // enumeration / carrier budget exceeded
  parse,          // DSL text rejected
  usage,          // bad command line / command arguments
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what)
      : Error(ErrorCode::structural, what) {}
};

class ComposabilityError : public Error {
 public:
  explicit ComposabilityError(const std::string& what)
      : Error(ErrorCode::composability, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorCode::contract, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ErrorCode::capacity, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::usage, what) {}
};

}  // namespace fincat
