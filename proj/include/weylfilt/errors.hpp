#pragma once

#include <stdexcept>
#include <string>

namespace weylfilt {

// Error taxonomy shared by the library and the CLI exit codes:
//   domain (1)      -- invalid input or out-of-range request
//   resource (2)    -- a configured cap was exceeded
//   consistency (3) -- an internal cross-check failed
enum class ErrorKind { domain = 1, resource = 2, consistency = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class DomainError : public Error {
public:
  explicit DomainError(std::string message) : Error(ErrorKind::domain, std::move(message)) {}
};

class ResourceError : public Error {
public:
  explicit ResourceError(std::string message) : Error(ErrorKind::resource, std::move(message)) {}
};

class ConsistencyError : public Error {
public:
  explicit ConsistencyError(std::string message) : Error(ErrorKind::consistency, std::move(message)) {}
};

inline int exit_code(const Error& e) { return static_cast<int>(e.kind()); }

}  // namespace weylfilt
