#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmg {

/// A violated precondition on physical or numerical inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request the implementation refuses for size reasons (dense oracle).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain error raised while evaluating one point of a sweep.
class SweepPointError : public DomainError {
 public:
  SweepPointError(std::size_t index, const std::string& what)
      : DomainError("grid index " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace lmg
