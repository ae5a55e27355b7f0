#pragma once

#include <stdexcept>
#include <string>

namespace lsd {

// Periodicity detection could not produce a stable answer (chain too short,
// or no stabilization within the doubling cap).
class DetectionError : public std::runtime_error {
 public:
  explicit DetectionError(const std::string& what) : std::runtime_error(what) {}
};

// The iterative eigensolver failed to converge for some eigenvalue index.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// File read/write failure; `what()` names the offending path.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lsd
