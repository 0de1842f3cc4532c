#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ein2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family parameter point violates one of the family's (in)equalities.
class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(std::string constraint)
      : Error(constraint + " violated"), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

class UnknownFamily : public Error {
 public:
  explicit UnknownFamily(const std::string& name) : Error("unknown family '" + name + "'") {}
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("structure constants not antisymmetric at c^" + std::to_string(k + 1) + "_" +
              std::to_string(i + 1) + std::to_string(j + 1)),
        index_{i, j, k} {}
  /// Zero-based (i, j, k) of the offending c^k_ij.
  const std::array<std::size_t, 3>& index() const { return index_; }

 private:
  std::array<std::size_t, 3> index_;
};

class NotLieAlgebra : public Error {
 public:
  NotLieAlgebra() : Error("structure constants fail the Jacobi identity") {}
};

class EmptyBranch : public Error {
 public:
  explicit EmptyBranch(const std::string& branch)
      : Error("no valid sample found for branch " + branch) {}
};

}  // namespace ein2
