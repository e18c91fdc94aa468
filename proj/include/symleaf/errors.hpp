#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symleaf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedCartanType : public Error {
 public:
  explicit UnsupportedCartanType(const std::string& what)
      : Error("unsupported Cartan type: " + what) {}
};

class WeylCapExceeded : public Error {
 public:
  WeylCapExceeded(std::size_t partial_count, std::size_t cap)
      : Error("Weyl group exceeds cap " + std::to_string(cap) + " (enumerated " +
              std::to_string(partial_count) + " elements before stopping)"),
        partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

class CatalogParseError : public Error {
 public:
  CatalogParseError(int line, const std::string& what)
      : Error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InconsistentSatakeData : public Error {
 public:
  explicit InconsistentSatakeData(const std::string& what)
      : Error("inconsistent Satake data: " + what) {}
};

class CompactRealForm : public Error {
 public:
  explicit CompactRealForm(const std::string& label)
      : Error("compact real form '" + label + "' has no noncompact dual; U/K0 degenerates to a point") {}
};

class NotTwistedInvolution : public Error {
 public:
  NotTwistedInvolution() : Error("not a twisted involution") {}
};

class NonUnitaryInput : public Error {
 public:
  explicit NonUnitaryInput(double residual)
      : Error("input is not special unitary (residual " + std::to_string(residual) + ")") {}
};

class IllConditioned : public Error {
 public:
  explicit IllConditioned(double condition)
      : Error("matrix is ill-conditioned (condition estimate " + std::to_string(condition) + ")") {}
};

class ChartSingularity : public Error {
 public:
  ChartSingularity() : Error("chart singularity") {}
  explicit ChartSingularity(const std::string& detail) : Error("chart singularity: " + detail) {}
};

class NotHermitian : public Error {
 public:
  NotHermitian() : Error("not Hermitian symmetric") {}
  explicit NotHermitian(const std::string& label) : Error("not Hermitian symmetric: " + label) {}
};

class NoMatrixRealization : public Error {
 public:
  explicit NoMatrixRealization(const std::string& label)
      : Error("no matrix realization shipped for '" + label + "'") {}
};

}  // namespace symleaf
