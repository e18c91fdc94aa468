#pragma once

#include "symleaf/leaf_atlas.hpp"
#include "symleaf/matrix_real_form.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symleaf {

/// Named numerical tolerances with defaults; every entry can be overridden.
class Tolerances {
 public:
  Tolerances();
  double operator[](const std::string& name) const;
  /// Throws std::invalid_argument for unknown names or non-positive values.
  void set(const std::string& name, double value);
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct VerifyOptions {
  int samples = 100;
  std::uint64_t seed = 42;
  Tolerances tol;
  int search_depth = 4;
};

struct VerifyCheck {
  std::string name;
  double value = 0.0;      // residual, or mismatch count for discrete checks
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// Outcome of the representative search for one class.
struct ClassWitness {
  std::string psi_word;
  bool found = false;
  int expected_an = 0;   // a + codim_Y
  int expected_tan = 0;  // t + a + codim_Y
  int an = 0;
  int tan = 0;
  int numeric_t = 0;
  int numeric_a = 0;
  int bivector_rank = 0;
  int orbit_rank = 0;
  double tangency = 0.0;
};

struct RankSummary {
  int samples = 0;
  int max_rank = 0;
  int expected_max_rank = 0;
  int dim_X = 0;
  int near_threshold = 0;
  std::map<int, int> histogram;
};

struct HermitianSummary {
  double b = 0.0;
  double b_refit = 0.0;
  double residual = 0.0;
};

struct VerifyReport {
  std::string form;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::vector<VerifyCheck> checks;
  RankSummary ranks;
  std::vector<ClassWitness> witnesses;
  std::optional<HermitianSummary> hermitian;

  bool ok() const;
};

/// Runs the check battery on a shipped realization. The atlas supplies the
/// exact invariants the numerics are compared against.
VerifyReport run_verify(const MatrixRealForm& rf, const RealForm& form, const VerifyOptions& opts);

}  // namespace symleaf
