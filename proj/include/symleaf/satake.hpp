#pragma once

#include "symleaf/root_system.hpp"
#include "symleaf/weyl.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symleaf {

/// Dynkin diagram decorated with black nodes and arrows (1-based node
/// indices). Arrows are unordered pairs stored as (smaller, larger).
struct SatakeDiagram {
  std::string label;
  CartanType type;
  std::set<int> black;
  std::vector<std::pair<int, int>> arrows;

  bool is_compact() const { return static_cast<int>(black.size()) == type.rank && arrows.empty(); }
};

/// A restricted root lambda = (alpha + tau* alpha) / 2, stored doubled so the
/// coordinates stay integral.
struct RestrictedRoot {
  IntVector doubled;
  int multiplicity = 0;

  /// Coordinates as exact fractions, e.g. {"1/2", "1/2"}.
  std::vector<std::string> coordinates() const;
};

struct RealFormData {
  IntMatrix tau_star;
  std::vector<int> sigma;  // sigma[i - 1] is the image of node i
  WeylElement w0;
  WeylElement w_b;
  std::vector<RestrictedRoot> restricted_roots;  // both signs, sorted
  int positive_multiplicity = 0;                 // sum over the positive side
  int real_rank = 0;
  int dim_g = 0;
  int dim_k0 = 0;
  int dim_p0 = 0;
  int dim_X = 0;
};

/// Node permutation: the arrow pairing on white nodes and the opposition
/// involution on each connected black component.
std::vector<int> diagram_involution(const RootSystem& rs, const SatakeDiagram& sd);

/// Longest element of the subgroup generated by the black nodes.
WeylElement w_b(const RootSystem& rs, const SatakeDiagram& sd);

/// Involution part of the real-form data: sigma, w_b, w0 and
/// tau* = matrix(w_b) * matrix(sigma). Throws InconsistentSatakeData when
/// tau* is not an involution of the root system, does not negate exactly the
/// black simple roots, or sends a positive root outside the black span to a
/// negative root.
RealFormData tau_star(const RootSystem& rs, const SatakeDiagram& sd);

/// Fills restricted_roots, positive_multiplicity and real_rank.
void restricted_roots(const RootSystem& rs, RealFormData& rf);

/// Fills dim_g, dim_k0, dim_p0, dim_X. Needs restricted_roots first.
void dims(const RootSystem& rs, RealFormData& rf);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::string label;
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* first_failure() const;
};

/// Runs every structural check on a diagram. Failures are data.
ValidationReport validate(const SatakeDiagram& sd);

/// A diagram that passed validation, bundled with its root system and data.
class RealForm {
 public:
  /// Throws CompactRealForm, InconsistentSatakeData, or UnsupportedCartanType.
  static RealForm analyze(const SatakeDiagram& sd);

  const SatakeDiagram& diagram() const { return diagram_; }
  const RootSystem& roots() const { return roots_; }
  const RealFormData& data() const { return data_; }
  const std::string& label() const { return diagram_.label; }

 private:
  RealForm(SatakeDiagram sd, RootSystem rs, RealFormData data)
      : diagram_(std::move(sd)), roots_(std::move(rs)), data_(std::move(data)) {}

  SatakeDiagram diagram_;
  RootSystem roots_;
  RealFormData data_;
};

}  // namespace symleaf
