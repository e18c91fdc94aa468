#pragma once

#include "symleaf/satake.hpp"
#include "symleaf/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symleaf {

/// Leaf invariants attached to one twisted involution psi.
///
/// With m = matrix(psi) * tau*, a is the dimension of the +1-eigenspace of m
/// and t that of the -1-eigenspace; codim_Y = l(psi w_b w0) is the real
/// codimension of the corresponding orbits on the flag variety.
struct OrbitClass {
  WeylElement psi;
  int codim_Y = 0;
  int t = 0;
  int a = 0;
  int orbit_dim = 0;
  int leaf_dim = 0;
  int leaf_codim = 0;
  int family_dim = 0;
  bool is_open = false;
  bool is_closed_class = false;
  bool parity_ok = false;  // leaf_dim even
  bool bounds_ok = false;  // codim_Y <= l(w0) - l(w_b) and 0 <= leaf_dim <= dim_X

  bool realizable_candidate() const { return parity_ok && bounds_ok; }
};

struct AtlasReport {
  SatakeDiagram diagram;
  RealFormData form;
  int rank = 0;
  int num_positive_roots = 0;
  std::vector<OrbitClass> classes;
  bool has_open_leaves = false;
  std::size_t largest_leaf_class = 0;  // index into classes
  std::vector<std::string> notes;
};

/// All w in W with (matrix(w) * tau*)^2 = 1, in shortlex order of words.
std::vector<WeylElement> twisted_involutions(const RealForm& form, std::size_t cap = kDefaultWeylCap);

/// Throws NotTwistedInvolution when (psi tau*)^2 != 1.
OrbitClass orbit_class(const RealForm& form, const WeylElement& psi);

/// True iff the class of w0 w_b has a = 0, i.e. w0 sigma has no fixed vector.
bool open_leaf_test(const RealForm& form);

/// Second route for open_leaf_test: dim ker(matrix(w0) * matrix(sigma) - 1).
int compact_cartan_defect(const RealForm& form);

AtlasReport atlas(const RealForm& form, std::size_t cap = kDefaultWeylCap);
AtlasReport atlas(const SatakeDiagram& sd, std::size_t cap = kDefaultWeylCap);

/// Smallest leaf codimension over classes passing both the parity and the bounds test.
std::optional<int> min_realizable_leaf_codim(const AtlasReport& report);

}  // namespace symleaf
