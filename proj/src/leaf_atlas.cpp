#include "symleaf/leaf_atlas.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>

namespace symleaf {

std::vector<WeylElement> twisted_involutions(const RealForm& form, std::size_t cap) {
  const IntMatrix& tau = form.data().tau_star;
  const IntMatrix id = IntMatrix::Identity(tau.rows(), tau.cols());
  std::vector<WeylElement> out;
  for (auto& w : enumerate_weyl(form.roots(), cap)) {
    const IntMatrix m = w.matrix() * tau;
    if (m * m == id) out.push_back(std::move(w));
  }
  return out;
}

OrbitClass orbit_class(const RealForm& form, const WeylElement& psi) {
  const RootSystem& rs = form.roots();
  const RealFormData& rf = form.data();
  const int r = rs.rank();
  const IntMatrix id = IntMatrix::Identity(r, r);
  const IntMatrix m = psi.matrix() * rf.tau_star;
  if (m * m != id) throw NotTwistedInvolution();

  OrbitClass c;
  c.psi = psi;
  c.a = static_cast<int>(exact_nullity(IntMatrix(m - id)));
  c.t = static_cast<int>(exact_nullity(IntMatrix(m + id)));
  c.codim_Y = length(rs, psi * rf.w_b * rf.w0);
  c.orbit_dim = 2 * static_cast<int>(rs.num_positive_roots()) - c.codim_Y;
  c.leaf_dim = c.orbit_dim - rf.dim_k0 + c.t;
  c.leaf_codim = rf.dim_X - c.leaf_dim;
  c.family_dim = c.a;
  c.is_open = c.codim_Y == 0 && c.a == 0;
  c.is_closed_class = psi.matrix() == id;
  c.parity_ok = c.leaf_dim % 2 == 0;
  const int closed_codim = length(rs, rf.w0) - length(rs, rf.w_b);
  c.bounds_ok = c.codim_Y <= closed_codim && c.leaf_dim >= 0 && c.leaf_dim <= rf.dim_X;
  return c;
}

bool open_leaf_test(const RealForm& form) {
  const auto& rf = form.data();
  return orbit_class(form, rf.w0 * rf.w_b).a == 0;
}

int compact_cartan_defect(const RealForm& form) {
  const auto& rf = form.data();
  const int r = form.roots().rank();
  IntMatrix sigma = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) sigma(rf.sigma[static_cast<std::size_t>(i)] - 1, i) = 1;
  return static_cast<int>(exact_nullity(IntMatrix(rf.w0.matrix() * sigma - IntMatrix::Identity(r, r))));
}

AtlasReport atlas(const RealForm& form, std::size_t cap) {
  AtlasReport report;
  report.diagram = form.diagram();
  report.form = form.data();
  report.rank = form.roots().rank();
  report.num_positive_roots = static_cast<int>(form.roots().num_positive_roots());

  for (const auto& psi : twisted_involutions(form, cap)) report.classes.push_back(orbit_class(form, psi));
  std::stable_sort(report.classes.begin(), report.classes.end(), [](const OrbitClass& x, const OrbitClass& y) {
    if (x.codim_Y != y.codim_Y) return x.codim_Y < y.codim_Y;
    return std::lexicographical_compare(x.psi.word().begin(), x.psi.word().end(), y.psi.word().begin(),
                                        y.psi.word().end());
  });

  report.has_open_leaves = std::any_of(report.classes.begin(), report.classes.end(),
                                       [](const OrbitClass& c) { return c.is_open; });
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    if (report.has_open_leaves) {
      if (c.is_open) {
        best = i;
        break;
      }
    } else if (c.realizable_candidate() && (!best || c.leaf_codim < report.classes[*best].leaf_codim)) {
      best = i;
    }
  }
  report.largest_leaf_class = best.value_or(0);

  auto& notes = report.notes;
  notes.push_back("every symplectic leaf is contractible");
  notes.push_back("codim_Y = l(psi w_b w0) is the real codimension of the flag-variety orbits with invariant psi");
  notes.push_back("leaf_dim = orbit_dim - dim_k0 + t and leaf_codim = a + codim_Y");
  notes.push_back("the leaves of one class are permuted by the torus T; family_dim = a is the dimension of the quotient torus parameterizing them");
  notes.push_back("classes are keyed by psi; one class may collect several orbits and no orbit count per class is claimed");
  if (report.has_open_leaves) {
    notes.push_back("open leaves exist (g0 has a compact Cartan subalgebra); each open leaf is diffeomorphic to G0/K0");
    notes.push_back("the number of open leaves equals the number of open G0-orbits on the flag variety; that count is not computed here");
  } else {
    notes.push_back("no open leaves (g0 has no compact Cartan subalgebra)");
  }
  notes.push_back("leaves of largest dimension lie over open G0-orbits and are diffeomorphic to A0'N0");
  const auto odd = std::count_if(report.classes.begin(), report.classes.end(),
                                 [](const OrbitClass& c) { return !c.parity_ok; });
  if (odd > 0) {
    notes.push_back("WARNING: " + std::to_string(odd) +
                    " class(es) have odd leaf dimension and cannot carry symplectic leaves; they are kept for transparency");
  }
  const auto out_of_bounds = std::count_if(report.classes.begin(), report.classes.end(),
                                           [](const OrbitClass& c) { return !c.bounds_ok; });
  if (out_of_bounds > 0) {
    notes.push_back("WARNING: " + std::to_string(out_of_bounds) +
                    " class(es) exceed the closed-orbit codimension l(w0) - l(w_b) or have leaf_dim outside [0, dim X]; no orbit has such an invariant and they are kept for transparency");
  }
  notes.push_back("realizability of the remaining classes is not decided here; verify reports explicit witnesses where a matrix realization exists");
  return report;
}

AtlasReport atlas(const SatakeDiagram& sd, std::size_t cap) { return atlas(RealForm::analyze(sd), cap); }

std::optional<int> min_realizable_leaf_codim(const AtlasReport& report) {
  std::optional<int> best;
  for (const auto& c : report.classes)
    if (c.realizable_candidate() && (!best || c.leaf_codim < *best)) best = c.leaf_codim;
  return best;
}

}  // namespace symleaf
