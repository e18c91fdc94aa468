#include "symleaf/satake.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace symleaf {

namespace {

std::vector<std::vector<int>> black_components(const RootSystem& rs, const std::set<int>& black) {
  std::vector<std::vector<int>> components;
  std::set<int> remaining = black;
  while (!remaining.empty()) {
    std::vector<int> component{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t k = 0; k < component.size(); ++k) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (rs.cartan_matrix()(component[k] - 1, *it - 1) != 0) {
          component.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

void check_structure(const RootSystem& rs, const SatakeDiagram& sd) {
  const int r = rs.rank();
  for (int b : sd.black)
    if (b < 1 || b > r) throw InconsistentSatakeData("black node " + std::to_string(b) + " out of range");
  std::set<int> paired;
  for (auto [i, j] : sd.arrows) {
    if (i < 1 || i > r || j < 1 || j > r) throw InconsistentSatakeData("arrow node out of range");
    if (i == j) throw InconsistentSatakeData("arrow joins node " + std::to_string(i) + " to itself");
    if (sd.black.count(i) || sd.black.count(j)) throw InconsistentSatakeData("arrow touches a black node");
    if (!paired.insert(i).second || !paired.insert(j).second)
      throw InconsistentSatakeData("node paired by more than one arrow");
  }
}

bool is_negative(const IntVector& v) { return (v.array() <= 0).all(); }

std::string fraction(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace

std::vector<std::string> RestrictedRoot::coordinates() const {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < doubled.size(); ++i) out.push_back(fraction(doubled(i)));
  return out;
}

std::vector<int> diagram_involution(const RootSystem& rs, const SatakeDiagram& sd) {
  check_structure(rs, sd);
  std::vector<int> sigma(static_cast<std::size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i) sigma[static_cast<std::size_t>(i - 1)] = i;
  for (auto [i, j] : sd.arrows) {
    sigma[static_cast<std::size_t>(i - 1)] = j;
    sigma[static_cast<std::size_t>(j - 1)] = i;
  }
  for (const auto& component : black_components(rs, sd.black)) {
    const WeylElement w = longest_element(rs, std::set<int>(component.begin(), component.end()));
    for (int j : component) {
      const IntVector image = -w.apply(rs.simple_root(j));
      for (int k : component) {
        if (image == rs.simple_root(k)) sigma[static_cast<std::size_t>(j - 1)] = k;
      }
    }
  }
  return sigma;
}

WeylElement w_b(const RootSystem& rs, const SatakeDiagram& sd) { return longest_element(rs, sd.black); }

RealFormData tau_star(const RootSystem& rs, const SatakeDiagram& sd) {
  RealFormData rf;
  const int r = rs.rank();
  rf.sigma = diagram_involution(rs, sd);
  rf.w0 = longest_element(rs);
  rf.w_b = w_b(rs, sd);

  IntMatrix sigma_matrix = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) sigma_matrix(rf.sigma[static_cast<std::size_t>(i)] - 1, i) = 1;
  rf.tau_star = rf.w_b.matrix() * sigma_matrix;

  const IntMatrix& tau = rf.tau_star;
  if (tau * tau != IntMatrix::Identity(r, r)) throw InconsistentSatakeData("tau* is not an involution");
  for (const auto& alpha : rs.positive_roots()) {
    if (!rs.is_root(tau * alpha)) throw InconsistentSatakeData("tau* does not preserve the root system");
  }
  for (int i = 1; i <= r; ++i) {
    const bool negated = tau * rs.simple_root(i) == -rs.simple_root(i);
    if (negated != (sd.black.count(i) > 0)) {
      throw InconsistentSatakeData("tau*(alpha_" + std::to_string(i) + ") = -alpha_" + std::to_string(i) +
                                   " must hold exactly for black nodes");
    }
  }
  for (const auto& alpha : rs.positive_roots()) {
    const IntVector image = tau * alpha;
    if (image != -alpha && is_negative(image))
      throw InconsistentSatakeData("tau* sends a positive root outside the black span to a negative root");
  }
  return rf;
}

void restricted_roots(const RootSystem& rs, RealFormData& rf) {
  const int r = rs.rank();
  const IntMatrix doubled_projection = IntMatrix::Identity(r, r) + rf.tau_star;
  auto less = [](const IntVector& a, const IntVector& b) { return lex_less(a, b); };
  std::map<IntVector, int, decltype(less)> groups(less);
  int positive = 0;
  for (const auto& alpha : rs.positive_roots()) {
    const IntVector image = doubled_projection * alpha;
    if (image.isZero()) continue;
    ++positive;
    ++groups[image];
    ++groups[IntVector(-image)];
  }
  rf.restricted_roots.clear();
  for (auto& [lambda, mult] : groups) rf.restricted_roots.push_back({lambda, mult});
  rf.positive_multiplicity = positive;
  rf.real_rank = static_cast<int>(exact_rank(doubled_projection));
}

void dims(const RootSystem& rs, RealFormData& rf) {
  rf.dim_g = rs.rank() + 2 * static_cast<int>(rs.num_positive_roots());
  rf.dim_p0 = rf.real_rank + rf.positive_multiplicity;
  rf.dim_k0 = rf.dim_g - rf.dim_p0;
  rf.dim_X = rf.dim_p0;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

ValidationReport validate(const SatakeDiagram& sd) {
  ValidationReport report;
  report.label = sd.label;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  std::optional<RootSystem> rs;
  try {
    rs = RootSystem::build(sd.type);
    add("cartan_type", true, sd.type.name());
  } catch (const Error& e) {
    add("cartan_type", false, e.what());
    return report;
  }
  add("noncompact", !sd.is_compact(), sd.is_compact() ? "every node black and no arrows" : "");

  RealFormData rf;
  try {
    rf = tau_star(*rs, sd);
    add("tau_star_admissible", true);
  } catch (const Error& e) {
    add("tau_star_admissible", false, e.what());
    return report;
  }
  restricted_roots(*rs, rf);
  dims(*rs, rf);

  const IntMatrix& tau = rf.tau_star;
  const IntMatrix& w0 = rf.w0.matrix();
  const IntMatrix& wb = rf.w_b.matrix();
  add("tau_commutes_w0", tau * w0 == w0 * tau);
  add("tau_commutes_wb", tau * wb == wb * tau);
  add("w0_commutes_wb", w0 * wb == wb * w0);
  const int l_wbw0 = length(*rs, rf.w_b * rf.w0);
  const int l_w0 = length(*rs, rf.w0);
  const int l_wb = length(*rs, rf.w_b);
  add("length_wb_w0", l_wbw0 == l_w0 - l_wb,
      "l(w_b w0) = " + std::to_string(l_wbw0) + ", l(w0) - l(w_b) = " + std::to_string(l_w0 - l_wb));

  std::ostringstream dims_detail;
  dims_detail << "dim_g=" << rf.dim_g << " dim_k0=" << rf.dim_k0 << " dim_p0=" << rf.dim_p0
              << " real_rank=" << rf.real_rank;
  const bool dims_ok = rf.dim_k0 + rf.dim_p0 == rf.dim_g && rf.dim_X == rf.dim_p0 &&
                       rf.dim_g == rs->rank() + 2 * static_cast<int>(rs->num_positive_roots()) &&
                       rf.dim_p0 >= rf.real_rank && rf.dim_k0 >= static_cast<int>(sd.black.size()) &&
                       rf.dim_k0 > 0 && (sd.is_compact() || rf.dim_p0 > 0);
  add("dimensions", dims_ok, dims_detail.str());
  return report;
}

RealForm RealForm::analyze(const SatakeDiagram& sd) {
  if (sd.is_compact()) throw CompactRealForm(sd.label);
  RootSystem rs = RootSystem::build(sd.type);
  RealFormData rf = tau_star(rs, sd);
  restricted_roots(rs, rf);
  dims(rs, rf);
  const ValidationReport report = validate(sd);
  if (const auto* failure = report.first_failure())
    throw InconsistentSatakeData(sd.label + ": check " + failure->name + " failed" +
                                 (failure->detail.empty() ? "" : " (" + failure->detail + ")"));
  return RealForm(sd, std::move(rs), std::move(rf));
}

}  // namespace symleaf
