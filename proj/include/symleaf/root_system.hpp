#pragma once

#include "symleaf/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symleaf {

/// Family letter and rank of a simple Cartan type, e.g. {'A', 2}.
struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Parses "A2", "B4", "E6". Throws UnsupportedCartanType for anything else.
CartanType parse_cartan_type(std::string_view text);

/// Finite, reduced, irreducible root system in simple-root coordinates.
///
/// Simple nodes follow Bourbaki numbering. The Cartan matrix entry (i, j) is
/// the pairing of alpha_j with the coroot of alpha_i, so the simple reflection
/// s_i sends v to v - (C v)_i alpha_i. The bilinear form is the symmetrized
/// Cartan matrix with short roots of squared length 2.
class RootSystem {
 public:
  static constexpr int kDefaultRankCap = 8;

  /// Builds the root system of type (family, rank). Positive roots come from
  /// reflection-closure of the simple roots and are sorted lexicographically.
  static RootSystem build(char family, int rank, int rank_cap = kDefaultRankCap);
  static RootSystem build(const CartanType& type, int rank_cap = kDefaultRankCap) {
    return build(type.family, type.rank, rank_cap);
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const IntMatrix& form() const { return form_; }
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }

  /// Matrix of s_i (1-based i) acting on simple-root coordinates.
  const IntMatrix& simple_reflection(int i) const { return reflections_.at(static_cast<std::size_t>(i - 1)); }

  bool is_positive_root(const IntVector& v) const;
  bool is_root(const IntVector& v) const { return is_positive_root(v) || is_positive_root(-v); }

  IntVector simple_root(int i) const;

 private:
  RootSystem() = default;

  CartanType type_;
  IntMatrix cartan_;
  IntMatrix form_;
  std::vector<IntMatrix> reflections_;
  std::vector<IntVector> positive_;
};

/// Cartan matrix for a type, or throws UnsupportedCartanType.
IntMatrix cartan_matrix(char family, int rank);

}  // namespace symleaf
