#pragma once

#include "symleaf/root_system.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace symleaf {

/// Element of a Weyl group: a witness word in 1-based simple reflections and
/// the integer matrix acting on simple-root coordinates (column k is the
/// image of alpha_k). Identity is matrix equality; the word is not canonical.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> word, IntMatrix matrix) : word_(std::move(word)), matrix_(std::move(matrix)) {}

  static WeylElement identity(int rank) { return {{}, IntMatrix::Identity(rank, rank)}; }

  const std::vector<int>& word() const { return word_; }
  const IntMatrix& matrix() const { return matrix_; }
  int rank() const { return static_cast<int>(matrix_.rows()); }

  /// "e" for the empty word, otherwise "s1s2s1".
  std::string word_string() const;

  WeylElement operator*(const WeylElement& other) const {
    std::vector<int> w = word_;
    w.insert(w.end(), other.word_.begin(), other.word_.end());
    return {std::move(w), matrix_ * other.matrix_};
  }

  WeylElement inverse() const;

  IntVector apply(const IntVector& v) const { return matrix_ * v; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  std::vector<int> word_;
  IntMatrix matrix_;
};

/// Simple reflection s_i, 1-based.
WeylElement reflect(const RootSystem& rs, int i);

/// Builds the element of a word (1-based indices).
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

/// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);

/// Longest element of the parabolic subgroup generated by the given simple
/// reflections, with a reduced word. An empty subset gives the identity.
WeylElement longest_element(const RootSystem& rs, const std::set<int>& subset);
inline WeylElement longest_element(const RootSystem& rs) {
  std::set<int> all;
  for (int i = 1; i <= rs.rank(); ++i) all.insert(i);
  return longest_element(rs, all);
}

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Every element of W exactly once, in shortlex order of reduced words.
/// Throws WeylCapExceeded as soon as more than `cap` elements are found.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

}  // namespace symleaf
