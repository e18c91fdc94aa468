#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

namespace symleaf {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "exact_rank needs an integer scalar");
  Eigen::Matrix<__int128, Eigen::Dynamic, Eigen::Dynamic> m = input.template cast<__int128>();
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  __int128 prev_pivot = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev_pivot;
      }
      m(r, col) = 0;
    }
    prev_pivot = m(rank, col);
    ++rank;
  }
  return rank;
}

/// Dimension of the kernel of an integer square matrix.
template <typename Derived>
Eigen::Index exact_nullity(const Eigen::MatrixBase<Derived>& m) {
  return m.cols() - exact_rank(m);
}

inline std::vector<std::int64_t> to_std(const IntVector& v) {
  return std::vector<std::int64_t>(v.data(), v.data() + v.size());
}

inline std::vector<std::int64_t> to_std(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

/// Lexicographic comparison of integer vectors.
inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace symleaf
