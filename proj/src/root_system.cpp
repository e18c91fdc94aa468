#include "symleaf/root_system.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace symleaf {

namespace {

bool valid_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void link(IntMatrix& c, int i, int j) {
  c(i, j) = -1;
  c(j, i) = -1;
}

// Squared lengths (halved) of the simple roots, short roots normalized to 1.
std::vector<std::int64_t> half_lengths(char family, int rank) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(rank), 1);
  switch (family) {
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) d[static_cast<std::size_t>(i)] = 2;
      break;
    case 'C':
      d[static_cast<std::size_t>(rank - 1)] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

CartanType parse_cartan_type(std::string_view text) {
  if (text.size() < 2) throw UnsupportedCartanType(std::string(text));
  CartanType t;
  t.family = text[0];
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !valid_type(t.family, t.rank))
    throw UnsupportedCartanType(std::string(text));
  return t;
}

IntMatrix cartan_matrix(char family, int rank) {
  if (!valid_type(family, rank)) throw UnsupportedCartanType(std::string(1, family) + std::to_string(rank));
  IntMatrix c = 2 * IntMatrix::Identity(rank, rank);
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) link(c, i, i + 1);
      if (family == 'B') c(rank - 1, rank - 2) = -2;
      if (family == 'C') c(rank - 2, rank - 1) = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
      link(c, rank - 3, rank - 1);
      break;
    case 'E':
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(c, i, i + 1);
      break;
    case 'F':
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c(2, 1) = -2;
      break;
    case 'G':
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

RootSystem RootSystem::build(char family, int rank, int rank_cap) {
  if (rank > rank_cap) throw UnsupportedCartanType(std::string(1, family) + std::to_string(rank) + " (rank cap " + std::to_string(rank_cap) + ")");
  RootSystem rs;
  rs.type_ = {family, rank};
  rs.cartan_ = symleaf::cartan_matrix(family, rank);

  const auto d = half_lengths(family, rank);
  rs.form_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.form_(i, j) = d[static_cast<std::size_t>(i)] * rs.cartan_(i, j);

  for (int i = 0; i < rank; ++i) {
    IntMatrix s = IntMatrix::Identity(rank, rank);
    s.row(i) -= rs.cartan_.row(i);
    rs.reflections_.push_back(std::move(s));
  }

  auto less = [](const IntVector& a, const IntVector& b) { return lex_less(a, b); };
  std::set<IntVector, decltype(less)> seen(less);
  std::deque<IntVector> queue;
  for (int i = 1; i <= rank; ++i) {
    seen.insert(rs.simple_root(i));
    queue.push_back(rs.simple_root(i));
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (const auto& s : rs.reflections_) {
      IntVector image = s * beta;
      if ((image.array() >= 0).all() && (image.array() > 0).any() && seen.insert(image).second)
        queue.push_back(std::move(image));
    }
  }
  rs.positive_.assign(seen.begin(), seen.end());
  return rs;
}

bool RootSystem::is_positive_root(const IntVector& v) const {
  return std::binary_search(positive_.begin(), positive_.end(), v,
                            [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
}

IntVector RootSystem::simple_root(int i) const {
  IntVector v = IntVector::Zero(rank());
  v(i - 1) = 1;
  return v;
}

}  // namespace symleaf
