#include "symleaf/weyl.hpp"

#include "symleaf/errors.hpp"

#include <algorithm>
#include <map>

namespace symleaf {

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::string out;
  for (int i : word_) out += "s" + std::to_string(i);
  return out;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  IntMatrix inv = IntMatrix::Identity(rank(), rank());
  IntMatrix power = matrix_;
  // Finite order: w^k = e for some k, so w^{-1} = w^{k-1}.
  while (power != IntMatrix::Identity(rank(), rank())) {
    inv = power;
    power = power * matrix_;
  }
  return {std::move(w), std::move(inv)};
}

WeylElement reflect(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw Error("simple index " + std::to_string(i) + " out of range");
  return {{i}, rs.simple_reflection(i)};
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i : word) w = w * reflect(rs, i);
  return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    IntVector image = w.apply(beta);
    if ((image.array() <= 0).all()) ++count;
  }
  return count;
}

WeylElement longest_element(const RootSystem& rs, const std::set<int>& subset) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i : subset)
    if (i < 1 || i > rs.rank()) throw Error("simple index " + std::to_string(i) + " out of range");
  // Extend w by s_i while some generator in the subset still lengthens it,
  // i.e. while w(alpha_i) is positive.
  bool extended = true;
  while (extended) {
    extended = false;
    for (int i : subset) {
      IntVector image = w.apply(rs.simple_root(i));
      if ((image.array() >= 0).all()) {
        w = w * reflect(rs, i);
        extended = true;
        break;
      }
    }
  }
  return w;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap) {
  std::map<std::vector<std::int64_t>, std::size_t> index;
  std::vector<WeylElement> elements;
  elements.push_back(WeylElement::identity(rs.rank()));
  index.emplace(to_std(elements.front().matrix()), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement next = elements[head] * reflect(rs, i);
      auto key = to_std(next.matrix());
      if (index.count(key)) continue;
      if (elements.size() >= cap) throw WeylCapExceeded(elements.size(), cap);
      index.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace symleaf
