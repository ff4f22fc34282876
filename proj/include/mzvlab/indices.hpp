#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mzvlab {

// An index (k_1, ..., k_r) of positive integers; the empty index stands for
// the unit of every evaluator. Summation variables increase left to right, so
// admissibility is a condition on the LAST entry.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<unsigned> ks) : k_(ks) {}
  explicit Index(std::vector<unsigned> ks) : k_(std::move(ks)) {}

  const std::vector<unsigned>& entries() const { return k_; }
  unsigned operator[](size_t i) const { return k_[i]; }
  size_t depth() const { return k_.size(); }
  unsigned weight() const {
    unsigned w = 0;
    for (unsigned k : k_) w += k;
    return w;
  }
  bool empty() const { return k_.empty(); }

  bool admissible() const { return !k_.empty() && k_.back() >= 2; }

  Index reversed() const { return Index(std::vector<unsigned>(k_.rbegin(), k_.rend())); }

  // prefix (k_1..k_j) and suffix (k_{j+1}..k_r)
  Index prefix(size_t j) const {
    return Index(std::vector<unsigned>(k_.begin(), k_.begin() + j));
  }
  Index suffix(size_t j) const {
    return Index(std::vector<unsigned>(k_.begin() + j, k_.end()));
  }

  Index appended(unsigned k) const {
    auto v = k_;
    v.push_back(k);
    return Index(std::move(v));
  }
  friend Index concat(const Index& a, const Index& b) {
    auto v = a.k_;
    v.insert(v.end(), b.k_.begin(), b.k_.end());
    return Index(std::move(v));
  }

  auto operator<=>(const Index&) const = default;

  // CLI text form: "1,2,3"; empty string is the empty index.
  std::string str() const;
  static Index parse(const std::string& text);

 private:
  std::vector<unsigned> k_;
};

// All l ⪯ k (commas replaced by plus signs), each with the number of
// collapsed boxes r - dep(l). 2^{r-1} entries; [(∅,0)] for the empty index.
std::vector<std::pair<Index, unsigned>> contractions(const Index& k);

// Indices of weight k and depth r with k_i >= 2, lexicographic.
// Requires 1 <= i <= r < k.
std::vector<Index> enumerate_I(unsigned i, unsigned k, unsigned r);

// All indices of the given exact weight (2^{w-1} of them for w >= 1).
std::vector<Index> all_indices_of_weight(unsigned w);

}  // namespace mzvlab
