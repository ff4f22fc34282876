#include "mzvlab/indices.hpp"

#include <sstream>
#include <stdexcept>

namespace mzvlab {

std::string Index::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < k_.size(); ++i) {
    if (i) os << ',';
    os << k_[i];
  }
  return os.str();
}

Index Index::parse(const std::string& text) {
  std::vector<unsigned> ks;
  if (text.empty()) return Index(std::move(ks));
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    long v = std::stol(part);
    if (v < 1) throw std::invalid_argument("Index entries must be positive: " + text);
    ks.push_back(static_cast<unsigned>(v));
  }
  return Index(std::move(ks));
}

std::vector<std::pair<Index, unsigned>> contractions(const Index& k) {
  std::vector<std::pair<Index, unsigned>> out;
  const auto& e = k.entries();
  if (e.empty()) {
    out.emplace_back(Index{}, 0u);
    return out;
  }
  size_t boxes = e.size() - 1;
  for (size_t mask = 0; mask < (size_t{1} << boxes); ++mask) {
    std::vector<unsigned> l{e[0]};
    unsigned collapsed = 0;
    for (size_t i = 0; i < boxes; ++i) {
      if (mask >> i & 1) {
        l.back() += e[i + 1];  // box filled with +
        ++collapsed;
      } else {
        l.push_back(e[i + 1]);
      }
    }
    out.emplace_back(Index(std::move(l)), collapsed);
  }
  return out;
}

namespace {
void compositions(unsigned rest, unsigned parts, size_t pos_min2, std::vector<unsigned>& cur,
                  std::vector<Index>& out) {
  if (parts == 0) {
    if (rest == 0) out.emplace_back(cur);
    return;
  }
  unsigned lo = (cur.size() == pos_min2) ? 2u : 1u;
  // leave at least 1 per remaining part, 2 for the constrained slot if ahead
  for (unsigned v = lo; v + (parts - 1) <= rest; ++v) {
    cur.push_back(v);
    compositions(rest - v, parts - 1, pos_min2, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Index> enumerate_I(unsigned i, unsigned k, unsigned r) {
  if (i < 1 || i > r) throw std::invalid_argument("enumerate_I: need 1 <= i <= r");
  if (r >= k) throw std::invalid_argument("enumerate_I: need r < k");
  std::vector<Index> out;
  std::vector<unsigned> cur;
  compositions(k, r, i - 1, cur, out);
  return out;
}

std::vector<Index> all_indices_of_weight(unsigned w) {
  std::vector<Index> out;
  if (w == 0) {
    out.emplace_back();
    return out;
  }
  // compositions of w
  for (size_t mask = 0; mask < (size_t{1} << (w - 1)); ++mask) {
    std::vector<unsigned> ks{1};
    for (unsigned i = 0; i + 1 < w; ++i) {
      if (mask >> i & 1) ks.push_back(1);
      else ks.back() += 1;
    }
    out.emplace_back(std::move(ks));
  }
  return out;
}

}  // namespace mzvlab
