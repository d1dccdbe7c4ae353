#include "hcs/cycle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hcs {
namespace {

// Entries are distinct, so the canonical listing starts at the unique
// minimum; only the two directions from there need comparing.
template <typename T>
std::vector<T> canonicalize(const std::vector<T>& seq) {
  const auto n = seq.size();
  const auto mi = static_cast<std::size_t>(
      std::min_element(seq.begin(), seq.end()) - seq.begin());
  std::vector<T> fwd(n), bwd(n);
  for (std::size_t t = 0; t < n; ++t) {
    fwd[t] = seq[(mi + t) % n];
    bwd[t] = seq[(mi + n - t) % n];
  }
  return fwd < bwd ? fwd : bwd;
}

}  // namespace

Cycle Cycle::canonical(std::vector<Vertex> seq) {
  if (seq.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::set<Vertex> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size())
    throw std::invalid_argument("repeated vertex in cycle");
  return Cycle(canonicalize(seq));
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    Vertex a = seq_[i];
    Vertex b = seq_[(i + 1) % seq_.size()];
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<int> canonical_listing(const std::vector<int>& seq) {
  return canonicalize(seq);
}

}  // namespace hcs
