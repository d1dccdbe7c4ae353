#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "hcs/vertex.hpp"

namespace hcs {

using Edge = std::pair<Vertex, Vertex>;  // normalized: first < second

/// A cycle through distinct vertices, stored in canonical form: the
/// lexicographically least listing among all rotations and reflections
/// under the vertex order. Two listings of the same cyclic walk compare
/// equal once canonicalized.
class Cycle {
 public:
  /// Canonicalizes `seq`. Throws std::invalid_argument on length < 3 or a
  /// repeated vertex.
  static Cycle canonical(std::vector<Vertex> seq);

  const std::vector<Vertex>& seq() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }

  /// The cycle's edges as normalized unordered pairs.
  std::vector<Edge> edges() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.seq_ <=> b.seq_; }

 private:
  explicit Cycle(std::vector<Vertex> seq) : seq_(std::move(seq)) {}
  std::vector<Vertex> seq_;
};

/// Canonical rotation/reflection of a sequence of distinct values;
/// shared by Cycle and the id-based automorphism machinery.
std::vector<int> canonical_listing(const std::vector<int>& seq);

}  // namespace hcs
