#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcs {

/// Maximum order accepted by direct_product and find_isomorphism. Keeps the
/// cubic construction checks at desk scale.
inline constexpr int kGroupOrderCap = 1024;

/// A finite group as an explicit multiplication table over element indices
/// 0..n-1. Construction verifies the table is a Latin square with identity,
/// unique inverses and full associativity, so a FiniteGroup value is always
/// a group. Element indexing is part of the contract: products are indexed
/// row-major, so serialized data referencing indices is reproducible.
class FiniteGroup {
 public:
  /// Builds and fully checks a group from its table (table[i][j] = i*j).
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int identity() const { return identity_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverses_[a]; }

  /// Least m >= 1 with x^m = 1; divides the group order.
  int element_order(int x) const { return orders_[x]; }

  /// All x != 1 with x^2 = 1, ascending.
  const std::vector<int>& involutions() const { return involutions_; }

  /// Exactly one involution?  Its index is then unique_involution().
  bool is_binary() const { return involutions_.size() == 1; }
  std::optional<int> unique_involution() const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::string name_;
  std::vector<int> table_;  // n*n, row-major
  int identity_ = 0;
  std::vector<int> inverses_;
  std::vector<int> orders_;
  std::vector<int> involutions_;
};

/// Z_n under addition, identity 0, element i*j = (i+j) mod n. n >= 1.
FiniteGroup make_cyclic(int n);

/// The quaternion group of order 8. Element indexing:
/// 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k.
FiniteGroup make_quaternion8();

/// Componentwise product; element (i1,i2) gets index i1*|g2| + i2.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

/// Grammar: atom ("x" atom)*, atom = "Z"<int >= 1> | "Q8"; products are
/// left-associated. Examples: "Z6", "Q8xZ3", "Z3xZ3".
FiniteGroup parse_group_spec(std::string_view spec);

/// Isomorphism witness g1 -> g2 as an index map, if one exists. Prefilters
/// by order and element-order multiset, then backtracks over generator
/// images; any returned map is verified to be a bijective homomorphism.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1,
                                                 const FiniteGroup& g2);

bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

}  // namespace hcs
