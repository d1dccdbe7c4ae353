#include "hcs/group.hpp"

#include <algorithm>
#include <map>
#include <charconv>
#include <stdexcept>

namespace hcs {

FiniteGroup FiniteGroup::from_table(std::string name,
                                    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("group must have at least one element");

  FiniteGroup g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int j = 0; j < n; ++j) {
      const int k = table[i][j];
      if (k < 0 || k >= n) throw std::invalid_argument("group table entry out of range");
      g.table_[static_cast<std::size_t>(i) * n + j] = k;
    }
  }

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[g.mul(i, j)]) throw std::invalid_argument("group table row is not a permutation");
      if (col[g.mul(j, i)]) throw std::invalid_argument("group table column is not a permutation");
      row[g.mul(i, j)] = col[g.mul(j, i)] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw std::invalid_argument("group table has no identity");
  g.identity_ = identity;

  g.inverses_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == identity) {
        if (g.inverses_[x] != -1) throw std::invalid_argument("non-unique inverse");
        g.inverses_[x] = y;
      }
    }
    if (g.inverses_[x] < 0) throw std::invalid_argument("element without inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group table is not associative");

  g.orders_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int m = 1, y = x;
    while (y != identity) {
      y = g.mul(y, x);
      ++m;
      if (m > n) throw std::logic_error("element order exceeds group order");
    }
    g.orders_[x] = m;
  }
  for (int x = 0; x < n; ++x)
    if (g.orders_[x] == 2) g.involutions_.push_back(x);

  return g;
}

std::optional<int> FiniteGroup::unique_involution() const {
  if (involutions_.size() == 1) return involutions_[0];
  return std::nullopt;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_table("Z" + std::to_string(n), table);
}

FiniteGroup make_quaternion8() {
  // Element index = 2*basis + sign with basis 0:1, 1:i, 2:j, 3:k and sign
  // bit 1 for the negative copy.
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int b1 = x / 2, s1 = x % 2, b2 = y / 2, s2 = y % 2;
      table[x][y] = 2 * kBasis[b1][b2] + (s1 ^ s2 ^ kSign[b1][b2]);
    }
  }
  return FiniteGroup::from_table("Q8", table);
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > kGroupOrderCap)
    throw std::invalid_argument("direct product order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kGroupOrderCap));
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::vector<int>> table(n1 * n2, std::vector<int>(n1 * n2));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          table[a1 * n2 + a2][b1 * n2 + b2] = g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
  return FiniteGroup::from_table(g1.name() + "x" + g2.name(), table);
}

FiniteGroup parse_group_spec(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  std::vector<FiniteGroup> atoms;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t next = spec.find('x', pos);
    const std::string_view atom =
        spec.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (atom == "Q8") {
      atoms.push_back(make_quaternion8());
    } else if (atom.size() >= 2 && atom[0] == 'Z') {
      int n = 0;
      const auto digits = atom.substr(1);
      const auto [p, ec] = std::from_chars(digits.begin(), digits.end(), n);
      if (ec != std::errc() || p != digits.end() || n < 1)
        throw std::invalid_argument("bad group atom '" + std::string(atom) + "'");
      atoms.push_back(make_cyclic(n));
    } else {
      throw std::invalid_argument("bad group atom '" + std::string(atom) + "'");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  FiniteGroup g = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, atoms[i]);
  return g;
}

namespace {

// Subgroup generated by `gens`, as a membership mask.
std::vector<bool> closure_of(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = true;
  for (int x : gens)
    if (!in[x]) { in[x] = true; elems.push_back(x); }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      for (int p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
        if (!in[p]) { in[p] = true; elems.push_back(p); }
      }
    }
  }
  return in;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> order_sorted(g.order());
  for (int i = 0; i < g.order(); ++i) order_sorted[i] = i;
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<bool> have = closure_of(g, gens);
  for (int x : order_sorted) {
    if (have[x]) continue;
    gens.push_back(x);
    have = closure_of(g, gens);
    if (std::all_of(have.begin(), have.end(), [](bool b) { return b; })) break;
  }
  return gens;
}

// Extends the partial map (identity + generator images already set) to the
// generated subgroup; false on any homomorphism conflict.
bool extend_homomorphism(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& m) {
  std::vector<int> known;
  for (int x = 0; x < a.order(); ++x)
    if (m[x] >= 0) known.push_back(x);
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j < known.size(); ++j) {
      const int p = known[i], q = known[j];
      const int r = a.mul(p, q);
      const int s = b.mul(m[p], m[q]);
      if (m[r] < 0) {
        m[r] = s;
        known.push_back(r);
      } else if (m[r] != s) {
        return false;
      }
    }
  }
  return true;
}

bool assign_generators(const FiniteGroup& a, const FiniteGroup& b,
                       const std::vector<int>& gens, std::size_t i,
                       const std::vector<int>& m, std::vector<int>& out) {
  if (i == gens.size()) {
    std::vector<bool> hit(b.order(), false);
    for (int x = 0; x < a.order(); ++x) {
      if (m[x] < 0 || hit[m[x]]) return false;
      hit[m[x]] = true;
    }
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (m[a.mul(x, y)] != b.mul(m[x], m[y])) return false;
    out = m;
    return true;
  }
  const int want = a.element_order(gens[i]);
  for (int y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != want) continue;
    std::vector<int> next = m;
    if (next[gens[i]] >= 0 && next[gens[i]] != y) continue;
    next[gens[i]] = y;
    if (!extend_homomorphism(a, b, next)) continue;
    if (assign_generators(a, b, gens, i + 1, next, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1,
                                                 const FiniteGroup& g2) {
  if (g1.order() > kGroupOrderCap || g2.order() > kGroupOrderCap)
    throw std::invalid_argument("group order exceeds cap " + std::to_string(kGroupOrderCap));
  if (g1.order() != g2.order()) return std::nullopt;

  std::map<int, int> profile1, profile2;
  for (int x = 0; x < g1.order(); ++x) ++profile1[g1.element_order(x)];
  for (int x = 0; x < g2.order(); ++x) ++profile2[g2.element_order(x)];
  if (profile1 != profile2) return std::nullopt;

  const std::vector<int> gens = greedy_generators(g1);
  std::vector<int> m(g1.order(), -1);
  m[g1.identity()] = g2.identity();
  std::vector<int> witness;
  if (assign_generators(g1, g2, gens, 0, m, witness)) return witness;
  return std::nullopt;
}

bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace hcs
