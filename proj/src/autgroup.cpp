#include "hcs/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcs {
namespace {

bool maps_cycles(const CycleSystem& s, const VertexPermutation& phi,
                 std::vector<int>& scratch) {
  for (const auto& ids : s.cycle_ids()) {
    scratch.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) scratch[i] = phi[ids[i]];
    if (!s.contains_ids(canonical_listing(scratch))) return false;
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string to_string(AutClass c) {
  switch (c) {
    case AutClass::Trivial: return "Trivial";
    case AutClass::OddOrder: return "OddOrder";
    case AutClass::Binary: return "Binary";
    case AutClass::AGL1p: return "AGL1p";
    case AutClass::Other: return "Other";
  }
  throw std::logic_error("unreachable classification");
}

bool is_automorphism(const CycleSystem& s, const VertexPermutation& phi) {
  if (static_cast<int>(phi.size()) != s.order())
    throw std::invalid_argument("permutation size does not match vertex count");
  std::vector<int> scratch;
  return maps_cycles(s, phi, scratch);
}

PermGroup automorphism_group(const CycleSystem& s) {
  const auto rep = validate(s);
  if (!rep.ok)
    throw std::invalid_argument("automorphism_group needs a valid system: " +
                                rep.summary());

  const int v = s.order();
  const auto& base = s.cycle_ids().front();
  std::set<VertexPermutation> found;
  VertexPermutation phi(v);
  std::vector<int> scratch;

  for (const auto& target : s.cycle_ids()) {
    for (int rot = 0; rot < v; ++rot) {
      for (int dir : {1, -1}) {
        for (int t = 0; t < v; ++t)
          phi[base[t]] = target[((rot + dir * t) % v + v) % v];
        if (maps_cycles(s, phi, scratch)) found.insert(phi);
      }
    }
  }

  PermGroup g;
  g.elements.assign(found.begin(), found.end());
  g.classification = classify(g.elements, v);
  return g;
}

PermGroup brute_force_aut(const CycleSystem& s) {
  const int v = s.order();
  if (v > 9) throw std::invalid_argument("brute force is guarded to order <= 9");

  VertexPermutation phi(v);
  std::iota(phi.begin(), phi.end(), 0);
  std::vector<int> scratch;
  PermGroup g;
  do {
    if (maps_cycles(s, phi, scratch)) g.elements.push_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  g.classification = classify(g.elements, v);
  return g;
}

AutClass classify(const std::vector<VertexPermutation>& elements, int v) {
  const int order = static_cast<int>(elements.size());
  if (order == 1) return AutClass::Trivial;
  if (order % 2 == 1) return AutClass::OddOrder;

  int involutions = 0;
  for (const auto& p : elements) {
    bool is_id = true, is_inv = true;
    for (int x = 0; x < v && (is_id || is_inv); ++x) {
      if (p[x] != x) is_id = false;
      if (p[p[x]] != x) is_inv = false;
    }
    if (!is_id && is_inv) ++involutions;
  }
  if (involutions == 1) return AutClass::Binary;

  if (is_prime(v) && order == v * (v - 1)) {
    std::set<std::pair<int, int>> pair_orbit;
    for (const auto& p : elements) pair_orbit.insert({p[0], p[1]});
    if (static_cast<int>(pair_orbit.size()) == order) return AutClass::AGL1p;
  }
  return AutClass::Other;
}

FiniteGroup as_abstract_group(const PermGroup& g, const std::string& name) {
  const auto& els = g.elements;
  const int n = static_cast<int>(els.size());
  auto index_of = [&](const VertexPermutation& p) {
    const auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || *it != p)
      throw std::invalid_argument("permutation set is not closed under composition");
    return static_cast<int>(it - els.begin());
  };

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  VertexPermutation composed;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      composed.resize(els[i].size());
      for (std::size_t x = 0; x < composed.size(); ++x)
        composed[x] = els[i][els[j][x]];
      table[i][j] = index_of(composed);
    }
  }
  return FiniteGroup::from_table(name, table);
}

std::string permutation_cycle_string(const CycleSystem& s, const VertexPermutation& phi) {
  std::ostringstream out;
  std::vector<bool> seen(phi.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < phi.size(); ++start) {
    if (seen[start] || phi[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << s.vertices()[x].str();
      first = false;
      x = static_cast<std::size_t>(phi[x]);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::string aut_report(const CycleSystem& s, const PermGroup& g) {
  std::ostringstream out;
  out << "order=" << g.order() << " class=" << to_string(g.classification) << "\n";
  for (const auto& p : g.elements) out << permutation_cycle_string(s, p) << "\n";
  return out.str();
}

}  // namespace hcs
