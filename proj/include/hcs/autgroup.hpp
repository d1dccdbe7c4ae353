#pragma once

#include <string>
#include <vector>

#include "hcs/group.hpp"
#include "hcs/system.hpp"

namespace hcs {

/// A vertex permutation as an image table over vertex ids (positions in the
/// system's sorted vertex list).
using VertexPermutation = std::vector<int>;

enum class AutClass { Trivial, OddOrder, Binary, AGL1p, Other };
std::string to_string(AutClass c);

/// The full automorphism group of a cycle system, stored element by element
/// (its size is at most v(v-1), so explicit storage stays tiny).
struct PermGroup {
  std::vector<VertexPermutation> elements;  // sorted; identity first
  AutClass classification = AutClass::Trivial;

  int order() const { return static_cast<int>(elements.size()); }
};

/// Does `phi` map the cycle set onto itself?
bool is_automorphism(const CycleSystem& s, const VertexPermutation& phi);

/// Exact automorphism group by dihedral alignment: every automorphism maps
/// the least cycle onto some cycle in one of its 2v listings, and because
/// cycles are Hamiltonian each alignment induces a total vertex map. All
/// v(v-1) candidates are tested, so the result is the complete group.
/// Requires a validated system.
PermGroup automorphism_group(const CycleSystem& s);

/// Independent oracle: filters all v! permutations. Guarded to v <= 9.
PermGroup brute_force_aut(const CycleSystem& s);

/// Trivial / OddOrder / Binary by involution count; AGL1p when v is prime,
/// the order is v(v-1) and the action is sharply 2-transitive (checked on
/// the orbit of one ordered pair). Anything else is Other.
AutClass classify(const std::vector<VertexPermutation>& elements, int v);

/// The abstract group of a permutation group via its composition table.
FiniteGroup as_abstract_group(const PermGroup& g, const std::string& name);

/// Permutation in cycle notation over the system's vertex labels, fixed
/// points omitted; the identity renders as "()".
std::string permutation_cycle_string(const CycleSystem& s, const VertexPermutation& phi);

/// Report: `order=<n> class=<tag>` then one line per element.
std::string aut_report(const CycleSystem& s, const PermGroup& g);

}  // namespace hcs
