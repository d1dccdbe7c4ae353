#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcs/doubling.hpp"
#include "hcs/group.hpp"
#include "hcs/rotational.hpp"
#include "hcs/system.hpp"

namespace hcs {

/// The fixed order-13 system with trivial automorphism group, on vertices
/// {inf} + (0..5 x {+,-}). Serves as the odd-pipeline result for the
/// trivial group.
CycleSystem hardcoded_rigid_hcs13();

struct ModifiedStarter {
  int k = 0;                // least admissible index, 1-based, in 2..n-1
  std::vector<int> alpha;   // the reshuffled starter cycle
};

/// Derives the companion starter C* from a verified starter C over a group
/// Z2 x G with |G| odd: the least k >= 2 whose half difference matches the
/// first one times lambda fixes the places where the two halves swap bars.
/// C* shares C's inf-neighbors and passes verification whenever it exists;
/// a missing k throws.
ModifiedStarter modified_starter(const FiniteGroup& gamma, const std::vector<int>& alpha);

/// Replayable record of the odd-order pipeline.
struct OddPipelineTrace {
  std::string group_name;
  std::string gamma_name;
  std::optional<Starter> starter;   // C; absent for the trivial group
  int k = 0;
  std::vector<int> modified_alpha;  // C*
  std::string report() const;
};

struct OddConstruction {
  CycleSystem system;
  OddPipelineTrace trace;
};

/// For odd |G|: builds Gamma = Z2 x G, searches a starter C, derives C*,
/// develops both and doubles (C*-system, C-system, C-system). The result
/// has order 4|G|+1 and automorphism group isomorphic to G. |G| = 1 returns
/// the rigid order-13 system. Throws on even |G| or an exhausted search
/// budget.
OddConstruction construct_odd(const FiniteGroup& g, const SearchBudget& budget = {});

struct EdgeSwap {
  int x = -1;                     // order-4 element of the H factor, as a G index
  int j = -1;                     // 0-based half position with a_{j+1} a_j^-1 = x
  std::vector<int> swapped;       // element indices of the reknit cycle, inf omitted
};

/// Picks the least-index order-4 element x of the H factor that occurs as a
/// consecutive left difference of the starter half, and crosses the matched
/// edge pair {[a_j, a_j+1], [a_j L, a_j+1 L]} over to
/// {[a_j, a_j+1 L], [a_j L, a_j+1]}. The reknit listing is again a full
/// cycle. `d` is the order of the cyclic factor of g = H x Z_d.
EdgeSwap swap_edges(const FiniteGroup& g, int d, const std::vector<int>& alpha);

struct BinaryPipelineTrace {
  std::string h_name;
  int d = 0;
  std::string group_name;
  std::optional<Starter> starter;
  EdgeSwap swap;
  std::string report() const;
};

struct BinaryConstruction {
  CycleSystem system;
  BinaryPipelineTrace trace;
};

/// For a binary H of order 4m and odd d >= 3: builds G = H x Z_d, finds a
/// starter, translates it through the Z_d factor, swaps one edge pair in
/// the base translate and assembles the H-orbits. The result has order
/// 4md+1 and automorphism group isomorphic to H.
BinaryConstruction construct_binary(const FiniteGroup& h, int d,
                                    const SearchBudget& budget = {});

}  // namespace hcs
