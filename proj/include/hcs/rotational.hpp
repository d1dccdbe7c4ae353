#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcs/group.hpp"
#include "hcs/system.hpp"

namespace hcs {

/// A base cycle (inf, a_1, ..., a_2n) over a binary group, candidate seed of
/// a 1-rotational cycle system. `alpha` holds the 2n element indices after
/// inf; the first n of them (the half) determine the rest, since a valid
/// starter satisfies a_{2n+1-i} = a_i * lambda.
class Starter {
 public:
  Starter(FiniteGroup group, std::vector<int> alpha);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& alpha() const { return alpha_; }
  std::vector<int> half() const;

  /// The cycle on vertices {inf} + plain element indices.
  Cycle cycle() const;

 private:
  FiniteGroup group_;
  std::vector<int> alpha_;
};

struct StarterCheck {
  bool ok = false;
  std::vector<std::string> defects;
};

/// Checks the two starter conditions for A = (inf, alpha...):
///   1. A * lambda = A as a cycle,
///   2. the consecutive differences over the first half, taken in both
///      orders, cover the group minus {1, lambda} without repetition.
/// Preconditions (binary group, spanning cycle) throw; condition failures
/// are reported in the result.
StarterCheck verify_starter(const FiniteGroup& gamma, const std::vector<int>& alpha);

/// Develops a verified starter into a full cycle system: the translates
/// A*x over a fixed transversal of {1, lambda} (least element index per
/// coset). The result is re-validated; it always passes for a verified
/// starter.
CycleSystem develop(const FiniteGroup& gamma, const std::vector<int>& alpha);

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;  // total across restarts
  std::uint64_t seed = 0;
  int restarts = 32;
};

struct StarterSearchResult {
  std::optional<Starter> starter;
  std::uint64_t nodes = 0;        // extensions explored
  bool exhausted_space = false;   // proved no starter exists
};

/// Backtracking search for a starter over a binary group. The half is
/// extended left-to-right with one representative per {1,lambda}-coset,
/// pruning on repeated or forbidden differences; the mirror half is forced.
/// The first entry is pinned to the identity: every starter is a right
/// translate of one of that shape, and translates develop to the same
/// system. Value order is reshuffled per restart from the seed, so results
/// are deterministic given the group indexing and the budget.
StarterSearchResult find_starter(const FiniteGroup& gamma, const SearchBudget& budget = {});

/// Starter file format: `starter group=<spec>` then the cycle as `inf`
/// followed by element indices.
std::string serialize_starter(const Starter& s);
Starter parse_starter(std::string_view text);

}  // namespace hcs
