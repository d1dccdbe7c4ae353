#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcs/system.hpp"

namespace hcs {

/// One matched cycle triple, oriented with inf first so that the first and
/// last non-inf vertices agree across the three sequences.
struct CycleTriple {
  std::vector<Vertex> a, b, c;
};

struct DoublingInput {
  std::vector<CycleTriple> triples;
};

struct Compatibility {
  std::optional<DoublingInput> input;
  std::vector<std::string> defects;
  bool ok() const { return input.has_value(); }
};

/// Matches the cycles of three systems of equal odd order (on inf plus one
/// shared plain label set) by their unordered inf-neighbor pair, then
/// orients every matched triple so the ordered first/last neighbors agree.
/// The first system's cycles keep their canonical orientation; the others
/// are flipped to fit. Any unmatched pair or shape mismatch is reported.
Compatibility check_compatible(const CycleSystem& h1, const CycleSystem& h2,
                               const CycleSystem& h3);

/// Builds the order-doubling system: from n matched triples on {inf} + 2n
/// labels, emits 2n cycles on {inf} + (labels x {+,-}): per triple, a
/// first-type cycle walking the a-sequence on the + copy and the reversed
/// b-sequence on the - copy, and a second-type cycle zig-zagging the two
/// signed copies of the c-sequence. The output is re-validated and an
/// internal failure throws.
CycleSystem double_system(const DoublingInput& input);

}  // namespace hcs
