#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hcs/cycle.hpp"
#include "hcs/vertex.hpp"

namespace hcs {

/// Outcome of checking whether a cycle system partitions the edges of the
/// complete graph. `ok` holds exactly when both edge lists are empty;
/// `structural` carries extra diagnostics (wrong cycle count, short cycle).
struct ValidationReport {
  bool ok = false;
  std::vector<Edge> missing_edges;
  std::vector<Edge> duplicated_edges;
  std::vector<std::string> structural;

  std::string summary() const;
};

/// A set of cycles on an odd number of vertices, candidate Hamiltonian
/// cycle system. Vertices are kept sorted; cycles are canonical, sorted
/// and deduplicated, so two systems with the same cycles compare equal.
///
/// Construction only enforces shape (odd order, one label scheme, cycles
/// over listed vertices); whether the cycles actually decompose K_v is
/// the job of validate().
class CycleSystem {
 public:
  static CycleSystem make(std::vector<Vertex> vertices, std::vector<Cycle> cycles);
  /// Vertex set inferred as the union of the cycles' vertices.
  static CycleSystem from_cycles(std::vector<Cycle> cycles);

  int order() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }

  /// Position of `v` in the sorted vertex list; -1 if absent.
  int vertex_id(const Vertex& v) const;

  /// Cycles as sorted vertex-id listings (canonical form). Ids follow the
  /// sorted vertex order, so id-level canonical forms agree with vertex-level
  /// ones.
  const std::vector<std::vector<int>>& cycle_ids() const { return cycle_ids_; }
  bool contains_ids(const std::vector<int>& canonical_cycle) const;

  friend bool operator==(const CycleSystem& a, const CycleSystem& b) {
    return a.vertices_ == b.vertices_ && a.cycles_ == b.cycles_;
  }

 private:
  CycleSystem() = default;
  std::vector<Vertex> vertices_;
  std::vector<Cycle> cycles_;
  std::vector<std::vector<int>> cycle_ids_;
};

ValidationReport validate(const CycleSystem& s);

/// Text format: header `hcs v=<odd int>`, then one line per cycle with v
/// whitespace-separated vertex tokens. Lines starting with `#` are
/// comments. Throws std::runtime_error with a line reference on malformed
/// input.
CycleSystem parse_system(std::string_view text);
std::string serialize_system(const CycleSystem& s);

/// Applies `mapping` to the index part of every vertex (signs and inf are
/// untouched). Indices absent from the map stay fixed. The induced map must
/// permute the system's index set.
CycleSystem relabel_indices(const CycleSystem& s, const std::map<int, int>& mapping);

}  // namespace hcs
