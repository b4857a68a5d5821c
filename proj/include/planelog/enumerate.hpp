#pragma once

#include "planelog/frame.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace planelog {

inline constexpr std::size_t kMaxEnumerationSize = 8;

// Compact frame on at most 8 vertices; bit j of rows[i] is the edge (i, j).
struct SmallGraph {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxEnumerationSize> rows{};

  bool edge(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j) { rows[i] = static_cast<std::uint8_t>(rows[i] | (1u << j)); }
  OneFrame to_frame() const;
  static SmallGraph from_frame(const OneFrame& f);

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

// Adjacency-matrix code read column by column: for column j the entries
// (i, j) for i < j (and (j, i) too when directed), then the loop bit (j, j).
// The first bit is the most significant, so integer order is lexicographic
// order, and the code of the subgraph on {0..k-1} is a prefix of the code.
std::uint64_t adjacency_code(const SmallGraph& g, bool symmetric);
std::size_t code_length(std::size_t n, bool symmetric);

// True when no relabelling yields a lexicographically smaller code.
bool is_canonical(const SmallGraph& g, bool symmetric);

// All frames on exactly n vertices up to isomorphism (symmetric ones only
// when `symmetric`), each in its canonical labelling, sorted by code.
// Orderly generation: a canonical graph minus its last vertex is canonical,
// so every class is reached exactly once by extending canonical parents.
std::vector<SmallGraph> enumerate_frames(std::size_t n, bool symmetric);

// Memoized enumerate_frames; safe to call from several threads.
const std::vector<SmallGraph>& frames_up_to_iso(std::size_t n, bool symmetric);

}  // namespace planelog
