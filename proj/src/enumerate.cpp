#include "planelog/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace planelog {

OneFrame SmallGraph::to_frame() const {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge(i, j)) r.set(i, j);
  return OneFrame(std::move(r));
}

SmallGraph SmallGraph::from_frame(const OneFrame& f) {
  if (f.size() > kMaxEnumerationSize) throw PreconditionError("frame too large for SmallGraph");
  SmallGraph g;
  g.n = static_cast<std::uint8_t>(f.size());
  for (auto [a, b] : f.edges()) g.set(a, b);
  return g;
}

std::size_t code_length(std::size_t n, bool symmetric) {
  return symmetric ? n * (n + 1) / 2 : n * n;
}

std::uint64_t adjacency_code(const SmallGraph& g, bool symmetric) {
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < g.n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      code = (code << 1) | g.edge(i, j);
      if (!symmetric) code = (code << 1) | g.edge(j, i);
    }
    code = (code << 1) | g.edge(j, j);
  }
  return code;
}

namespace {

// Column j of the graph relabelled so that position k holds vertex perm[k].
std::uint64_t column_bits(const SmallGraph& g, const std::array<std::uint8_t, kMaxEnumerationSize>& perm,
                          std::size_t j, bool symmetric) {
  std::uint64_t bits = 0;
  const auto vj = perm[j];
  for (std::size_t i = 0; i < j; ++i) {
    bits = (bits << 1) | g.edge(perm[i], vj);
    if (!symmetric) bits = (bits << 1) | g.edge(vj, perm[i]);
  }
  return (bits << 1) | g.edge(vj, vj);
}

// Depth-first over partial relabellings; returns true if a strictly smaller
// code exists. Branches whose prefix is already larger are cut.
bool smaller_exists(const SmallGraph& g, bool symmetric,
                    const std::array<std::uint64_t, kMaxEnumerationSize>& own_columns,
                    std::array<std::uint8_t, kMaxEnumerationSize>& perm, std::uint8_t used,
                    std::size_t depth) {
  if (depth == g.n) return false;
  for (std::uint8_t v = 0; v < g.n; ++v) {
    if ((used >> v) & 1u) continue;
    perm[depth] = v;
    auto col = column_bits(g, perm, depth, symmetric);
    if (col < own_columns[depth]) return true;
    if (col > own_columns[depth]) continue;
    if (smaller_exists(g, symmetric, own_columns, perm, static_cast<std::uint8_t>(used | (1u << v)),
                       depth + 1))
      return true;
  }
  return false;
}

}  // namespace

bool is_canonical(const SmallGraph& g, bool symmetric) {
  std::array<std::uint8_t, kMaxEnumerationSize> id{};
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::array<std::uint64_t, kMaxEnumerationSize> own{};
  for (std::size_t j = 0; j < g.n; ++j) own[j] = column_bits(g, id, j, symmetric);
  std::array<std::uint8_t, kMaxEnumerationSize> perm{};
  return !smaller_exists(g, symmetric, own, perm, 0, 0);
}

std::vector<SmallGraph> enumerate_frames(std::size_t n, bool symmetric) {
  if (n > kMaxEnumerationSize)
    throw PreconditionError("enumeration is limited to " + std::to_string(kMaxEnumerationSize) +
                            " vertices");
  std::vector<SmallGraph> level{SmallGraph{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<SmallGraph> next;
    const std::size_t v = k - 1;
    // Bits of an extension: out-edges to older vertices, in-edges from them
    // (directed only), and the loop.
    const std::size_t ext_bits = symmetric ? v + 1 : 2 * v + 1;
    for (const auto& parent : level) {
      for (std::uint32_t ext = 0; ext < (1u << ext_bits); ++ext) {
        SmallGraph g = parent;
        g.n = static_cast<std::uint8_t>(k);
        for (std::size_t i = 0; i < v; ++i) {
          if ((ext >> i) & 1u) {
            g.set(i, v);
            if (symmetric) g.set(v, i);
          }
          if (!symmetric && ((ext >> (v + i)) & 1u)) g.set(v, i);
        }
        if ((ext >> (ext_bits - 1)) & 1u) g.set(v, v);
        if (is_canonical(g, symmetric)) next.push_back(g);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [symmetric](const SmallGraph& a, const SmallGraph& b) {
    return adjacency_code(a, symmetric) < adjacency_code(b, symmetric);
  });
  return level;
}

const std::vector<SmallGraph>& frames_up_to_iso(std::size_t n, bool symmetric) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, bool>, std::vector<SmallGraph>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, symmetric);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_frames(n, symmetric)).first;
  return it->second;
}

}  // namespace planelog
