#pragma once

#include "planelog/frame.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace planelog {

inline constexpr int kMaxPrime = 13;
inline constexpr std::size_t kMaxRandomSize = 12;
inline constexpr std::size_t kDefaultSampleBudget = 200000;

using Triple = std::array<int, 3>;

// Normalized nonzero triples over GF(p) (first nonzero coordinate 1), in
// lexicographic order. Throws PreconditionError unless p is a prime <= 13.
std::vector<Triple> projective_points(int p);
std::string triple_label(char prefix, const Triple& t);  // e.g. "P(1,0,0)"

// PG(2,p) as a 2-frame; points and lines share the coordinate order and a
// point lies on a line iff the dot product vanishes. Audited against P1-P3.
TwoFrame gen_pg2(int p);

// Points of PG(2,p), aIb iff a.b = 0 mod p. Audited for O5 and O3 and for
// exactly p+1 absolute (looped) points.
OneFrame gen_polarity_graph(int p);

// Friendship graph: hub 0, rim edges {2i-1, 2i} for i = 1..k.
OneFrame gen_windmill(std::size_t k);

// The path v0-v1-v2-v3.
OneFrame gen_f0();

enum class RandomKind { Elliptic, Projective };
std::string to_string(RandomKind k);
RandomKind parse_random_kind(const std::string& s);

struct RandomQuasi {
  OneFrame frame;
  std::size_t attempts;
};

// Rejection sampling of connected symmetric serial graphs passing O1 with one
// (elliptic) or two (projective) I2-classes. Projective candidates are drawn
// bipartite. Deterministic for a given seed. Throws std::runtime_error when
// the budget runs out.
RandomQuasi gen_random_quasi(std::size_t size, RandomKind kind, std::uint64_t seed,
                             std::size_t budget = kDefaultSampleBudget);

}  // namespace planelog
