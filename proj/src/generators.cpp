#include "planelog/generators.hpp"

#include <random>
#include <stdexcept>

namespace planelog {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int dot(const Triple& a, const Triple& b, int p) {
  return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % p;
}

}  // namespace

std::vector<Triple> projective_points(int p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw PreconditionError("prime " + std::to_string(p) + " exceeds the size cap 13");
  std::vector<Triple> out;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) {
        const int lead = x != 0 ? x : y != 0 ? y : z;
        if (lead == 1) out.push_back({x, y, z});
      }
  return out;
}

std::string triple_label(char prefix, const Triple& t) {
  return std::string(1, prefix) + "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

TwoFrame gen_pg2(int p) {
  const auto pts = projective_points(p);
  std::vector<std::string> points, lines;
  for (const auto& t : pts) {
    points.push_back(triple_label('P', t));
    lines.push_back(triple_label('L', t));
  }
  std::vector<Edge> inc;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (dot(pts[i], pts[j], p) == 0) inc.emplace_back(i, j);
  TwoFrame f(points, lines, inc);
  for (auto c : {PCondition::P1, PCondition::P2, PCondition::P3})
    if (!check_P(f, c).holds) throw std::logic_error("PG(2," + std::to_string(p) + ") fails " + to_string(c));
  return f;
}

OneFrame gen_polarity_graph(int p) {
  const auto pts = projective_points(p);
  std::vector<Edge> edges;
  std::size_t loops = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      if (dot(pts[i], pts[j], p) == 0) {
        edges.emplace_back(i, j);
        if (i == j) ++loops;
      }
  OneFrame f(pts.size(), edges, true);
  if (!check_O(f, OCondition::O5).holds || !check_O(f, OCondition::O3).holds)
    throw std::logic_error("polarity graph is not an elliptic 1-plane");
  if (loops != static_cast<std::size_t>(p) + 1) throw std::logic_error("unexpected number of absolute points");
  return f;
}

OneFrame gen_windmill(std::size_t k) {
  if (k == 0) throw PreconditionError("windmill needs at least one triangle");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    edges.emplace_back(0, 2 * i - 1);
    edges.emplace_back(0, 2 * i);
    edges.emplace_back(2 * i - 1, 2 * i);
  }
  return OneFrame(2 * k + 1, edges, true);
}

OneFrame gen_f0() { return OneFrame(4, {{0, 1}, {1, 2}, {2, 3}}, true); }

std::string to_string(RandomKind k) { return k == RandomKind::Elliptic ? "elliptic" : "projective"; }

RandomKind parse_random_kind(const std::string& s) {
  if (s == "elliptic") return RandomKind::Elliptic;
  if (s == "projective") return RandomKind::Projective;
  throw PreconditionError("unknown class '" + s + "' (expected elliptic or projective)");
}

RandomQuasi gen_random_quasi(std::size_t size, RandomKind kind, std::uint64_t seed, std::size_t budget) {
  if (size == 0 || size > kMaxRandomSize)
    throw PreconditionError("random quasi-1-plane size must be in 1..12");
  if (kind == RandomKind::Projective && size < 2)
    throw PreconditionError("a projective quasi-1-plane needs at least two vertices");
  std::mt19937_64 rng(seed);
  const std::size_t want = kind == RandomKind::Elliptic ? 1 : 2;
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    std::vector<Edge> edges;
    std::vector<bool> side(size);
    if (kind == RandomKind::Projective) {
      // Vertex 0 sits on side 0; the rest pick a side from one raw bit.
      for (std::size_t v = 1; v < size; ++v) side[v] = rng() & 1;
    }
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) {
        const bool bit = rng() & 1;
        if (kind == RandomKind::Projective && side[i] == side[j]) continue;
        if (bit) edges.emplace_back(i, j);
      }
    OneFrame f(size, edges, true);
    if (!is_connected(f) || !is_quasi_plane(f)) continue;
    if (i2_partition(f).size() != want) continue;
    return {std::move(f), attempt};
  }
  throw std::runtime_error("sampling budget of " + std::to_string(budget) + " exhausted");
}

}  // namespace planelog
