#pragma once

#include "planelog/frame.hpp"

#include <memory>
#include <string>
#include <vector>

namespace planelog {

enum class DefectKind { B1, O5 };

// B1: (a, b) with a a network vertex and b a target vertex such that
// theta(a) I' b but no neighbour of a maps to b.
// O5: (a, b) with a <= b network vertices having no common neighbour.
struct Defect {
  DefectKind kind;
  std::size_t a;
  std::size_t b;

  friend bool operator==(const Defect&, const Defect&) = default;
  friend auto operator<=>(const Defect&, const Defect&) = default;
};

std::string to_string(const Defect& d);

struct RepairRecord {
  Defect defect;
  std::size_t fresh_vertex;
  std::size_t image;  // theta of the fresh vertex
};

// A symmetric frame with a map theta into a fixed target frame. Vertices
// 0..3 are the seed path v0-v1-v2-v3.
class Network {
public:
  // Arbitrary network; edges are symmetrised.
  Network(std::shared_ptr<const OneFrame> target, std::size_t n, const std::vector<Edge>& edges,
          std::vector<std::size_t> theta);

  const OneFrame& target() const { return *target_; }
  std::size_t size() const { return adj_.size(); }
  bool adjacent(std::size_t x, std::size_t y) const { return adj_[x][y]; }
  const WorldSet& neighbours(std::size_t x) const { return adj_[x]; }
  const std::vector<std::size_t>& theta() const { return theta_; }
  const std::vector<RepairRecord>& log() const { return log_; }
  OneFrame frame() const;

  // Extends the network by a fresh vertex joined to `joins`, mapped to
  // `image`. No coherence checks.
  std::size_t add_vertex(const std::vector<std::size_t>& joins, std::size_t image);
  void record(RepairRecord r) { log_.push_back(r); }

private:
  std::shared_ptr<const OneFrame> target_;
  std::vector<WorldSet> adj_;
  std::vector<std::size_t> theta_;
  std::vector<RepairRecord> log_;
};

// Seed network on the path v0-v1-v2-v3 mapped onto the lexicographically least
// 3-path of the target, which must be an elliptic quasi-1-plane.
Network seed_network(const OneFrame& target);

struct CoherenceCheck {
  bool holds = true;
  std::string clause;  // "symmetry", "C1", "C2" or "C3"
  std::vector<std::size_t> tuple;

  explicit operator bool() const { return holds; }
};

// C1: theta is a homomorphism. C2: distinct vertices have at most one common
// neighbour. C3: the seed path is a full subgraph.
CoherenceCheck coherent(const Network& net);

// All B1-defects (by a, then target vertex) followed by all O5-defects (by a,
// then b, a <= b).
std::vector<Defect> find_defects(const Network& net);
bool is_defect(const Network& net, const Defect& d);

// Repairs one defect with a fresh vertex; an O5 repair maps it to the least
// target vertex joining theta(a) and theta(b). Throws PreconditionError if the
// network is incoherent or d is not a defect.
Network repair(const Network& net, const Defect& d);

struct SaturationReport {
  std::size_t rounds = 0;
  std::vector<std::size_t> snapshot_sizes;  // defects snapshotted per round
  std::vector<Defect> snapshot_defects;     // all rounds, in repair order
  std::size_t repairs = 0;
  std::size_t already_repaired = 0;  // snapshotted but fixed by an earlier repair
  bool coherent_after_every_step = true;
  bool o3_after_every_step = true;
  bool irreflexive_after_every_step = true;
  bool seed_full_after_every_step = true;
  bool final_coherent = false;
  bool final_o3 = false;
  bool all_snapshot_defects_repaired = false;
  bool seed_full_subgraph = false;
  bool theta_homomorphism = false;
  std::size_t residual_b1 = 0;
  std::size_t residual_o5 = 0;
  bool surjective = false;
  std::size_t final_size = 0;
  std::string first_failure;
};

struct SaturationResult {
  Network network;
  SaturationReport report;
};

// Fair rounds: each round snapshots the defect list and repairs every
// snapshotted defect that is still open. Audits run after every repair.
SaturationResult saturate(const OneFrame& target, std::size_t rounds);

bool surjectivity_check(const Network& net);

}  // namespace planelog
