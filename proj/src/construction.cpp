#include "planelog/construction.hpp"

#include <stdexcept>

namespace planelog {

std::string to_string(const Defect& d) {
  return std::string(d.kind == DefectKind::B1 ? "B1" : "O5") + "(" + std::to_string(d.a) + "," +
         std::to_string(d.b) + ")";
}

Network::Network(std::shared_ptr<const OneFrame> target, std::size_t n,
                 const std::vector<Edge>& edges, std::vector<std::size_t> theta)
    : target_(std::move(target)), adj_(n, WorldSet(n)), theta_(std::move(theta)) {
  if (theta_.size() != n) throw PreconditionError("theta must be total on the network");
  for (auto t : theta_)
    if (t >= target_->size()) throw PreconditionError("theta maps outside the target");
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw PreconditionError("network edge out of range");
    adj_[a][b] = true;
    adj_[b][a] = true;
  }
}

OneFrame Network::frame() const {
  Relation r(size());
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = adj_[a].find_first(); b != WorldSet::npos; b = adj_[a].find_next(b)) r.set(a, b);
  return OneFrame(std::move(r), std::max(size(), kDefaultMaxFrameSize));
}

std::size_t Network::add_vertex(const std::vector<std::size_t>& joins, std::size_t image) {
  const std::size_t v = size();
  for (auto& row : adj_) row.push_back(false);
  adj_.emplace_back(v + 1);
  for (auto j : joins) {
    adj_[v][j] = true;
    adj_[j][v] = true;
  }
  theta_.push_back(image);
  return v;
}

Network seed_network(const OneFrame& target) {
  const auto cls = classify(target);
  if (cls.kind != QuasiKind::QuasiElliptic)
    throw PreconditionError("target is not an elliptic quasi-1-plane");
  // Seriality makes the greedy choice the lexicographically least 3-path.
  std::vector<std::size_t> path{0};
  for (int i = 0; i < 3; ++i) path.push_back(target.neighbours(path.back()).find_first());
  return Network(std::make_shared<const OneFrame>(target), 4, {{0, 1}, {1, 2}, {2, 3}}, path);
}

CoherenceCheck coherent(const Network& net) {
  const std::size_t n = net.size();
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = net.neighbours(a).find_first(); b != WorldSet::npos; b = net.neighbours(a).find_next(b)) {
      if (!net.adjacent(b, a)) return {false, "symmetry", {a, b}};
      if (!net.target().related(net.theta()[a], net.theta()[b])) return {false, "C1", {a, b}};
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      WorldSet common = net.neighbours(x) & net.neighbours(y);
      auto first = common.find_first();
      if (first == WorldSet::npos) continue;
      if (auto second = common.find_next(first); second != WorldSet::npos)
        return {false, "C2", {x, y, first, second}};
    }
  if (n < 4) return {false, "C3", {}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool path_edge = (i + 1 == j) || (j + 1 == i);
      if (net.adjacent(i, j) != path_edge) return {false, "C3", {i, j}};
    }
  return {};
}

namespace {

bool b1_open(const Network& net, std::size_t a, std::size_t image) {
  if (!net.target().related(net.theta()[a], image)) return false;
  const auto& nb = net.neighbours(a);
  for (auto b = nb.find_first(); b != WorldSet::npos; b = nb.find_next(b))
    if (net.theta()[b] == image) return false;
  return true;
}

bool o5_open(const Network& net, std::size_t a, std::size_t b) {
  return !net.neighbours(a).intersects(net.neighbours(b));
}

}  // namespace

bool is_defect(const Network& net, const Defect& d) {
  if (d.a >= net.size()) return false;
  if (d.kind == DefectKind::B1) return d.b < net.target().size() && b1_open(net, d.a, d.b);
  return d.b < net.size() && o5_open(net, d.a, d.b);
}

std::vector<Defect> find_defects(const Network& net) {
  std::vector<Defect> out;
  const std::size_t n = net.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& want = net.target().neighbours(net.theta()[a]);
    for (auto b = want.find_first(); b != WorldSet::npos; b = want.find_next(b))
      if (b1_open(net, a, b)) out.push_back({DefectKind::B1, a, b});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (o5_open(net, a, b)) out.push_back({DefectKind::O5, a, b});
  return out;
}

namespace {

RepairRecord apply_repair(Network& net, const Defect& d) {
  if (d.kind == DefectKind::B1) {
    auto v = net.add_vertex({d.a}, d.b);
    return {d, v, d.b};
  }
  // The target satisfies O5, so a joining vertex exists.
  const WorldSet joins =
      net.target().neighbours(net.theta()[d.a]) & net.target().neighbours(net.theta()[d.b]);
  const auto image = joins.find_first();
  if (image == WorldSet::npos) throw std::logic_error("target has no common neighbour for an O5 repair");
  std::vector<std::size_t> ends{d.a};
  if (d.b != d.a) ends.push_back(d.b);
  auto v = net.add_vertex(ends, image);
  return {d, v, image};
}

}  // namespace

Network repair(const Network& net, const Defect& d) {
  if (auto c = coherent(net); !c) throw PreconditionError("network is not coherent (" + c.clause + ")");
  if (!is_defect(net, d)) throw PreconditionError(to_string(d) + " is not a defect of the network");
  Network next = net;
  next.record(apply_repair(next, d));
  if (auto c = coherent(next); !c) throw std::logic_error("repair broke coherence (" + c.clause + ")");
  return next;
}

bool surjectivity_check(const Network& net) {
  WorldSet image(net.target().size());
  for (auto t : net.theta()) image[t] = true;
  return image.all();
}

SaturationResult saturate(const OneFrame& target, std::size_t rounds) {
  if (rounds == 0) throw PreconditionError("saturation needs at least one round");
  Network net = seed_network(target);
  SaturationReport rep;
  rep.rounds = rounds;
  auto note = [&rep](bool& flag, bool ok, const std::string& what) {
    if (!ok && flag) {
      flag = false;
      if (rep.first_failure.empty()) rep.first_failure = what;
    }
  };

  for (std::size_t r = 0; r < rounds; ++r) {
    const auto snapshot = find_defects(net);
    rep.snapshot_sizes.push_back(snapshot.size());
    for (const auto& d : snapshot) {
      rep.snapshot_defects.push_back(d);
      if (!is_defect(net, d)) {
        ++rep.already_repaired;
        continue;
      }
      net.record(apply_repair(net, d));
      ++rep.repairs;
      const std::string step = "round " + std::to_string(r) + ", " + to_string(d);
      const auto c = coherent(net);
      note(rep.coherent_after_every_step, c.holds, step + ": " + c.clause);
      note(rep.seed_full_after_every_step, c.holds || c.clause != "C3", step + ": seed path");
      const OneFrame f = net.frame();
      note(rep.o3_after_every_step, check_O(f, OCondition::O3).holds, step + ": O3");
      note(rep.irreflexive_after_every_step, check_irreflexive(f).holds, step + ": loop");
    }
  }

  const auto c = coherent(net);
  rep.final_coherent = c.holds;
  rep.theta_homomorphism = c.holds || c.clause != "C1";
  rep.seed_full_subgraph = c.holds || c.clause != "C3";
  rep.final_o3 = check_O(net.frame(), OCondition::O3).holds;
  rep.all_snapshot_defects_repaired = true;
  for (const auto& d : rep.snapshot_defects)
    if (is_defect(net, d)) rep.all_snapshot_defects_repaired = false;
  for (const auto& d : find_defects(net)) ++(d.kind == DefectKind::B1 ? rep.residual_b1 : rep.residual_o5);
  rep.surjective = surjectivity_check(net);
  rep.final_size = net.size();
  return {std::move(net), std::move(rep)};
}

}  // namespace planelog
