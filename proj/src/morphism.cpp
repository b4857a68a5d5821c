#include "planelog/morphism.hpp"

#include <stdexcept>

namespace planelog {

std::size_t carrier_size(const AnyFrame& f) {
  return std::visit(
      [](const auto& fr) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(fr)>, OneFrame>) return fr.size();
        else return fr.carrier_size();
      },
      f);
}

Relation carrier_relation(const AnyFrame& f) {
  if (const auto* one = std::get_if<OneFrame>(&f)) return one->relation();
  const auto& two = std::get<TwoFrame>(f);
  Relation r(two.carrier_size());
  for (auto [p, l] : two.incidence()) r.set(p, two.line_carrier_index(l));
  return r;
}

Morphism::Morphism(AnyFrame source, AnyFrame target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!from_two_frame() && to_two_frame())
    throw PreconditionError("morphisms from a 1-frame to a 2-frame are not defined");
  const std::size_t src_n = carrier_size(source_);
  const std::size_t tgt_n = carrier_size(target_);
  if (map_.size() != src_n)
    throw PreconditionError("map covers " + std::to_string(map_.size()) + " of " +
                            std::to_string(src_n) + " source elements");
  for (std::size_t x = 0; x < src_n; ++x)
    if (map_[x] >= tgt_n)
      throw PreconditionError("image of " + std::to_string(x) + " is outside the target");
  if (from_two_frame() && to_two_frame()) {
    const auto np = std::get<TwoFrame>(source_).num_points();
    const auto tp = std::get<TwoFrame>(target_).num_points();
    for (std::size_t x = 0; x < src_n; ++x)
      if ((x < np) != (map_[x] < tp))
        throw PreconditionError("2->2 map must send points to points and lines to lines");
  }
}

MorphismCheck check_morphism(const Morphism& m, MorphismLevel level) {
  const Relation src = carrier_relation(m.source());
  const Relation tgt = carrier_relation(m.target());
  const auto& th = m.map();

  for (auto [a, b] : src.pairs())
    if (!tgt.test(th[a], th[b])) return {false, "F", {a, b}};
  if (level == MorphismLevel::Homomorphism) return {};

  const std::size_t tgt_n = tgt.size();
  // B1 ranges over the whole carrier for a 1-frame and over the points of a
  // 2-frame; the incidence relation only leaves points in the latter case.
  const std::size_t b1_domain =
      m.from_two_frame() ? std::get<TwoFrame>(m.source()).num_points() : src.size();
  for (std::size_t a = 0; a < b1_domain; ++a) {
    WorldSet reached(tgt_n);
    const auto& succ = src.successors(a);
    for (auto b = succ.find_first(); b != WorldSet::npos; b = succ.find_next(b)) reached[th[b]] = true;
    WorldSet missing = tgt.successors(th[a]) - reached;
    if (auto b2 = missing.find_first(); b2 != WorldSet::npos) return {false, "B1", {a, b2}};
  }
  if (!m.from_two_frame()) return {};

  const Relation src_pred = src.converse();
  const Relation tgt_pred = tgt.converse();
  const auto np = std::get<TwoFrame>(m.source()).num_points();
  for (std::size_t b = np; b < src.size(); ++b) {
    WorldSet reached(tgt_n);
    const auto& pred = src_pred.successors(b);
    for (auto a = pred.find_first(); a != WorldSet::npos; a = pred.find_next(a)) reached[th[a]] = true;
    WorldSet missing = tgt_pred.successors(th[b]) - reached;
    if (auto a2 = missing.find_first(); a2 != WorldSet::npos) return {false, "B2", {a2, b}};
  }
  return {};
}

bool is_surjective(const Morphism& m) {
  WorldSet image(carrier_size(m.target()));
  for (auto y : m.map()) image[y] = true;
  return image.all();
}

Morphism compose_morphisms(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source()))
    throw PreconditionError("inner morphism's target is not the outer morphism's source");
  if (auto c = check_morphism(inner, MorphismLevel::Bounded); !c)
    throw PreconditionError("inner morphism is not bounded (" + c.condition + ")");
  if (auto c = check_morphism(outer, MorphismLevel::Bounded); !c)
    throw PreconditionError("outer morphism is not bounded (" + c.condition + ")");
  std::vector<std::size_t> map(inner.map().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = outer(inner(x));
  Morphism result(inner.source(), outer.target(), std::move(map));
  if (auto c = check_morphism(result, MorphismLevel::Bounded); !c)
    throw std::logic_error("composite of bounded morphisms failed " + c.condition);
  return result;
}

OneFrame plus(const TwoFrame& frame) {
  Relation r(frame.carrier_size());
  for (auto [p, l] : frame.incidence()) {
    r.set(p, frame.line_carrier_index(l));
    r.set(frame.line_carrier_index(l), p);
  }
  return OneFrame(std::move(r));
}

Morphism lift_2to1(const Morphism& m) {
  if (!m.from_two_frame() || m.to_two_frame())
    throw PreconditionError("lift_2to1 needs a 2->1 morphism");
  const auto& target = std::get<OneFrame>(m.target());
  if (!check_symmetric(target)) throw PreconditionError("target relation is not symmetric");
  if (auto c = check_morphism(m, MorphismLevel::Bounded); !c)
    throw PreconditionError("morphism is not bounded (" + c.condition + ")");
  Morphism lifted(plus(std::get<TwoFrame>(m.source())), target, m.map());
  if (auto c = check_morphism(lifted, MorphismLevel::Bounded); !c)
    throw std::logic_error("lifted morphism failed " + c.condition);
  return lifted;
}

SplitPreimage split_preimage(const OneFrame& frame) {
  if (!is_connected(frame)) throw PreconditionError("frame is not connected");
  const auto classes = i2_partition(frame);  // throws unless quasi
  const std::size_t n = frame.size();

  std::vector<std::string> points, lines;
  std::vector<Edge> incidence;
  std::vector<std::size_t> map;
  if (classes.size() == 2) {
    // classes[0] holds vertex 0, which is I^2(0); classes[1] is I^3(0).
    const auto& ps = classes[0];
    const auto& ls = classes[1];
    for (auto v : ps) points.push_back("v" + std::to_string(v));
    for (auto v : ls) lines.push_back("v" + std::to_string(v));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ls.size(); ++j)
        if (frame.related(ps[i], ls[j])) incidence.emplace_back(i, j);
    map = ps;
    map.insert(map.end(), ls.begin(), ls.end());
  } else {
    for (std::size_t v = 0; v < n; ++v) points.push_back("v" + std::to_string(v) + "_0");
    for (std::size_t v = 0; v < n; ++v) lines.push_back("v" + std::to_string(v) + "_1");
    for (auto [a, b] : frame.edges()) incidence.emplace_back(a, b);
    for (int copy = 0; copy < 2; ++copy)
      for (std::size_t v = 0; v < n; ++v) map.push_back(v);
  }

  TwoFrame two(std::move(points), std::move(lines), incidence);
  Morphism theta(two, frame, std::move(map));
  if (!check_P(two, PCondition::Q1) || !check_P(two, PCondition::Q2))
    throw std::logic_error("split preimage is not a quasi-2-plane");
  if (auto c = check_morphism(theta, MorphismLevel::Bounded); !c)
    throw std::logic_error("split preimage map failed " + c.condition);
  if (!is_surjective(theta)) throw std::logic_error("split preimage map is not surjective");
  return {std::move(two), std::move(theta)};
}

GeneratedSubframe point_generated(const OneFrame& frame, std::size_t root) {
  if (root >= frame.size()) throw PreconditionError("root vertex out of range");
  WorldSet reach(frame.size());
  reach[root] = true;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    WorldSet fresh = frame.neighbours(a) - reach;
    reach |= fresh;
    for (auto b = fresh.find_first(); b != WorldSet::npos; b = fresh.find_next(b)) stack.push_back(b);
  }
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> index(frame.size(), 0);
  for (auto v = reach.find_first(); v != WorldSet::npos; v = reach.find_next(v)) {
    index[v] = vertices.size();
    vertices.push_back(v);
  }
  Relation r(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& succ = frame.neighbours(vertices[i]);
    for (auto b = succ.find_first(); b != WorldSet::npos; b = succ.find_next(b)) r.set(i, index[b]);
  }
  OneFrame sub(std::move(r));
  Morphism inclusion(sub, frame, vertices);
  if (!is_connected(sub)) throw std::logic_error("point-generated subframe is not connected");
  if (auto c = check_morphism(inclusion, MorphismLevel::Bounded); !c)
    throw std::logic_error("inclusion of a point-generated subframe failed " + c.condition);
  return {std::move(sub), std::move(vertices), std::move(inclusion)};
}

Model pull_back_model(const Morphism& m, const Model& model) {
  if (m.from_two_frame() || m.to_two_frame())
    throw PreconditionError("pull-back needs a 1->1 morphism");
  if (!(std::get<OneFrame>(m.target()) == model.frame()))
    throw PreconditionError("model is not on the morphism's target frame");
  if (auto c = check_morphism(m, MorphismLevel::Bounded); !c)
    throw PreconditionError("morphism is not bounded (" + c.condition + ")");
  const auto& source = std::get<OneFrame>(m.source());
  Model pulled(source);
  for (const auto& [var, worlds] : model.valuation()) {
    WorldSet pre(source.size());
    for (std::size_t a = 0; a < source.size(); ++a) pre[a] = worlds[m(a)];
    pulled.assign(var, std::move(pre));
  }
  return pulled;
}

}  // namespace planelog
