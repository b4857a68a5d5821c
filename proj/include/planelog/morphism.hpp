#pragma once

#include "planelog/frame.hpp"
#include "planelog/semantics.hpp"

#include <string>
#include <variant>
#include <vector>

namespace planelog {

using AnyFrame = std::variant<OneFrame, TwoFrame>;

std::size_t carrier_size(const AnyFrame& f);

// Incidence on the flattened carrier. For a 2-frame the relation is directed
// from points (indices 0..|P|-1) to lines (indices |P|..).
Relation carrier_relation(const AnyFrame& f);

// A map between carriers. Supported sorts are 1->1, 2->2 and 2->1; for 2->2
// points go to points and lines to lines. Construction rejects anything else.
class Morphism {
public:
  Morphism(AnyFrame source, AnyFrame target, std::vector<std::size_t> map);

  const AnyFrame& source() const { return source_; }
  const AnyFrame& target() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }

  bool from_two_frame() const { return std::holds_alternative<TwoFrame>(source_); }
  bool to_two_frame() const { return std::holds_alternative<TwoFrame>(target_); }

private:
  AnyFrame source_;
  AnyFrame target_;
  std::vector<std::size_t> map_;
};

enum class MorphismLevel { Homomorphism, Bounded };

struct MorphismCheck {
  bool holds = true;
  std::string condition;           // "F", "B1" or "B2" when violated
  std::vector<std::size_t> tuple;  // violating carrier elements

  explicit operator bool() const { return holds; }
};

// F always; for Bounded also B1, and B2 when the source is a 2-frame.
MorphismCheck check_morphism(const Morphism& m, MorphismLevel level);
bool is_surjective(const Morphism& m);

// outer after inner. Both must be bounded; the composite is re-audited.
Morphism compose_morphisms(const Morphism& outer, const Morphism& inner);

// (P u L, I+), points first.
OneFrame plus(const TwoFrame& frame);

// A bounded 2->1 morphism into a symmetric frame, re-typed with source
// plus(source) and re-audited.
Morphism lift_2to1(const Morphism& m);

struct SplitPreimage {
  TwoFrame frame;
  Morphism theta;  // surjective bounded 2->1 onto the input frame
};

// Two-sorted preimage of a connected quasi-1-plane. With two I^2-classes the
// classes of the least vertex and its complement become points and lines and
// theta is the identity; with one class the carrier is doubled and theta is
// the projection.
SplitPreimage split_preimage(const OneFrame& frame);

struct GeneratedSubframe {
  OneFrame frame;
  std::vector<std::size_t> vertices;  // vertices[i] is the source vertex of i
  Morphism inclusion;
};

GeneratedSubframe point_generated(const OneFrame& frame, std::size_t root);

// V'(p) = theta^-1 V(p) along a bounded 1->1 morphism into model's frame.
Model pull_back_model(const Morphism& m, const Model& model);

}  // namespace planelog
