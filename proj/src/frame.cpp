#include "planelog/frame.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace planelog {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto& row : r.rows_) row.set();
  return r;
}

Relation Relation::converse() const {
  Relation r(size());
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != WorldSet::npos; b = rows_[a].find_next(b)) r.set(b, a);
  return r;
}

Relation Relation::then(const Relation& next) const {
  if (next.size() != size()) throw PreconditionError("relation size mismatch");
  Relation r(size());
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != WorldSet::npos; b = rows_[a].find_next(b))
      r.rows_[a] |= next.rows_[b];
  return r;
}

Relation Relation::power(std::size_t k) const {
  Relation result = identity(size());
  Relation base = *this;
  // Composition is associative and powers of one relation commute, so
  // square-and-multiply is safe.
  while (k > 0) {
    if (k & 1u) result = result.then(base);
    k >>= 1u;
    if (k > 0) base = base.then(base);
  }
  return result;
}

Relation Relation::unite(const Relation& other) const {
  Relation r = *this;
  for (std::size_t a = 0; a < size(); ++a) r.rows_[a] |= other.rows_[a];
  return r;
}

bool Relation::is_subset_of(const Relation& other) const {
  for (std::size_t a = 0; a < size(); ++a)
    if (!rows_[a].is_subset_of(other.rows_[a])) return false;
  return true;
}

std::vector<Edge> Relation::pairs() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != WorldSet::npos; b = rows_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------

OneFrame::OneFrame(Relation rel, std::size_t max_size) : rel_(std::move(rel)) {
  if (rel_.size() > max_size)
    throw PreconditionError("frame has " + std::to_string(rel_.size()) +
                            " vertices, above the cap of " + std::to_string(max_size));
}

OneFrame::OneFrame(std::size_t n, const std::vector<Edge>& edges, bool symmetric,
                   std::size_t max_size) {
  if (n > max_size)
    throw PreconditionError("frame has " + std::to_string(n) + " vertices, above the cap of " +
                            std::to_string(max_size));
  rel_ = Relation(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw PreconditionError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range for " + std::to_string(n) + " vertices");
    rel_.set(a, b);
    if (symmetric) rel_.set(b, a);
  }
}

TwoFrame::TwoFrame(std::vector<std::string> points, std::vector<std::string> lines,
                   const std::vector<Edge>& incidence)
    : points_(std::move(points)), lines_(std::move(lines)) {
  std::vector<std::string> all = points_;
  all.insert(all.end(), lines_.begin(), lines_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw PreconditionError("point and line labels must be pairwise distinct");
  by_point_.assign(points_.size(), WorldSet(lines_.size()));
  by_line_.assign(lines_.size(), WorldSet(points_.size()));
  for (auto [p, l] : incidence) {
    if (p >= points_.size() || l >= lines_.size())
      throw PreconditionError("incidence pair out of range");
    by_point_[p][l] = true;
    by_line_[l][p] = true;
  }
}

TwoFrame TwoFrame::from_labels(std::vector<std::string> points, std::vector<std::string> lines,
                               const std::vector<std::pair<std::string, std::string>>& incidence) {
  std::unordered_map<std::string, std::size_t> pi, li;
  for (std::size_t i = 0; i < points.size(); ++i) pi[points[i]] = i;
  for (std::size_t i = 0; i < lines.size(); ++i) li[lines[i]] = i;
  std::vector<Edge> inc;
  for (const auto& [p, l] : incidence) {
    auto a = pi.find(p);
    auto b = li.find(l);
    if (a == pi.end()) throw PreconditionError("unknown point '" + p + "'");
    if (b == li.end()) throw PreconditionError("unknown line '" + l + "'");
    inc.emplace_back(a->second, b->second);
  }
  return TwoFrame(std::move(points), std::move(lines), inc);
}

std::vector<Edge> TwoFrame::incidence() const {
  std::vector<Edge> out;
  for (std::size_t p = 0; p < points_.size(); ++p)
    for (auto l = by_point_[p].find_first(); l != WorldSet::npos; l = by_point_[p].find_next(l))
      out.emplace_back(p, l);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(OCondition c) {
  switch (c) {
    case OCondition::O1: return "O1";
    case OCondition::O2: return "O2";
    case OCondition::O3: return "O3";
    case OCondition::O4: return "O4";
    case OCondition::O4Prime: return "O4'";
    case OCondition::O5: return "O5";
  }
  return "?";
}

std::string to_string(PCondition c) {
  switch (c) {
    case PCondition::P1: return "P1";
    case PCondition::P2: return "P2";
    case PCondition::P3: return "P3";
    case PCondition::Q1: return "Q1";
    case PCondition::Q2: return "Q2";
  }
  return "?";
}

OCondition parse_o_condition(const std::string& s) {
  for (auto c : {OCondition::O1, OCondition::O2, OCondition::O3, OCondition::O4,
                 OCondition::O4Prime, OCondition::O5})
    if (to_string(c) == s) return c;
  throw PreconditionError("unknown frame condition '" + s + "'");
}

PCondition parse_p_condition(const std::string& s) {
  for (auto c : {PCondition::P1, PCondition::P2, PCondition::P3, PCondition::Q1, PCondition::Q2})
    if (to_string(c) == s) return c;
  throw PreconditionError("unknown 2-frame condition '" + s + "'");
}

std::string to_string(QuasiKind k) {
  switch (k) {
    case QuasiKind::NotQuasi: return "not-quasi";
    case QuasiKind::QuasiProjective: return "quasi-projective";
    case QuasiKind::QuasiElliptic: return "quasi-elliptic";
  }
  return "?";
}

Relation compose(const OneFrame& frame, std::size_t n) { return frame.relation().power(n); }

OneFrame symmetric_closure(const OneFrame& frame) {
  return OneFrame(frame.relation().unite(frame.relation().converse()));
}

CheckResult check_serial(const OneFrame& frame) {
  for (std::size_t a = 0; a < frame.size(); ++a)
    if (frame.neighbours(a).none()) return {false, {a}};
  return {true, {}};
}

CheckResult check_symmetric(const OneFrame& frame) {
  for (auto [a, b] : frame.edges())
    if (!frame.related(b, a)) return {false, {a, b}};
  return {true, {}};
}

CheckResult check_irreflexive(const OneFrame& frame) {
  for (std::size_t a = 0; a < frame.size(); ++a)
    if (frame.related(a, a)) return {false, {a}};
  return {true, {}};
}

namespace {

// Universal "aR b implies aS b" with counterexample.
CheckResult check_inclusion(const Relation& r, const Relation& s) {
  for (std::size_t a = 0; a < r.size(); ++a) {
    WorldSet missing = r.successors(a) - s.successors(a);
    if (auto b = missing.find_first(); b != WorldSet::npos) return {false, {a, b}};
  }
  return {true, {}};
}

CheckResult check_o3(const OneFrame& f) {
  const Relation& rel = f.relation();
  const Relation pred = rel.converse();
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (a == c) continue;
      WorldSet bs = rel.successors(a) & pred.successors(c);  // aIb, bIc
      if (bs.none()) continue;
      WorldSet ds = rel.successors(c) & pred.successors(a);  // cId, dIa
      for (auto b = bs.find_first(); b != WorldSet::npos; b = bs.find_next(b))
        for (auto d = ds.find_first(); d != WorldSet::npos; d = ds.find_next(d))
          if (b != d) return {false, {a, b, c, d}};
    }
  return {true, {}};
}

CheckResult check_o4(const OneFrame& f) {
  const std::size_t n = f.size();
  for (std::size_t a = 0; a < n; ++a) {
    const WorldSet& na = f.neighbours(a);
    for (auto b = na.find_first(); b != WorldSet::npos; b = na.find_next(b)) {
      const WorldSet& nb = f.neighbours(b);
      for (auto c = nb.find_first(); c != WorldSet::npos; c = nb.find_next(c)) {
        const WorldSet& nc = f.neighbours(c);
        for (auto d = nc.find_first(); d != WorldSet::npos; d = nc.find_next(d)) {
          if (f.related(a, d)) continue;
          // e, f must avoid everything a, b, c, d is incident with.
          WorldSet touched = na | nb | nc | f.neighbours(d);
          for (std::size_t e = 0; e < n; ++e) {
            if (touched[e]) continue;
            WorldSet fs = f.neighbours(e) - touched;
            if (auto ff = fs.find_first(); ff != WorldSet::npos) return {true, {a, b, c, d, e, ff}};
          }
        }
      }
    }
  }
  return {false, {}};
}

CheckResult check_o4_prime(const OneFrame& f) {
  // aIbIc, a != c, b != d, not aIc, not bId. As printed, d is tied to the
  // rest only through b.
  const std::size_t n = f.size();
  for (std::size_t a = 0; a < n; ++a) {
    const WorldSet& na = f.neighbours(a);
    for (auto b = na.find_first(); b != WorldSet::npos; b = na.find_next(b)) {
      WorldSet non_b = ~f.neighbours(b);
      non_b[b] = false;
      auto d = non_b.find_first();
      if (d == WorldSet::npos) continue;
      const WorldSet& nb = f.neighbours(b);
      for (auto c = nb.find_first(); c != WorldSet::npos; c = nb.find_next(c))
        if (c != a && !f.related(a, c)) return {true, {a, b, c, d}};
    }
  }
  return {false, {}};
}

}  // namespace

CheckResult check_O(const OneFrame& frame, OCondition cond) {
  const Relation& rel = frame.relation();
  switch (cond) {
    case OCondition::O1: return check_inclusion(rel.power(4), rel.power(2));
    case OCondition::O2: {
      Relation covered = rel.power(2).unite(rel.power(3));
      return check_inclusion(Relation::full(frame.size()), covered);
    }
    case OCondition::O3: return check_o3(frame);
    case OCondition::O4: return check_o4(frame);
    case OCondition::O4Prime: return check_o4_prime(frame);
    case OCondition::O5: return check_inclusion(Relation::full(frame.size()), rel.power(2));
  }
  return {false, {}};
}

namespace {

// For every pair (x, y) of members of `rows` (x != y when `distinct`), count
// common elements; `exactly_one` demands one, otherwise at least one.
CheckResult check_pairs(const std::vector<WorldSet>& rows, std::size_t count, bool distinct,
                        bool exactly_one) {
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = distinct ? x + 1 : x; y < count; ++y) {
      auto common = (rows[x] & rows[y]).count();
      if (exactly_one ? common != 1 : common == 0) return {false, {x, y}};
    }
  return {true, {}};
}

CheckResult find_quadrangle(const TwoFrame& f) {
  const std::size_t np = f.num_points();
  auto collinear = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (f.lines_through(a) & f.lines_through(b) & f.lines_through(c)).any();
  };
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b)
      for (std::size_t c = b + 1; c < np; ++c) {
        if (collinear(a, b, c)) continue;
        for (std::size_t d = c + 1; d < np; ++d)
          if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d))
            return {true, {a, b, c, d}};
      }
  return {false, {}};
}

}  // namespace

CheckResult check_P(const TwoFrame& frame, PCondition cond) {
  std::vector<WorldSet> by_point, by_line;
  for (std::size_t p = 0; p < frame.num_points(); ++p) by_point.push_back(frame.lines_through(p));
  for (std::size_t l = 0; l < frame.num_lines(); ++l) by_line.push_back(frame.points_on(l));
  switch (cond) {
    case PCondition::P1: return check_pairs(by_point, frame.num_points(), true, true);
    case PCondition::P2: return check_pairs(by_line, frame.num_lines(), true, true);
    case PCondition::P3: return find_quadrangle(frame);
    case PCondition::Q1: return check_pairs(by_point, frame.num_points(), false, false);
    case PCondition::Q2: return check_pairs(by_line, frame.num_lines(), false, false);
  }
  return {false, {}};
}

bool is_connected(const OneFrame& frame) {
  const std::size_t n = frame.size();
  if (n == 0) return true;
  const Relation both = frame.relation().unite(frame.relation().converse());
  WorldSet seen(n);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    WorldSet fresh = both.successors(a) - seen;
    seen |= fresh;
    for (auto b = fresh.find_first(); b != WorldSet::npos; b = fresh.find_next(b)) stack.push_back(b);
  }
  return seen.all();
}

bool is_quasi_plane(const OneFrame& frame) {
  return check_serial(frame) && check_symmetric(frame) && check_O(frame, OCondition::O1);
}

namespace {

std::optional<std::vector<std::vector<std::size_t>>> equivalence_classes(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<std::size_t>> classes;
  WorldSet done(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    const WorldSet& cls = r.successors(a);
    if (!cls[a]) return std::nullopt;
    std::vector<std::size_t> members;
    for (auto b = cls.find_first(); b != WorldSet::npos; b = cls.find_next(b)) {
      if (done[b] || r.successors(b) != cls) return std::nullopt;
      members.push_back(b);
    }
    done |= cls;
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace

std::vector<std::vector<std::size_t>> i2_partition(const OneFrame& frame) {
  std::string failures;
  if (auto r = check_serial(frame); !r)
    failures += " seriality (vertex " + std::to_string(r.tuple[0]) + " has no neighbour)";
  if (auto r = check_symmetric(frame); !r)
    failures += " symmetry (" + std::to_string(r.tuple[0]) + "," + std::to_string(r.tuple[1]) + ")";
  if (auto r = check_O(frame, OCondition::O1); !r)
    failures += " O1 (" + std::to_string(r.tuple[0]) + "," + std::to_string(r.tuple[1]) + ")";
  if (!failures.empty()) throw PreconditionError("not a quasi-1-plane: fails" + failures);
  return *equivalence_classes(frame.relation().power(2));
}

FrameClassification classify(const OneFrame& frame) {
  FrameClassification c;
  c.is_serial = check_serial(frame).holds;
  c.is_symmetric = check_symmetric(frame).holds;
  c.is_irreflexive = check_irreflexive(frame).holds;
  c.is_connected = is_connected(frame);
  for (auto o : {OCondition::O1, OCondition::O2, OCondition::O3, OCondition::O4,
                 OCondition::O4Prime, OCondition::O5})
    c.satisfies[o] = check_O(frame, o).holds;
  c.i2_classes = equivalence_classes(frame.relation().power(2));
  c.is_quasi_plane = c.is_serial && c.is_symmetric && c.satisfies[OCondition::O1];
  if (c.is_quasi_plane && c.is_connected) {
    c.kind = c.i2_classes->size() == 1 ? QuasiKind::QuasiElliptic : QuasiKind::QuasiProjective;
  }
  c.is_plane = c.satisfies[OCondition::O1] && c.satisfies[OCondition::O2] &&
               c.satisfies[OCondition::O3];
  c.is_nondegenerate = c.satisfies[OCondition::O4];
  return c;
}

}  // namespace planelog
