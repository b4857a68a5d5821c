#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planelog {

using WorldSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<std::size_t, std::size_t>;

// Raised when an operation's documented precondition does not hold for the
// given input (wrong kind of frame, out-of-range vertex, size cap, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultMaxFrameSize = 4096;

// Binary relation on {0..n-1}, stored as one successor bitset per element so
// that composition is a boolean matrix product over words.
class Relation {
public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, WorldSet(n)) {}
  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t a, std::size_t b) const { return rows_[a][b]; }
  void set(std::size_t a, std::size_t b, bool v = true) { rows_[a][b] = v; }
  const WorldSet& successors(std::size_t a) const { return rows_[a]; }

  Relation converse() const;
  // (a,c) in result iff (a,b) in *this and (b,c) in next, for some b.
  Relation then(const Relation& next) const;
  Relation power(std::size_t k) const;
  Relation unite(const Relation& other) const;
  bool is_subset_of(const Relation& other) const;
  bool is_symmetric() const { return *this == converse(); }
  std::vector<Edge> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

private:
  std::vector<WorldSet> rows_;
};

// One-sorted frame (X, I) with X = {0..n-1}. Loops are allowed.
class OneFrame {
public:
  OneFrame() = default;
  explicit OneFrame(Relation rel, std::size_t max_size = kDefaultMaxFrameSize);
  // With symmetric = true the symmetric closure of the edge list is taken.
  OneFrame(std::size_t n, const std::vector<Edge>& edges, bool symmetric = false,
           std::size_t max_size = kDefaultMaxFrameSize);

  std::size_t size() const { return rel_.size(); }
  const Relation& relation() const { return rel_; }
  bool related(std::size_t a, std::size_t b) const { return rel_.test(a, b); }
  const WorldSet& neighbours(std::size_t a) const { return rel_.successors(a); }
  std::vector<Edge> edges() const { return rel_.pairs(); }

  friend bool operator==(const OneFrame&, const OneFrame&) = default;

private:
  Relation rel_;
};

// Two-sorted frame (P, L, I) with I a subset of P x L.
class TwoFrame {
public:
  TwoFrame() = default;
  TwoFrame(std::vector<std::string> points, std::vector<std::string> lines,
           const std::vector<Edge>& incidence);  // (point index, line index)
  static TwoFrame from_labels(std::vector<std::string> points, std::vector<std::string> lines,
                              const std::vector<std::pair<std::string, std::string>>& incidence);

  std::size_t num_points() const { return points_.size(); }
  std::size_t num_lines() const { return lines_.size(); }
  const std::vector<std::string>& point_labels() const { return points_; }
  const std::vector<std::string>& line_labels() const { return lines_; }
  bool incident(std::size_t point, std::size_t line) const { return by_point_[point][line]; }
  const WorldSet& lines_through(std::size_t point) const { return by_point_[point]; }
  const WorldSet& points_on(std::size_t line) const { return by_line_[line]; }
  std::vector<Edge> incidence() const;

  // Carrier index used whenever the two sorts are flattened: points first,
  // then lines.
  std::size_t carrier_size() const { return points_.size() + lines_.size(); }
  std::size_t line_carrier_index(std::size_t line) const { return points_.size() + line; }

  friend bool operator==(const TwoFrame&, const TwoFrame&) = default;

private:
  std::vector<std::string> points_;
  std::vector<std::string> lines_;
  std::vector<WorldSet> by_point_;
  std::vector<WorldSet> by_line_;
};

// Outcome of a first-order frame predicate. For an existential condition that
// holds, `tuple` is a witness; for a universal condition that fails, it is a
// counterexample. Otherwise it is empty.
struct CheckResult {
  bool holds = false;
  std::vector<std::size_t> tuple;

  explicit operator bool() const { return holds; }
};

enum class OCondition { O1, O2, O3, O4, O4Prime, O5 };
enum class PCondition { P1, P2, P3, Q1, Q2 };

std::string to_string(OCondition c);
std::string to_string(PCondition c);
OCondition parse_o_condition(const std::string& s);
PCondition parse_p_condition(const std::string& s);

Relation compose(const OneFrame& frame, std::size_t n);
OneFrame symmetric_closure(const OneFrame& frame);

CheckResult check_serial(const OneFrame& frame);
CheckResult check_symmetric(const OneFrame& frame);
CheckResult check_irreflexive(const OneFrame& frame);
CheckResult check_O(const OneFrame& frame, OCondition cond);
CheckResult check_P(const TwoFrame& frame, PCondition cond);

bool is_connected(const OneFrame& frame);

// Serial, symmetric and O1.
bool is_quasi_plane(const OneFrame& frame);

// I^2-equivalence classes of a quasi-1-plane, each sorted, ordered by least
// member. Throws PreconditionError naming the failing requirement otherwise.
std::vector<std::vector<std::size_t>> i2_partition(const OneFrame& frame);

enum class QuasiKind { NotQuasi, QuasiProjective, QuasiElliptic };
std::string to_string(QuasiKind k);

struct FrameClassification {
  bool is_serial = false;
  bool is_symmetric = false;
  bool is_irreflexive = false;
  bool is_connected = false;
  bool is_quasi_plane = false;
  std::map<OCondition, bool> satisfies;
  // Present when I^2 is an equivalence relation (in particular on every
  // quasi-1-plane).
  std::optional<std::vector<std::vector<std::size_t>>> i2_classes;
  // Projective/elliptic refer to connected quasi-1-planes only; a
  // disconnected quasi-1-plane is reported as NotQuasi with is_quasi_plane set.
  QuasiKind kind = QuasiKind::NotQuasi;
  bool is_plane = false;          // O1, O2 and O3
  bool is_nondegenerate = false;  // O4; O4' is in `satisfies`
};

FrameClassification classify(const OneFrame& frame);

}  // namespace planelog
