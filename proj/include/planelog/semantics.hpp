#pragma once

#include "planelog/formula.hpp"
#include "planelog/frame.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace planelog {

// A frame with a valuation. Variables absent from the valuation are false
// everywhere.
class Model {
public:
  Model() = default;
  explicit Model(OneFrame frame, std::map<std::string, WorldSet> valuation = {});

  const OneFrame& frame() const { return frame_; }
  std::size_t size() const { return frame_.size(); }
  const std::map<std::string, WorldSet>& valuation() const { return valuation_; }
  WorldSet value(const std::string& var) const;
  void assign(const std::string& var, WorldSet worlds);

  friend bool operator==(const Model&, const Model&) = default;

private:
  OneFrame frame_;
  std::map<std::string, WorldSet> valuation_;
};

// Direct recursive truth definition at a single world.
bool satisfies(const Model& model, std::size_t world, const Formula& f);

// Bottom-up evaluation over the subformula closure; returns the set of worlds
// where f is true.
WorldSet truth_set(const Model& model, const Formula& f);

// Truth sets of every entry of subformulas(f), in that order.
std::vector<WorldSet> truth_sets(const Model& model, const Formula& f);

bool true_in_model(const Model& model, const Formula& f);

// Formula compiled to its subformula list for repeated evaluation on small
// frames (at most 64 worlds), with world sets as machine words.
class CompiledFormula {
public:
  explicit CompiledFormula(const Formula& f);

  const std::vector<Formula>& closure() const { return closure_; }
  const std::vector<std::string>& variables() const { return vars_; }

  // `succ[a]` is the successor mask of world a; `values[i]` is the valuation
  // of variables()[i]. Returns one truth mask per closure entry.
  void evaluate(const std::vector<std::uint64_t>& succ, const std::vector<std::uint64_t>& values,
                std::vector<std::uint64_t>& out) const;
  std::uint64_t evaluate_root(const std::vector<std::uint64_t>& succ,
                              const std::vector<std::uint64_t>& values) const;

private:
  struct Step {
    FormulaKind kind;
    std::size_t a = 0;  // operand index, or variable index for Var
    std::size_t b = 0;
  };
  std::vector<Formula> closure_;
  std::vector<std::string> vars_;
  std::vector<Step> steps_;
  mutable std::vector<std::uint64_t> scratch_;
};

std::vector<std::uint64_t> successor_masks(const OneFrame& frame);

inline constexpr std::size_t kDefaultValuationBits = 24;

struct ValidityResult {
  bool valid = true;
  std::optional<Model> countermodel;  // valuation on the frame refuting f
  std::size_t world = 0;              // where f fails in the countermodel
};

// Exhaustive over all valuations of the variables of f. When |vars(f)| * n
// exceeds `max_valuation_bits`, falls back to checking each world against all
// valuations of its modal_depth(f)-neighbourhood; throws PreconditionError if
// those are over the cap as well.
ValidityResult valid_in_frame(const OneFrame& frame, const Formula& f,
                              std::size_t max_valuation_bits = kDefaultValuationBits);

enum class LogicId { K, L12g, L8f };
std::string to_string(LogicId id);
LogicId parse_logic(const std::string& s);

enum class SatStatus { Sat, Unsat, Unknown };
std::string to_string(SatStatus s);

struct SatCaps {
  std::size_t max_frame_size = 6;
  std::size_t max_frames = 1'000'000;
  std::chrono::milliseconds time_limit{60'000};
  std::size_t max_valuation_bits = 20;
};

struct SatResult {
  SatStatus status = SatStatus::Unknown;
  std::optional<Model> witness;
  std::size_t witness_world = 0;
  // Every candidate frame of size <= explored_max_size was searched.
  std::size_t explored_max_size = 0;
  // Size up to which a search that finds nothing decides unsatisfiability.
  std::uint64_t exact_bound = 0;
  std::size_t closure_size = 0;  // |subformulas(f)|, desugared tree
  std::size_t frames_examined = 0;
  std::string stop_reason;
};

// Finite-model bound for the logic: 2^|closure| (K, 8f) or 2^(|closure|+1)
// (12g), saturating at 2^63; 1 for formulas without modal operators.
std::uint64_t finite_model_bound(const Formula& f, LogicId logic);

// Does the frame belong to the search class of the logic? (K: any frame;
// 12g: quasi-1-planes; 8f: quasi-1-planes with I^3 reflexive.)
bool frame_in_logic_class(const OneFrame& frame, LogicId logic);

// Bounded search over connected frames of the logic's class, by size then
// canonical code, valuations in binary-counter order.
SatResult sat_search(const Formula& f, LogicId logic, const SatCaps& caps = {});

}  // namespace planelog
