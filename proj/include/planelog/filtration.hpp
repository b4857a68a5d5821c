#pragma once

#include "planelog/frame.hpp"
#include "planelog/semantics.hpp"

#include <string>
#include <vector>

namespace planelog {

enum class FiltrationMode { Least, ProjectiveSplit };
std::string to_string(FiltrationMode m);
FiltrationMode parse_filtration_mode(const std::string& s);

struct Filtration {
  Model source;
  std::vector<Formula> phi;          // subformulas(f)
  std::vector<std::size_t> classes;  // source world -> quotient world
  Model quotient;
  FiltrationMode mode = FiltrationMode::Least;
  // Split mode only: true for quotient worlds that came from the line sort.
  std::vector<bool> line_class;
};

// Quotient of `model` by agreement on subformulas(f), with the existential
// ("least") relation between classes. Split mode quotients the two I^2-classes
// separately (points are the class of vertex 0) and requires a connected
// quasi-1-plane with exactly two classes. Class ids follow first occurrence
// over ascending source worlds. Filtration clauses (i)-(iii) are audited.
Filtration filtrate(const Model& model, const Formula& f, FiltrationMode mode);

struct FiltrationCheck {
  bool holds = true;
  std::size_t formula_index = 0;  // into phi
  std::size_t world = 0;          // source world

  explicit operator bool() const { return holds; }
};

// M, a |= psi iff M', [a] |= psi for every psi in phi and every source world.
FiltrationCheck verify_filtration_theorem(const Filtration& filt);

struct QuotientAudit {
  FrameClassification quotient;
  bool ok = true;
  bool parity_holds = true;  // split mode: I' never joins two classes of one sort
  std::vector<std::string> failures;
};

// Checks that the quotient frame is in the class the source's logic needs:
// least mode keeps seriality, symmetry and (on elliptic sources) O5; split
// mode yields a quasi-1-plane whose two I'^2-classes are exactly P' and L'.
QuotientAudit audit_quotient_logic(const Filtration& filt);

}  // namespace planelog
