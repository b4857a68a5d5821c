#pragma once

#include "planelog/formula.hpp"
#include "planelog/frame.hpp"
#include "planelog/semantics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace planelog {

// Parameters of the scheme <>^m []^n phi -> []^p <>^q phi.
struct SchemeParams {
  std::size_t m = 0, n = 0, p = 0, q = 0;
  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

std::string to_string(const SchemeParams& s);

// Single-variable instance over p0.
Formula scheme_instance(const SchemeParams& s);

// For all a, b, c with a I^m b and a I^p c there is d with b I^n d and c I^q d.
// Counterexample tuple is (a, b, c).
CheckResult g_prime_condition(const OneFrame& frame, const SchemeParams& s);

struct Divergence {
  std::size_t frame_index;
  bool valid;    // validity of the scheme instance
  bool g_prime;  // the first-order condition
};

struct CorrespondenceReport {
  SchemeParams params;
  std::size_t frames = 0;
  std::size_t valid_count = 0;
  std::vector<Divergence> divergences;
};

CorrespondenceReport correspondence_test(const std::vector<OneFrame>& corpus, const SchemeParams& s,
                                         std::size_t max_valuation_bits = kDefaultValuationBits);

struct NamedAxiom {
  std::string name;
  Formula formula;
};

// Instances over p0 (and p1 for K):
// K:  [](p0 -> p1) -> ([]p0 -> []p1)
// D:  []p0 -> <>p0          B:  <>[]p0 -> p0
// 4^2: [][]p0 -> [][][][]p0  T^3: [][][]p0 -> p0
NamedAxiom axiom(const std::string& name);
std::vector<NamedAxiom> logic_axioms(LogicId logic);

struct LogicValidation {
  bool holds = true;
  std::string failed_axiom;
  ValidityResult refutation;
  explicit operator bool() const { return holds; }
};

LogicValidation validates_logic(const OneFrame& frame, LogicId logic,
                                std::size_t max_valuation_bits = kDefaultValuationBits);

// Some a with a I^3 a. Requires a connected quasi-1-plane, and checks the
// answer against the number of I2-classes (logic_error on disagreement).
bool classify_elliptic_via_T3(const OneFrame& frame);

// Shortens every maximal run of one symbol by 2 while it is longer than 3.
Modality normalize_modality(const Modality& m);

// All words of length 1..max_len in shortlex order ([] before <>).
std::vector<Modality> modalities_up_to(std::size_t max_len);

// Connected quasi-1-planes on 1..max_size vertices up to isomorphism, in
// enumeration order; only those with one I2-class when `elliptic_only`.
std::vector<OneFrame> quasi_plane_corpus(std::size_t max_size, bool elliptic_only);

struct ModalityCaps {
  std::size_t size_cap = 6;  // larger corpus frames are skipped
};

enum class MergeConfidence { Representative, Normalization, Conjectured };
std::string to_string(MergeConfidence c);

struct ModalityMember {
  Modality modality;
  MergeConfidence confidence;
};

struct ModalityClass {
  Modality representative;
  std::vector<ModalityMember> members;
};

// Refutation of M1 p <-> M2 p: frame, valuation of p and world.
struct Separator {
  std::size_t first_class, second_class;
  std::size_t frame_index;
  WorldSet valuation;
  std::size_t world;
};

struct ModalityReport {
  std::size_t max_len = 0;
  std::vector<ModalityClass> classes;
  std::vector<std::size_t> counts_by_length;  // entry L-1: classes among words of length <= L
  bool stabilized = false;                    // last two counts agree
  std::vector<Separator> separators;          // one per pair of classes
  std::vector<std::size_t> skipped_frames;
  std::size_t frames_used = 0;
};

// Semi-decision: words are merged when no corpus frame, valuation of p and
// world separates them. Separated classes are proved distinct.
ModalityReport modality_classes(std::size_t max_len, const std::vector<OneFrame>& corpus,
                                const ModalityCaps& caps = {});

}  // namespace planelog
