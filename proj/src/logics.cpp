#include "planelog/logics.hpp"

#include "planelog/enumerate.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace planelog {

std::string to_string(const SchemeParams& s) {
  return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + "," + std::to_string(s.p) + "," +
         std::to_string(s.q) + ")";
}

Formula scheme_instance(const SchemeParams& s) {
  const Formula p0 = Formula::var("p0");
  return Formula::implication(iterate(ModalOp::Dia, s.m, iterate(ModalOp::Box, s.n, p0)),
                              iterate(ModalOp::Box, s.p, iterate(ModalOp::Dia, s.q, p0)));
}

CheckResult g_prime_condition(const OneFrame& frame, const SchemeParams& s) {
  const Relation& r = frame.relation();
  const Relation rm = r.power(s.m), rp = r.power(s.p);
  // meet(b) = {c : I^n(b) and I^q(c) intersect}
  const Relation meet = r.power(s.n).then(r.power(s.q).converse());
  for (std::size_t a = 0; a < frame.size(); ++a) {
    const WorldSet& cs = rp.successors(a);
    const WorldSet& bs = rm.successors(a);
    for (auto b = bs.find_first(); b != WorldSet::npos; b = bs.find_next(b)) {
      WorldSet bad = cs - meet.successors(b);
      if (auto c = bad.find_first(); c != WorldSet::npos) return {false, {a, b, c}};
    }
  }
  return {true, {}};
}

CorrespondenceReport correspondence_test(const std::vector<OneFrame>& corpus, const SchemeParams& s,
                                         std::size_t max_valuation_bits) {
  CorrespondenceReport rep;
  rep.params = s;
  const Formula f = scheme_instance(s);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const bool valid = valid_in_frame(corpus[i], f, max_valuation_bits).valid;
    const bool g = g_prime_condition(corpus[i], s).holds;
    ++rep.frames;
    if (valid) ++rep.valid_count;
    if (valid != g) rep.divergences.push_back({i, valid, g});
  }
  return rep;
}

NamedAxiom axiom(const std::string& name) {
  if (name == "K")
    return {name, parse("[](p0 -> p1) -> ([]p0 -> []p1)")};
  if (name == "D") return {name, scheme_instance({0, 1, 0, 1})};
  if (name == "B") return {name, scheme_instance({1, 1, 0, 0})};
  if (name == "4^2") return {name, scheme_instance({0, 2, 4, 0})};
  if (name == "T^3") return {name, scheme_instance({0, 3, 0, 0})};
  throw PreconditionError("unknown axiom '" + name + "'");
}

std::vector<NamedAxiom> logic_axioms(LogicId logic) {
  std::vector<NamedAxiom> out{axiom("K")};
  if (logic == LogicId::K) return out;
  for (const char* n : {"D", "B", "4^2"}) out.push_back(axiom(n));
  if (logic == LogicId::L8f) out.push_back(axiom("T^3"));
  return out;
}

LogicValidation validates_logic(const OneFrame& frame, LogicId logic, std::size_t max_valuation_bits) {
  for (const auto& ax : logic_axioms(logic)) {
    auto r = valid_in_frame(frame, ax.formula, max_valuation_bits);
    if (!r.valid) return {false, ax.name, std::move(r)};
  }
  return {};
}

bool classify_elliptic_via_T3(const OneFrame& frame) {
  if (!is_quasi_plane(frame) || !is_connected(frame))
    throw PreconditionError("frame is not a connected quasi-1-plane");
  const Relation r3 = frame.relation().power(3);
  bool some = false;
  for (std::size_t a = 0; a < frame.size() && !some; ++a) some = r3.test(a, a);
  if (some != (i2_partition(frame).size() == 1))
    throw std::logic_error("I3 reflexivity disagrees with the I2-class count");
  return some;
}

Modality normalize_modality(const Modality& m) {
  std::vector<ModalOp> out;
  const auto& w = m.word();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t run = j - i;
    while (run > 3) run -= 2;
    out.insert(out.end(), run, w[i]);
    i = j;
  }
  return Modality(std::move(out));
}

std::vector<Modality> modalities_up_to(std::size_t max_len) {
  std::vector<Modality> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<ModalOp> w(len);
      for (std::size_t i = 0; i < len; ++i)
        w[i] = (bits >> (len - 1 - i)) & 1 ? ModalOp::Dia : ModalOp::Box;
      out.emplace_back(std::move(w));
    }
  return out;
}

std::vector<OneFrame> quasi_plane_corpus(std::size_t max_size, bool elliptic_only) {
  std::vector<OneFrame> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& g : frames_up_to_iso(n, true)) {
      OneFrame f = g.to_frame();
      if (!is_connected(f) || !is_quasi_plane(f)) continue;
      if (elliptic_only && i2_partition(f).size() != 1) continue;
      out.push_back(std::move(f));
    }
  return out;
}

std::string to_string(MergeConfidence c) {
  switch (c) {
    case MergeConfidence::Representative: return "representative";
    case MergeConfidence::Normalization: return "proved-equal";
    case MergeConfidence::Conjectured: return "conjectured-equal";
  }
  return "?";
}

namespace {

// Truth mask of M p for each corpus frame and valuation, concatenated.
std::vector<std::uint64_t> signature(const Modality& m, const std::vector<std::vector<std::uint64_t>>& succ) {
  std::vector<std::uint64_t> sig;
  for (const auto& s : succ) {
    const std::size_t n = s.size();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      std::uint64_t t = v;
      for (auto op = m.word().rbegin(); op != m.word().rend(); ++op) {
        std::uint64_t next = 0;
        for (std::size_t a = 0; a < n; ++a) {
          const bool hit = *op == ModalOp::Box ? (s[a] & ~t) == 0 : (s[a] & t) != 0;
          if (hit) next |= std::uint64_t{1} << a;
        }
        t = next;
      }
      sig.push_back(t);
    }
  }
  return sig;
}

}  // namespace

ModalityReport modality_classes(std::size_t max_len, const std::vector<OneFrame>& corpus,
                                const ModalityCaps& caps) {
  if (max_len == 0) throw PreconditionError("max_len must be at least 1");
  ModalityReport rep;
  rep.max_len = max_len;
  const std::size_t cap = std::min<std::size_t>(caps.size_cap, 20);
  std::vector<std::vector<std::uint64_t>> succ;
  std::vector<std::size_t> used;  // corpus index of each entry of succ
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].size() > cap) {
      rep.skipped_frames.push_back(i);
      continue;
    }
    succ.push_back(successor_masks(corpus[i]));
    used.push_back(i);
  }
  rep.frames_used = used.size();

  std::vector<std::vector<std::uint64_t>> sigs;
  std::map<std::vector<std::uint64_t>, std::size_t> by_sig;
  for (const auto& m : modalities_up_to(max_len)) {
    auto sig = signature(m, succ);
    auto [it, fresh] = by_sig.try_emplace(sig, rep.classes.size());
    if (fresh) {
      rep.classes.push_back({m, {{m, MergeConfidence::Representative}}});
      sigs.push_back(std::move(sig));
    } else {
      auto& cls = rep.classes[it->second];
      const bool proved = normalize_modality(m) == normalize_modality(cls.representative);
      cls.members.push_back({m, proved ? MergeConfidence::Normalization : MergeConfidence::Conjectured});
    }
    if (m.length() > rep.counts_by_length.size()) rep.counts_by_length.push_back(0);
    rep.counts_by_length.back() = rep.classes.size();
  }
  rep.stabilized = rep.counts_by_length.size() >= 2 &&
                   rep.counts_by_length[max_len - 1] == rep.counts_by_length[max_len - 2];

  for (std::size_t i = 0; i < sigs.size(); ++i)
    for (std::size_t j = i + 1; j < sigs.size(); ++j) {
      std::size_t pos = 0;
      for (std::size_t k = 0; k < succ.size(); ++k) {
        const std::size_t n = succ[k].size();
        const std::size_t vals = std::size_t{1} << n;
        bool found = false;
        for (std::size_t v = 0; v < vals; ++v, ++pos) {
          const std::uint64_t diff = sigs[i][pos] ^ sigs[j][pos];
          if (diff == 0) continue;
          WorldSet val(n, v);
          rep.separators.push_back({i, j, used[k], val, static_cast<std::size_t>(std::countr_zero(diff))});
          found = true;
          break;
        }
        if (found) break;
      }
    }
  return rep;
}

}  // namespace planelog
