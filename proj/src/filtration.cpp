#include "planelog/filtration.hpp"

#include <map>
#include <stdexcept>

namespace planelog {

std::string to_string(FiltrationMode m) {
  return m == FiltrationMode::Least ? "least" : "projective_split";
}

FiltrationMode parse_filtration_mode(const std::string& s) {
  if (s == "least") return FiltrationMode::Least;
  if (s == "projective_split" || s == "split") return FiltrationMode::ProjectiveSplit;
  throw PreconditionError("unknown filtration mode '" + s + "'");
}

Filtration filtrate(const Model& model, const Formula& f, FiltrationMode mode) {
  const OneFrame& frame = model.frame();
  const std::size_t n = frame.size();

  WorldSet is_line(n);
  if (mode == FiltrationMode::ProjectiveSplit) {
    if (!is_connected(frame)) throw PreconditionError("split filtration needs a connected frame");
    const auto cls = i2_partition(frame);
    if (cls.size() != 2)
      throw PreconditionError("split filtration needs exactly two I^2-classes, found " +
                              std::to_string(cls.size()));
    for (auto v : cls[1]) is_line[v] = true;
  }

  Filtration filt;
  filt.source = model;
  filt.phi = subformulas(f);
  filt.mode = mode;
  const auto truth = truth_sets(model, f);

  // Key: sort flag followed by the membership bits of Phi_a.
  std::map<std::vector<bool>, std::size_t> ids;
  filt.classes.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> key;
    key.reserve(truth.size() + 1);
    key.push_back(is_line[a]);
    for (const auto& t : truth) key.push_back(t[a]);
    auto [it, fresh] = ids.emplace(std::move(key), ids.size());
    filt.classes[a] = it->second;
    if (fresh && mode == FiltrationMode::ProjectiveSplit) filt.line_class.push_back(is_line[a]);
  }

  const std::size_t k = ids.size();
  Relation quotient_rel(k);
  for (auto [a, b] : frame.edges()) quotient_rel.set(filt.classes[a], filt.classes[b]);

  std::map<std::string, WorldSet> valuation;
  for (const auto& var : f.variables()) {
    WorldSet v(k);
    const WorldSet src = model.value(var);
    for (auto a = src.find_first(); a != WorldSet::npos; a = src.find_next(a)) v[filt.classes[a]] = true;
    valuation.emplace(var, std::move(v));
  }
  filt.quotient = Model(OneFrame(std::move(quotient_rel)), std::move(valuation));

  // (i) holds by construction of the relation; (iii) by construction of the
  // valuation. (ii) is checked over representatives.
  const auto& qrel = filt.quotient.frame().relation();
  for (std::size_t i = 0; i < filt.phi.size(); ++i) {
    if (filt.phi[i].kind() != FormulaKind::Box) continue;
    std::size_t inner = 0;
    while (!(filt.phi[inner] == filt.phi[i].operand())) ++inner;
    for (std::size_t a = 0; a < n; ++a) {
      if (!truth[i][a]) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (qrel.test(filt.classes[a], filt.classes[b]) && !truth[inner][b])
          throw std::logic_error("filtration clause (ii) fails for " + filt.phi[i].to_string());
    }
  }
  return filt;
}

FiltrationCheck verify_filtration_theorem(const Filtration& filt) {
  const Formula& root = filt.phi.back();
  const auto src = truth_sets(filt.source, root);
  const auto dst = truth_sets(filt.quotient, root);
  for (std::size_t i = 0; i < filt.phi.size(); ++i)
    for (std::size_t a = 0; a < filt.source.size(); ++a)
      if (src[i][a] != dst[i][filt.classes[a]]) return {false, i, a};
  return {};
}

QuotientAudit audit_quotient_logic(const Filtration& filt) {
  const OneFrame& source = filt.source.frame();
  if (!is_quasi_plane(source)) throw PreconditionError("source frame is not a quasi-1-plane");
  const OneFrame& q = filt.quotient.frame();

  QuotientAudit audit;
  audit.quotient = classify(q);
  auto fail = [&audit](std::string why) {
    audit.ok = false;
    audit.failures.push_back(std::move(why));
  };
  if (!audit.quotient.is_serial) fail("quotient is not serial");
  if (!audit.quotient.is_symmetric) fail("quotient is not symmetric");

  if (filt.mode == FiltrationMode::Least) {
    if (check_O(source, OCondition::O5) && !audit.quotient.satisfies[OCondition::O5])
      fail("elliptic source but quotient fails O5");
    return audit;
  }

  for (auto [x, y] : q.edges())
    if (filt.line_class[x] == filt.line_class[y]) audit.parity_holds = false;
  if (!audit.parity_holds) fail("quotient relates two classes of the same sort");
  if (!audit.quotient.satisfies[OCondition::O1]) fail("quotient fails O1");
  if (audit.quotient.kind != QuasiKind::QuasiProjective) {
    fail("quotient is not a projective quasi-1-plane");
  } else {
    for (const auto& cls : *audit.quotient.i2_classes)
      for (auto x : cls)
        if (filt.line_class[x] != filt.line_class[cls.front()])
          fail("I'^2-classes differ from the point/line sorts");
  }
  return audit;
}

}  // namespace planelog
