#include "planelog/semantics.hpp"

#include "planelog/enumerate.hpp"

#include <bit>
#include <unordered_map>

namespace planelog {

Model::Model(OneFrame frame, std::map<std::string, WorldSet> valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  for (auto& [name, worlds] : valuation_)
    if (worlds.size() != frame_.size())
      throw PreconditionError("valuation of '" + name + "' has the wrong number of worlds");
}

WorldSet Model::value(const std::string& var) const {
  auto it = valuation_.find(var);
  return it == valuation_.end() ? WorldSet(frame_.size()) : it->second;
}

void Model::assign(const std::string& var, WorldSet worlds) {
  if (worlds.size() != frame_.size())
    throw PreconditionError("valuation of '" + var + "' has the wrong number of worlds");
  valuation_[var] = std::move(worlds);
}

bool satisfies(const Model& model, std::size_t world, const Formula& f) {
  if (world >= model.size())
    throw PreconditionError("world " + std::to_string(world) + " out of range");
  switch (f.kind()) {
    case FormulaKind::Var: {
      auto it = model.valuation().find(f.name());
      return it != model.valuation().end() && it->second[world];
    }
    case FormulaKind::Not: return !satisfies(model, world, f.operand());
    case FormulaKind::And:
      return satisfies(model, world, f.left()) && satisfies(model, world, f.right());
    case FormulaKind::Box: {
      const auto& succ = model.frame().neighbours(world);
      for (auto b = succ.find_first(); b != WorldSet::npos; b = succ.find_next(b))
        if (!satisfies(model, b, f.operand())) return false;
      return true;
    }
    case FormulaKind::Dia: {
      const auto& succ = model.frame().neighbours(world);
      for (auto b = succ.find_first(); b != WorldSet::npos; b = succ.find_next(b))
        if (satisfies(model, b, f.operand())) return true;
      return false;
    }
  }
  return false;
}

std::vector<WorldSet> truth_sets(const Model& model, const Formula& f) {
  const std::size_t n = model.size();
  const auto closure = subformulas(f);
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  std::vector<WorldSet> truth;
  truth.reserve(closure.size());
  for (const auto& g : closure) {
    WorldSet t(n);
    switch (g.kind()) {
      case FormulaKind::Var: t = model.value(g.name()); break;
      case FormulaKind::Not: t = ~truth[index.at(g.operand())]; break;
      case FormulaKind::And: t = truth[index.at(g.left())] & truth[index.at(g.right())]; break;
      case FormulaKind::Box: {
        const WorldSet& inner = truth[index.at(g.operand())];
        for (std::size_t a = 0; a < n; ++a) t[a] = model.frame().neighbours(a).is_subset_of(inner);
        break;
      }
      case FormulaKind::Dia: {
        const WorldSet& inner = truth[index.at(g.operand())];
        for (std::size_t a = 0; a < n; ++a) t[a] = model.frame().neighbours(a).intersects(inner);
        break;
      }
    }
    index.emplace(g, truth.size());
    truth.push_back(std::move(t));
  }
  return truth;
}

WorldSet truth_set(const Model& model, const Formula& f) { return truth_sets(model, f).back(); }

bool true_in_model(const Model& model, const Formula& f) { return truth_set(model, f).all(); }

// ---------------------------------------------------------------------------

CompiledFormula::CompiledFormula(const Formula& f) : closure_(subformulas(f)), vars_(f.variables()) {
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < vars_.size(); ++i) var_index[vars_[i]] = i;
  for (std::size_t i = 0; i < closure_.size(); ++i) {
    const auto& g = closure_[i];
    Step s{g.kind()};
    switch (g.kind()) {
      case FormulaKind::Var: s.a = var_index.at(g.name()); break;
      case FormulaKind::And:
        s.a = index.at(g.left());
        s.b = index.at(g.right());
        break;
      default: s.a = index.at(g.operand()); break;
    }
    steps_.push_back(s);
    index.emplace(g, i);
  }
}

void CompiledFormula::evaluate(const std::vector<std::uint64_t>& succ,
                               const std::vector<std::uint64_t>& values,
                               std::vector<std::uint64_t>& out) const {
  const std::size_t n = succ.size();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  out.resize(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    switch (s.kind) {
      case FormulaKind::Var: out[i] = values[s.a] & all; break;
      case FormulaKind::Not: out[i] = ~out[s.a] & all; break;
      case FormulaKind::And: out[i] = out[s.a] & out[s.b]; break;
      case FormulaKind::Box: {
        std::uint64_t t = 0;
        for (std::size_t w = 0; w < n; ++w)
          if ((succ[w] & ~out[s.a]) == 0) t |= std::uint64_t{1} << w;
        out[i] = t;
        break;
      }
      case FormulaKind::Dia: {
        std::uint64_t t = 0;
        for (std::size_t w = 0; w < n; ++w)
          if (succ[w] & out[s.a]) t |= std::uint64_t{1} << w;
        out[i] = t;
        break;
      }
    }
  }
}

std::uint64_t CompiledFormula::evaluate_root(const std::vector<std::uint64_t>& succ,
                                             const std::vector<std::uint64_t>& values) const {
  evaluate(succ, values, scratch_);
  return scratch_.back();
}

std::vector<std::uint64_t> successor_masks(const OneFrame& frame) {
  if (frame.size() > 64) throw PreconditionError("word-sized evaluation needs at most 64 worlds");
  std::vector<std::uint64_t> succ(frame.size(), 0);
  for (auto [a, b] : frame.edges()) succ[a] |= std::uint64_t{1} << b;
  return succ;
}

namespace {

WorldSet mask_to_set(std::uint64_t mask, std::size_t n) { return WorldSet(n, mask); }

}  // namespace

namespace {

// Worlds reachable from a in at most `depth` steps, ascending.
std::vector<std::size_t> ball(const OneFrame& frame, std::size_t a, std::size_t depth) {
  WorldSet seen(frame.size()), frontier(frame.size());
  seen[a] = frontier[a] = true;
  for (std::size_t k = 0; k < depth && frontier.any(); ++k) {
    WorldSet next(frame.size());
    for (auto x = frontier.find_first(); x != WorldSet::npos; x = frontier.find_next(x)) next |= frame.neighbours(x);
    frontier = next - seen;
    seen |= next;
  }
  std::vector<std::size_t> out;
  for (auto x = seen.find_first(); x != WorldSet::npos; x = seen.find_next(x)) out.push_back(x);
  return out;
}

// Truth of f at a depends only on the worlds within modal_depth(f) steps, so
// validity can be decided world by world on those balls. Used when the whole
// valuation space is over the cap; returns nullopt if some ball is too.
std::optional<ValidityResult> valid_locally(const OneFrame& frame, const Formula& f, std::size_t max_bits) {
  const auto vars = f.variables();
  std::vector<std::vector<std::size_t>> balls;
  for (std::size_t a = 0; a < frame.size(); ++a) {
    balls.push_back(ball(frame, a, f.modal_depth()));
    if (balls.back().size() > 64 || vars.size() * balls.back().size() > max_bits) return std::nullopt;
  }
  CompiledFormula cf(f);
  ValidityResult result;
  for (std::size_t a = 0; a < frame.size(); ++a) {
    const auto& b = balls[a];
    const std::size_t m = b.size();
    std::vector<std::size_t> index(frame.size(), m);
    for (std::size_t i = 0; i < m; ++i) index[b[i]] = i;
    std::vector<std::uint64_t> succ(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const WorldSet& nb = frame.neighbours(b[i]);
      for (auto y = nb.find_first(); y != WorldSet::npos; y = nb.find_next(y))
        if (index[y] < m) succ[i] |= std::uint64_t{1} << index[y];
    }
    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const std::size_t root = index[a];
    const std::uint64_t total = std::uint64_t{1} << (vars.size() * m);
    std::vector<std::uint64_t> values(vars.size());
    for (std::uint64_t v = 0; v < total; ++v) {
      for (std::size_t i = 0; i < vars.size(); ++i) values[i] = (v >> (i * m)) & all;
      if ((cf.evaluate_root(succ, values) >> root) & 1) continue;
      Model cm(frame);
      for (std::size_t i = 0; i < vars.size(); ++i) {
        WorldSet s(frame.size());
        for (std::size_t k = 0; k < m; ++k) s[b[k]] = (values[i] >> k) & 1;
        cm.assign(vars[i], std::move(s));
      }
      result.valid = false;
      result.countermodel = std::move(cm);
      result.world = a;
      return result;
    }
  }
  return result;
}

}  // namespace

ValidityResult valid_in_frame(const OneFrame& frame, const Formula& f,
                              std::size_t max_valuation_bits) {
  const std::size_t n = frame.size();
  const auto vars = f.variables();
  const std::size_t bits = vars.size() * n;
  if (bits > max_valuation_bits) {
    if (auto local = valid_locally(frame, f, max_valuation_bits)) return *local;
    throw PreconditionError("valuation space 2^" + std::to_string(bits) + " exceeds the cap 2^" +
                            std::to_string(max_valuation_bits));
  }
  ValidityResult result;
  const std::uint64_t total = std::uint64_t{1} << bits;

  if (n <= 64) {
    CompiledFormula cf(f);
    const auto succ = successor_masks(frame);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> values(vars.size());
    for (std::uint64_t v = 0; v < total; ++v) {
      for (std::size_t i = 0; i < vars.size(); ++i) values[i] = (v >> (i * n)) & all;
      const std::uint64_t t = cf.evaluate_root(succ, values);
      if (t != all) {
        Model m(frame);
        for (std::size_t i = 0; i < vars.size(); ++i) m.assign(vars[i], mask_to_set(values[i], n));
        result.valid = false;
        result.countermodel = std::move(m);
        result.world = static_cast<std::size_t>(std::countr_one(t));
        return result;
      }
    }
    return result;
  }

  // Only reachable without variables (the bit cap keeps n small otherwise).
  Model m(frame);
  WorldSet t = truth_set(m, f);
  if (!t.all()) {
    result.valid = false;
    result.world = (~t).find_first();
    result.countermodel = std::move(m);
  }
  return result;
}

std::string to_string(LogicId id) {
  switch (id) {
    case LogicId::K: return "K";
    case LogicId::L12g: return "12g";
    case LogicId::L8f: return "8f";
  }
  return "?";
}

LogicId parse_logic(const std::string& s) {
  if (s == "K") return LogicId::K;
  if (s == "12g") return LogicId::L12g;
  if (s == "8f") return LogicId::L8f;
  throw PreconditionError("unknown logic '" + s + "' (expected K, 12g or 8f)");
}

std::string to_string(SatStatus s) {
  switch (s) {
    case SatStatus::Sat: return "sat";
    case SatStatus::Unsat: return "unsat";
    case SatStatus::Unknown: return "unknown";
  }
  return "?";
}

std::uint64_t finite_model_bound(const Formula& f, LogicId logic) {
  const auto closure = subformulas(f);
  bool modal = false;
  for (const auto& g : closure) modal = modal || g.is_modal();
  if (!modal) return 1;
  std::size_t exponent = closure.size() + (logic == LogicId::L12g ? 1 : 0);
  if (exponent >= 63) return std::uint64_t{1} << 63;
  return std::uint64_t{1} << exponent;
}

bool frame_in_logic_class(const OneFrame& frame, LogicId logic) {
  if (logic == LogicId::K) return true;
  if (!is_quasi_plane(frame)) return false;
  if (logic == LogicId::L12g) return true;
  const Relation cube = frame.relation().power(3);
  for (std::size_t a = 0; a < frame.size(); ++a)
    if (!cube.test(a, a)) return false;
  return true;
}

SatResult sat_search(const Formula& f, LogicId logic, const SatCaps& caps) {
  SatResult r;
  const CompiledFormula cf(f);
  r.closure_size = cf.closure().size();
  r.exact_bound = finite_model_bound(f, logic);
  const auto& vars = cf.variables();
  const auto start = std::chrono::steady_clock::now();
  const bool symmetric = logic != LogicId::K;
  const std::size_t size_cap = std::min(caps.max_frame_size, kMaxEnumerationSize);

  for (std::size_t n = 1; n <= size_cap; ++n) {
    if (vars.size() * n > caps.max_valuation_bits) {
      r.stop_reason = "valuation cap reached at frame size " + std::to_string(n);
      return r;
    }
    const std::uint64_t total = std::uint64_t{1} << (vars.size() * n);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> values(vars.size());
    for (const auto& g : frames_up_to_iso(n, symmetric)) {
      if (std::chrono::steady_clock::now() - start > caps.time_limit) {
        r.stop_reason = "time limit reached at frame size " + std::to_string(n);
        return r;
      }
      const OneFrame frame = g.to_frame();
      if (!is_connected(frame) || !frame_in_logic_class(frame, logic)) continue;
      if (r.frames_examined >= caps.max_frames) {
        r.stop_reason = "frame cap reached at frame size " + std::to_string(n);
        return r;
      }
      ++r.frames_examined;
      const auto succ = successor_masks(frame);
      for (std::uint64_t v = 0; v < total; ++v) {
        for (std::size_t i = 0; i < vars.size(); ++i) values[i] = (v >> (i * n)) & all;
        const std::uint64_t t = cf.evaluate_root(succ, values);
        if (t != 0) {
          Model m(frame);
          for (std::size_t i = 0; i < vars.size(); ++i) m.assign(vars[i], mask_to_set(values[i], n));
          r.status = SatStatus::Sat;
          r.witness = std::move(m);
          r.witness_world = static_cast<std::size_t>(std::countr_zero(t));
          r.explored_max_size = n - 1;
          r.stop_reason = "witness found";
          return r;
        }
      }
    }
    r.explored_max_size = n;
    if (r.explored_max_size >= r.exact_bound) {
      r.status = SatStatus::Unsat;
      r.stop_reason = "all frames up to the finite-model bound refute the formula";
      return r;
    }
  }
  r.stop_reason = "frame size cap " + std::to_string(size_cap) + " below the bound";
  return r;
}

}  // namespace planelog
