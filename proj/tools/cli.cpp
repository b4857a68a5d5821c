#include "cli.hpp"

#include "planelog/construction.hpp"
#include "planelog/enumerate.hpp"
#include "planelog/filtration.hpp"
#include "planelog/generators.hpp"
#include "planelog/io.hpp"
#include "planelog/logics.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace planelog::cli {

namespace {

struct Outcome {
  json result;
  int code = kOk;
  std::string summary;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

OneFrame load_one_frame(const std::string& path) {
  AnyFrame f = frame_from_json(read_json_file(path));
  if (auto* one = std::get_if<OneFrame>(&f)) return std::move(*one);
  throw InputError(path + ": expected a one-frame");
}

TwoFrame load_two_frame(const std::string& path) {
  AnyFrame f = frame_from_json(read_json_file(path));
  if (auto* two = std::get_if<TwoFrame>(&f)) return std::move(*two);
  throw InputError(path + ": expected a two-frame");
}

Formula conjunction_of(const std::vector<std::string>& texts) {
  if (texts.empty()) throw InputError("no formula given");
  Formula f = parse(texts.front());
  for (std::size_t i = 1; i < texts.size(); ++i) f = Formula::conjunction(f, parse(texts[i]));
  return f;
}

// ---- classify / check-frame / check-2frame

Outcome cmd_classify(const std::string& path) {
  AnyFrame f = frame_from_json(read_json_file(path));
  Outcome o;
  if (auto* one = std::get_if<OneFrame>(&f)) {
    auto c = classify(*one);
    o.result = to_json(c);
    o.result["frame_kind"] = "one-frame";
    o.summary = "kind " + to_string(c.kind) + ", O4' " + (c.satisfies.at(OCondition::O4Prime) ? "true" : "false");
  } else {
    const auto& two = std::get<TwoFrame>(f);
    json conds = json::object();
    for (auto c : {PCondition::P1, PCondition::P2, PCondition::P3, PCondition::Q1, PCondition::Q2})
      conds[to_string(c)] = check_P(two, c).holds;
    auto c = classify(plus(two));
    o.result = {{"frame_kind", "two-frame"}, {"conditions", conds}, {"one_sorted", to_json(c)}};
    o.summary = "two-frame; one-sorted kind " + to_string(c.kind);
  }
  return o;
}

Outcome cmd_check_frame(const std::string& path, const std::string& props) {
  const OneFrame f = load_one_frame(path);
  auto names = split_list(props);
  if (names.empty()) names = {"O1", "O2", "O3", "O4", "O4'", "O5"};
  Outcome o;
  o.result = json::object();
  bool all = true;
  for (const auto& name : names) {
    CheckResult r;
    if (name == "serial") r = check_serial(f);
    else if (name == "symmetric") r = check_symmetric(f);
    else if (name == "irreflexive") r = check_irreflexive(f);
    else r = check_O(f, parse_o_condition(name));
    o.result[name] = to_json(r);
    all = all && r.holds;
    o.summary += name + (r.holds ? " true  " : " false  ");
  }
  o.code = all ? kOk : kFalse;
  return o;
}

Outcome cmd_check_2frame(const std::string& path, const std::string& props) {
  const TwoFrame f = load_two_frame(path);
  auto names = split_list(props);
  if (names.empty()) names = {"P1", "P2", "P3", "Q1", "Q2"};
  Outcome o;
  o.result = json::object();
  bool all = true;
  for (const auto& name : names) {
    auto r = check_P(f, parse_p_condition(name));
    o.result[name] = to_json(r);
    all = all && r.holds;
    o.summary += name + (r.holds ? " true  " : " false  ");
  }
  o.code = all ? kOk : kFalse;
  return o;
}

// ---- modelcheck / valid / sat

Outcome cmd_modelcheck(const std::string& path, const std::string& text, long world) {
  const Model m = model_from_json(read_json_file(path));
  const Formula f = parse(text);
  const WorldSet truth = truth_set(m, f);
  Outcome o;
  o.result = {{"formula", f.to_string()}, {"truth_set", to_json(truth)}, {"true_in_model", truth.all()}};
  bool ok = truth.all();
  if (world >= 0) {
    if (static_cast<std::size_t>(world) >= m.size()) throw PreconditionError("world out of range");
    ok = truth[world];
    o.result["world"] = world;
    o.result["holds"] = ok;
  }
  o.code = ok ? kOk : kFalse;
  o.summary = f.to_string() + (ok ? " holds" : " fails");
  return o;
}

Outcome cmd_valid(const std::string& path, const std::string& text, std::size_t bits) {
  const OneFrame fr = load_one_frame(path);
  const Formula f = parse(text);
  auto r = valid_in_frame(fr, f, bits);
  Outcome o;
  o.result = {{"formula", f.to_string()}, {"valid", r.valid}, {"max_valuation_bits", bits}};
  if (!r.valid) {
    o.result["countermodel"] = to_json(*r.countermodel);
    o.result["world"] = r.world;
  }
  o.code = r.valid ? kOk : kFalse;
  o.summary = r.valid ? "valid" : "refuted at world " + std::to_string(r.world);
  return o;
}

Outcome cmd_sat(const std::vector<std::string>& texts, const std::string& logic_name, const SatCaps& caps) {
  const Formula f = conjunction_of(texts);
  const LogicId logic = parse_logic(logic_name);
  auto r = sat_search(f, logic, caps);
  Outcome o;
  o.result = {{"formula", f.to_string()},
              {"logic", to_string(logic)},
              {"status", to_string(r.status)},
              {"explored_max_size", r.explored_max_size},
              {"exact_bound", r.exact_bound},
              {"closure_size", r.closure_size},
              {"frames_examined", r.frames_examined},
              {"stop_reason", r.stop_reason},
              {"caps",
               {{"max_size", caps.max_frame_size},
                {"max_frames", caps.max_frames},
                {"time_limit_ms", caps.time_limit.count()},
                {"max_valuation_bits", caps.max_valuation_bits}}}};
  if (r.witness) {
    o.result["witness"] = to_json(*r.witness);
    o.result["witness_world"] = r.witness_world;
  }
  o.code = r.status == SatStatus::Unsat ? kFalse : kOk;
  if (r.witness)
    o.summary = to_string(r.status) + " (witness of size " + std::to_string(r.witness->frame().size()) + ")";
  else
    o.summary = to_string(r.status) + " (explored sizes <= " + std::to_string(r.explored_max_size) + ")";
  return o;
}

// ---- filtrate

Outcome cmd_filtrate(const std::string& path, const std::string& text, const std::string& mode_name) {
  const Model m = model_from_json(read_json_file(path));
  const Formula f = parse(text);
  const auto mode = parse_filtration_mode(mode_name);
  const auto filt = filtrate(m, f, mode);
  const auto check = verify_filtration_theorem(filt);
  Outcome o;
  o.result = to_json(filt.quotient);
  json classes = json::object();
  for (std::size_t a = 0; a < filt.classes.size(); ++a) classes[std::to_string(a)] = filt.classes[a];
  o.result["classes"] = classes;
  o.result["mode"] = to_string(mode);
  o.result["phi_size"] = filt.phi.size();
  o.result["theorem_holds"] = check.holds;
  if (!check.holds)
    o.result["theorem_failure"] = {{"formula", filt.phi[check.formula_index].to_string()}, {"world", check.world}};
  if (mode == FiltrationMode::ProjectiveSplit) o.result["line_class"] = filt.line_class;
  if (is_quasi_plane(m.frame())) {
    auto audit = audit_quotient_logic(filt);
    o.result["quotient_audit"] = {{"ok", audit.ok},
                                  {"parity_holds", audit.parity_holds},
                                  {"failures", audit.failures},
                                  {"classification", to_json(audit.quotient)}};
  }
  o.code = check.holds ? kOk : kFalse;
  o.summary = std::to_string(m.size()) + " worlds -> " + std::to_string(filt.quotient.size()) + " classes";
  return o;
}

// ---- morphisms

MorphismLevel parse_level(const std::string& s) {
  if (s == "hom" || s == "homomorphism") return MorphismLevel::Homomorphism;
  if (s == "bounded") return MorphismLevel::Bounded;
  throw PreconditionError("unknown level '" + s + "' (expected hom or bounded)");
}

Outcome cmd_morphism(const std::string& src, const std::string& tgt, const std::string& map_path,
                     const std::string& level_name) {
  AnyFrame source = frame_from_json(read_json_file(src));
  AnyFrame target = frame_from_json(read_json_file(tgt));
  auto map = morphism_map_from_json(read_json_file(map_path), source, target);
  const auto level = parse_level(level_name);
  Morphism m(std::move(source), std::move(target), std::move(map));
  auto r = check_morphism(m, level);
  Outcome o;
  o.result = {{"level", level == MorphismLevel::Bounded ? "bounded" : "homomorphism"},
              {"holds", r.holds},
              {"surjective", is_surjective(m)}};
  if (!r.holds) o.result["violation"] = {{"condition", r.condition}, {"tuple", r.tuple}};
  o.code = r.holds ? kOk : kFalse;
  o.summary = r.holds ? "morphism holds" : "fails " + r.condition;
  return o;
}

Outcome cmd_to_one_sorted(const std::string& path) {
  const auto f = plus(load_two_frame(path));
  return {to_json(f), kOk, std::to_string(f.size()) + " vertices"};
}

Outcome cmd_split_preimage(const std::string& path) {
  const OneFrame f = load_one_frame(path);
  auto sp = split_preimage(f);
  Outcome o;
  o.result = {{"frame", to_json(sp.frame)},
              {"theta", morphism_to_json(sp.theta.map())},
              {"audit",
               {{"Q1", check_P(sp.frame, PCondition::Q1).holds},
                {"Q2", check_P(sp.frame, PCondition::Q2).holds},
                {"bounded", check_morphism(sp.theta, MorphismLevel::Bounded).holds},
                {"surjective", is_surjective(sp.theta)}}}};
  o.summary = std::to_string(sp.frame.num_points()) + " points, " + std::to_string(sp.frame.num_lines()) + " lines";
  return o;
}

// ---- construction

Outcome cmd_construct(const std::string& path, std::size_t rounds) {
  const OneFrame target = load_one_frame(path);
  auto [net, rep] = saturate(target, rounds);
  json defects = json::array();
  for (const auto& d : rep.snapshot_defects) defects.push_back(to_string(d));
  Outcome o;
  o.result = {{"rounds", rounds},
              {"network", to_json(net.frame())},
              {"theta", net.theta()},
              {"report",
               {{"snapshot_sizes", rep.snapshot_sizes},
                {"snapshot_defects", defects},
                {"repairs", rep.repairs},
                {"already_repaired", rep.already_repaired},
                {"coherent_after_every_step", rep.coherent_after_every_step},
                {"o3_after_every_step", rep.o3_after_every_step},
                {"irreflexive_after_every_step", rep.irreflexive_after_every_step},
                {"seed_full_after_every_step", rep.seed_full_after_every_step},
                {"final_coherent", rep.final_coherent},
                {"final_o3", rep.final_o3},
                {"all_snapshot_defects_repaired", rep.all_snapshot_defects_repaired},
                {"seed_full_subgraph", rep.seed_full_subgraph},
                {"theta_homomorphism", rep.theta_homomorphism},
                {"residual_b1", rep.residual_b1},
                {"residual_o5", rep.residual_o5},
                {"surjective", rep.surjective},
                {"final_size", rep.final_size},
                {"first_failure", rep.first_failure}}}};
  const bool ok = rep.coherent_after_every_step && rep.o3_after_every_step && rep.irreflexive_after_every_step &&
                  rep.seed_full_after_every_step && rep.all_snapshot_defects_repaired;
  o.code = ok ? kOk : kFalse;
  o.summary = std::to_string(rep.final_size) + " vertices after " + std::to_string(rounds) + " rounds, " +
              (ok ? "all audits pass" : "audit failure: " + rep.first_failure);
  return o;
}

// ---- modalities / correspond

Outcome cmd_modalities(const std::string& logic_name, std::size_t max_len, std::size_t size_cap) {
  const LogicId logic = parse_logic(logic_name);
  if (logic == LogicId::K) throw PreconditionError("modality classes are computed for 12g or 8f");
  const auto corpus = quasi_plane_corpus(size_cap, logic == LogicId::L8f);
  const auto rep = modality_classes(max_len, corpus, {size_cap});
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json members = json::array();
    for (const auto& m : c.members)
      members.push_back({{"modality", m.modality.to_string()}, {"confidence", to_string(m.confidence)}});
    classes.push_back({{"representative", c.representative.to_string()}, {"members", members}});
  }
  json seps = json::array();
  for (const auto& s : rep.separators)
    seps.push_back({{"classes", {s.first_class, s.second_class}},
                    {"modalities",
                     {rep.classes[s.first_class].representative.to_string(),
                      rep.classes[s.second_class].representative.to_string()}},
                    {"frame_index", s.frame_index},
                    {"frame", to_json(corpus[s.frame_index])},
                    {"valuation_p", to_json(s.valuation)},
                    {"world", s.world}});
  Outcome o;
  o.result = {{"logic", to_string(logic)},
              {"max_len", max_len},
              {"size_cap", size_cap},
              {"corpus_size", corpus.size()},
              {"frames_used", rep.frames_used},
              {"skipped_frames", rep.skipped_frames},
              {"class_count", rep.classes.size()},
              {"counts_by_length", rep.counts_by_length},
              {"stabilized", rep.stabilized},
              {"classes", classes},
              {"separators", seps}};
  o.summary = std::to_string(rep.classes.size()) + " classes" + (rep.stabilized ? " (stable)" : " (not stable)");
  return o;
}

Outcome cmd_correspond(const SchemeParams& s, std::size_t max_size, bool symmetric) {
  if (max_size > 5) throw PreconditionError("correspondence corpus is limited to 5 vertices");
  std::vector<OneFrame> corpus;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& g : frames_up_to_iso(n, symmetric)) corpus.push_back(g.to_frame());
  const auto rep = correspondence_test(corpus, s);
  json div = json::array();
  for (const auto& d : rep.divergences)
    div.push_back({{"frame", to_json(corpus[d.frame_index])}, {"valid", d.valid}, {"g_prime", d.g_prime}});
  Outcome o;
  o.result = {{"params", {{"m", s.m}, {"n", s.n}, {"p", s.p}, {"q", s.q}}},
              {"instance", scheme_instance(s).to_string()},
              {"max_size", max_size},
              {"symmetric_only", symmetric},
              {"frames", rep.frames},
              {"valid_count", rep.valid_count},
              {"divergences", div}};
  o.code = rep.divergences.empty() ? kOk : kFalse;
  o.summary = std::to_string(rep.frames) + " frames, " + std::to_string(rep.divergences.size()) + " divergences";
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modal logics of elliptic and projective planes"};
  app.require_subcommand(1);

  std::string path, path2, path3, text, props, mode = "least", level = "bounded", logic = "12g";
  std::vector<std::string> texts;
  long world = -1;
  std::size_t bits = kDefaultValuationBits, rounds = 1, max_len = 5, size_cap = 6;
  SatCaps caps;
  long long time_limit_ms = caps.time_limit.count();
  SchemeParams params;
  std::size_t corr_size = 4;
  bool symmetric_only = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a frame");
  classify_cmd->add_option("frame", path, "frame JSON")->required();

  auto* check = app.add_subcommand("check-frame", "Check O-conditions of a one-frame");
  check->add_option("frame", path, "frame JSON")->required();
  check->add_option("--properties", props, "comma list of O1..O5, O4', serial, symmetric, irreflexive");

  auto* check2 = app.add_subcommand("check-2frame", "Check P/Q conditions of a two-frame");
  check2->add_option("frame", path, "frame JSON")->required();
  check2->add_option("--properties", props, "comma list of P1,P2,P3,Q1,Q2");

  auto* mc = app.add_subcommand("modelcheck", "Truth set of a formula in a model");
  mc->add_option("model", path, "model JSON")->required();
  mc->add_option("formula", text)->required();
  mc->add_option("--world", world, "world to test");

  auto* valid = app.add_subcommand("valid", "Frame validity of a formula");
  valid->add_option("frame", path, "frame JSON")->required();
  valid->add_option("formula", text)->required();
  valid->add_option("--max-bits", bits, "valuation bit cap");

  auto* sat = app.add_subcommand("sat", "Bounded finite-model search");
  sat->add_option("formulas", texts, "formulas, read as a conjunction")->required();
  sat->add_option("--logic", logic, "K, 12g or 8f");
  sat->add_option("--max-size", caps.max_frame_size, "largest frame size searched");
  sat->add_option("--max-frames", caps.max_frames, "frame budget");
  sat->add_option("--time-limit-ms", time_limit_ms, "time budget");
  sat->add_option("--max-bits", caps.max_valuation_bits, "valuation bit cap");

  auto* filt = app.add_subcommand("filtrate", "Filtration through the subformulas of a formula");
  filt->add_option("model", path, "model JSON")->required();
  filt->add_option("formula", text)->required();
  filt->add_option("--mode", mode, "least or split");

  auto* morph = app.add_subcommand("morphism", "Check a map between frames");
  morph->add_option("source", path, "source frame JSON")->required();
  morph->add_option("target", path2, "target frame JSON")->required();
  morph->add_option("map", path3, "morphism JSON")->required();
  morph->add_option("--level", level, "hom or bounded");

  auto* tos = app.add_subcommand("to-one-sorted", "One-sorted frame of a two-frame");
  tos->add_option("frame", path, "two-frame JSON")->required();

  auto* split = app.add_subcommand("split-preimage", "Two-sorted preimage of a connected quasi-1-plane");
  split->add_option("frame", path, "one-frame JSON")->required();

  auto* construct = app.add_subcommand("construct-elliptic", "Step-by-step network construction");
  construct->add_option("target", path, "elliptic quasi-1-plane JSON")->required();
  construct->add_option("--rounds", rounds, "number of fair rounds");

  auto* gen = app.add_subcommand("gen", "Generate a fixture frame");
  gen->require_subcommand(1);
  int prime = 2;
  std::size_t k = 1, rsize = 6, budget = kDefaultSampleBudget;
  std::string rclass = "elliptic";
  std::uint64_t seed = 0;
  auto* g_pg2 = gen->add_subcommand("pg2", "projective plane PG(2,p)");
  g_pg2->add_option("p", prime)->required();
  auto* g_pol = gen->add_subcommand("polarity", "polarity graph of PG(2,p)");
  g_pol->add_option("p", prime)->required();
  auto* g_wind = gen->add_subcommand("windmill", "friendship graph with k triangles");
  g_wind->add_option("k", k)->required();
  auto* g_f0 = gen->add_subcommand("f0", "the seed path");
  auto* g_rand = gen->add_subcommand("random", "random connected quasi-1-plane");
  g_rand->add_option("--size", rsize);
  g_rand->add_option("--class", rclass, "elliptic or projective");
  g_rand->add_option("--seed", seed);
  g_rand->add_option("--budget", budget, "sampling attempts");

  auto* mods = app.add_subcommand("modalities", "Classes of proper affirmative modalities");
  mods->add_option("--logic", logic, "12g or 8f");
  mods->add_option("--max-len", max_len);
  mods->add_option("--size-cap", size_cap, "largest corpus frame");

  auto* corr = app.add_subcommand("correspond", "Check validity of a scheme instance against its frame condition");
  corr->add_option("--m", params.m);
  corr->add_option("--n", params.n);
  corr->add_option("--p", params.p);
  corr->add_option("--q", params.q);
  corr->add_option("--max-size", corr_size, "largest corpus frame");
  corr->add_flag("--symmetric", symmetric_only, "symmetric frames only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Outcome o;
    if (classify_cmd->parsed()) o = cmd_classify(path);
    else if (check->parsed()) o = cmd_check_frame(path, props);
    else if (check2->parsed()) o = cmd_check_2frame(path, props);
    else if (mc->parsed()) o = cmd_modelcheck(path, text, world);
    else if (valid->parsed()) o = cmd_valid(path, text, bits);
    else if (sat->parsed()) {
      caps.time_limit = std::chrono::milliseconds(time_limit_ms);
      o = cmd_sat(texts, logic, caps);
    } else if (filt->parsed()) o = cmd_filtrate(path, text, mode);
    else if (morph->parsed()) o = cmd_morphism(path, path2, path3, level);
    else if (tos->parsed()) o = cmd_to_one_sorted(path);
    else if (split->parsed()) o = cmd_split_preimage(path);
    else if (construct->parsed()) o = cmd_construct(path, rounds);
    else if (gen->parsed()) {
      if (g_pg2->parsed()) o.result = to_json(gen_pg2(prime));
      else if (g_pol->parsed()) o.result = to_json(gen_polarity_graph(prime));
      else if (g_wind->parsed()) o.result = to_json(gen_windmill(k));
      else if (g_f0->parsed()) o.result = to_json(gen_f0());
      else if (g_rand->parsed()) {
        auto r = gen_random_quasi(rsize, parse_random_kind(rclass), seed, budget);
        o.result = to_json(r.frame);
        o.result["seed"] = seed;
        o.result["class"] = rclass;
        o.result["attempts"] = r.attempts;
        o.result["budget"] = budget;
      }
      o.summary = "generated";
    } else if (mods->parsed()) o = cmd_modalities(logic, max_len, size_cap);
    else if (corr->parsed()) o = cmd_correspond(params, corr_size, symmetric_only);
    out << o.result.dump(2) << '\n';
    if (!o.summary.empty()) err << o.summary << '\n';
    return o.code;
  } catch (const ParseError& e) {
    err << "formula error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

}  // namespace planelog::cli
