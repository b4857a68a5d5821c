// Acceptance suite: one PASS/FAIL line per criterion. Runtime limits and
// expected counts are fixed below; the process exits non-zero if any
// criterion fails.
#include "cli.hpp"
#include "planelog/construction.hpp"
#include "planelog/enumerate.hpp"
#include "planelog/filtration.hpp"
#include "planelog/generators.hpp"
#include "planelog/io.hpp"
#include "planelog/logics.hpp"
#include "planelog/morphism.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace planelog;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str().empty() ? json() : json::parse(out.str());
}

std::string write_temp(const std::string& name, const json& j) {
  const std::string path = std::string(ACCEPTANCE_TMP_DIR) + "/" + name;
  std::ofstream(path) << j.dump();
  return path;
}

// 1. PG(2,2) through the CLI; its one-sorted frame is a non-degenerate
// projective 1-plane with two I2-classes of size 7.
Verdict geometry_pipeline() {
  Verdict v;
  int code = 0;
  const json pg = run_cli({"gen", "pg2", "2"}, code);
  const std::string pg_path = write_temp("pg2_2.json", pg);
  const json conds = run_cli({"check-2frame", pg_path, "--properties", "P1,P2,P3"}, code);
  if (code != 0) v.fail("P1-P3 not all satisfied: " + conds.dump());
  const json one = run_cli({"to-one-sorted", pg_path}, code);
  const std::string one_path = write_temp("pg2_2_plus.json", one);
  const json cls = run_cli({"classify", one_path}, code);
  if (cls["kind"] != "quasi-projective") v.fail("kind " + cls["kind"].dump());
  if (cls["plane"] != true) v.fail("not a 1-plane");
  if (cls["nondegenerate"] != true) v.fail("O4 fails");
  const auto& classes = cls["i2_classes"];
  if (!classes.is_array() || classes.size() != 2 || classes[0].size() != 7 || classes[1].size() != 7)
    v.fail("I2-classes " + classes.dump());
  if (v.ok) v.detail = "P1-P3 hold; one-sorted frame: 14 vertices, classes 7+7, O1-O4 hold";
  return v;
}

// 2. Soundness of 12g (and 8f on elliptic frames) on generated quasi-1-planes.
Verdict soundness_suite() {
  Verdict v;
  std::size_t frames = 0, elliptic = 0, exhaustive = 0;
  auto audit = [&](const OneFrame& f) {
    ++frames;
    auto r = validates_logic(f, LogicId::L12g);
    if (!r) v.fail("12g axiom " + r.failed_axiom + " fails on " + to_json(f).dump());
    if (is_connected(f) && i2_partition(f).size() == 1) {
      ++elliptic;
      auto t = valid_in_frame(f, axiom("T^3").formula);
      if (!t.valid) v.fail("T^3 fails on elliptic " + to_json(f).dump());
    }
  };
  try {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& g : frames_up_to_iso(n, true)) {
        const OneFrame f = g.to_frame();
        if (is_quasi_plane(f)) {
          audit(f);
          ++exhaustive;
        }
      }
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      for (std::size_t n = 2; n <= 6; ++n)
        for (auto kind : {RandomKind::Elliptic, RandomKind::Projective}) audit(gen_random_quasi(n, kind, seed).frame);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  if (v.ok)
    v.detail = std::to_string(frames) + " quasi-1-planes (" + std::to_string(exhaustive) +
               " exhaustive <= 4, rest sampled <= 6), " + std::to_string(elliptic) + " elliptic; zero failures";
  return v;
}

// 3. Scheme validity against (g') on every frame with at most 4 vertices.
Verdict correspondence_suite() {
  Verdict v;
  std::vector<OneFrame> corpus;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : frames_up_to_iso(n, false)) corpus.push_back(g.to_frame());
  std::size_t checks = 0, divergences = 0;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t q = 0; q <= 2; ++q) {
          auto rep = correspondence_test(corpus, {m, n, p, q});
          checks += rep.frames;
          divergences += rep.divergences.size();
          if (!rep.divergences.empty())
            v.fail("divergence at " + to_string(rep.params) + " on " +
                   to_json(corpus[rep.divergences.front().frame_index]).dump());
        }
  if (v.ok)
    v.detail = std::to_string(corpus.size()) + " frames x 81 parameter tuples = " + std::to_string(checks) +
               " checks, " + std::to_string(divergences) + " divergences";
  return v;
}

// 4. ~([][][]p -> p) is 12g-satisfiable on a tiny quasi-1-plane.
Verdict t3_separation() {
  Verdict v;
  int code = 0;
  const json r = run_cli({"sat", "~([][][]p->p)", "--logic", "12g"}, code);
  if (r["status"] != "sat") return {false, "status " + r["status"].dump()};
  const Model w = model_from_json(r["witness"]);
  if (w.size() > 2) v.fail("witness has " + std::to_string(w.size()) + " worlds");
  if (!satisfies(w, r["witness_world"].get<std::size_t>(), parse("~([][][]p->p)"))) v.fail("witness does not satisfy");
  if (!validates_logic(w.frame(), LogicId::L12g)) v.fail("witness frame does not validate 12g");
  if (v.ok) v.detail = "sat on " + std::to_string(w.size()) + " worlds " + r["witness"]["frame"]["edges"].dump() +
                       ", frame validates 12g";
  return v;
}

// 5. Filtration Theorem on random instances, least and split modes.
Verdict filtration_theorem() {
  Verdict v;
  std::mt19937_64 rng(2024);
  const std::vector<std::string> vars{"p", "q"};
  auto random_formula = [&](auto&& self, std::size_t depth) -> Formula {
    const int k = depth == 0 ? 0 : static_cast<int>(rng() % 7);
    switch (k) {
      case 0: return Formula::var(vars[rng() % 2]);
      case 1: return Formula::negation(self(self, depth - 1));
      case 2: return Formula::conjunction(self(self, depth - 1), self(self, depth - 1));
      case 3: return Formula::implication(self(self, depth - 1), self(self, depth - 1));
      case 4: return Formula::box(self(self, depth - 1));
      case 5: return Formula::dia(self(self, depth - 1));
      default: return Formula::disjunction(self(self, depth - 1), self(self, depth - 1));
    }
  };
  // Formula with modal depth <= 3.
  auto formula = [&] {
    for (;;) {
      Formula f = random_formula(random_formula, 4);
      if (f.modal_depth() <= 3) return f;
    }
  };
  auto valuation = [&](const OneFrame& fr) {
    std::map<std::string, WorldSet> val;
    for (const auto& x : vars) {
      WorldSet s(fr.size());
      for (std::size_t w = 0; w < fr.size(); ++w) s[w] = rng() & 1;
      val.emplace(x, s);
    }
    return Model(fr, val);
  };
  std::size_t least_max = 0, split_max = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    const Model m = valuation(OneFrame(n, edges));
    const Formula f = formula();
    const auto filt = filtrate(m, f, FiltrationMode::Least);
    if (!verify_filtration_theorem(filt)) v.fail("least: theorem fails for " + f.to_string());
    if (filt.quotient.size() > (std::size_t{1} << filt.phi.size())) v.fail("least: quotient too large");
    least_max = std::max(least_max, filt.quotient.size());
  }
  for (int i = 0; i < 200; ++i) {
    const OneFrame fr = gen_random_quasi(2 + rng() % 7, RandomKind::Projective, rng()).frame;
    const Model m = valuation(fr);
    const Formula f = formula();
    const auto filt = filtrate(m, f, FiltrationMode::ProjectiveSplit);
    if (!verify_filtration_theorem(filt)) v.fail("split: theorem fails for " + f.to_string());
    if (filt.quotient.size() > (std::size_t{1} << (filt.phi.size() + 1))) v.fail("split: quotient too large");
    const auto audit = audit_quotient_logic(filt);
    if (!audit.ok || audit.quotient.kind != QuasiKind::QuasiProjective)
      v.fail("split: quotient is " + to_string(audit.quotient.kind));
    split_max = std::max(split_max, filt.quotient.size());
  }
  if (v.ok)
    v.detail = "200 least + 200 split instances, zero failures (largest quotients " + std::to_string(least_max) +
               " and " + std::to_string(split_max) + ")";
  return v;
}

// 6. Step-by-step construction over three elliptic targets.
Verdict construction_suite() {
  Verdict v;
  const std::vector<std::pair<std::string, OneFrame>> targets{
      {"loop", OneFrame(1, {{0, 0}})},
      {"K3", OneFrame(3, {{0, 1}, {1, 2}, {0, 2}}, true)},
      {"polarity PG(2,2)", gen_polarity_graph(2)}};
  std::string sizes;
  for (const auto& [name, target] : targets) {
    auto [net, rep] = saturate(target, 2);
    if (!rep.coherent_after_every_step || !rep.o3_after_every_step || !rep.irreflexive_after_every_step ||
        !rep.seed_full_after_every_step)
      v.fail(name + ": " + rep.first_failure);
    if (!rep.all_snapshot_defects_repaired) v.fail(name + ": snapshot defect left open");
    if (!rep.final_coherent || !rep.final_o3 || !rep.seed_full_subgraph) v.fail(name + ": final audit");
    sizes += (sizes.empty() ? "" : ", ") + name + " " + std::to_string(rep.final_size) + " vertices/" +
             std::to_string(rep.repairs) + " repairs";
  }
  if (v.ok) v.detail = sizes;
  return v;
}

// 7. Two-sorted preimages of generated connected quasi-1-planes.
Verdict preimage_audit() {
  Verdict v;
  std::size_t kinds[2] = {0, 0};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto kind = i % 2 ? RandomKind::Elliptic : RandomKind::Projective;
    const OneFrame f = gen_random_quasi(2 + i % 5, kind, 1000 + i).frame;
    ++kinds[i % 2];
    try {
      const auto sp = split_preimage(f);
      if (!check_P(sp.frame, PCondition::Q1) || !check_P(sp.frame, PCondition::Q2)) v.fail("Q1/Q2 fail");
      if (!check_morphism(sp.theta, MorphismLevel::Bounded) || !is_surjective(sp.theta))
        v.fail("theta not a surjective bounded morphism");
      const auto lifted = lift_2to1(sp.theta);
      if (!check_morphism(lifted, MorphismLevel::Bounded)) v.fail("lifted map not bounded");
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
  }
  if (v.ok)
    v.detail = "50 frames (" + std::to_string(kinds[0]) + " projective, " + std::to_string(kinds[1]) +
               " elliptic), zero failures";
  return v;
}

// 8. Windmills and polarity graphs.
Verdict friendship() {
  Verdict v;
  for (std::size_t k = 1; k <= 5; ++k) {
    const OneFrame w = gen_windmill(k);
    if (!check_O(w, OCondition::O5) || !check_O(w, OCondition::O3)) v.fail("windmill " + std::to_string(k) + ": O5/O3");
    if (check_O(w, OCondition::O4Prime)) v.fail("windmill " + std::to_string(k) + " satisfies O4'");
  }
  std::string loops;
  for (int p : {2, 3, 5}) {
    const OneFrame g = gen_polarity_graph(p);
    std::size_t n = 0;
    for (std::size_t a = 0; a < g.size(); ++a) n += g.related(a, a);
    if (!check_O(g, OCondition::O5) || !check_O(g, OCondition::O3)) v.fail("polarity " + std::to_string(p) + ": O5/O3");
    if (n != static_cast<std::size_t>(p) + 1) v.fail("polarity " + std::to_string(p) + ": " + std::to_string(n) + " loops");
    loops += (loops.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " + std::to_string(n);
  }
  if (v.ok) v.detail = "windmills k=1..5 pass O5, O3 and fail O4'; absolute points " + loops;
  return v;
}

// 9. Modality class counts against 12 (quasi-1-planes) and 8 (elliptic).
Verdict modality_counts(std::ostream& evidence) {
  Verdict v;
  std::string detail;
  for (auto [logic, expected] : {std::pair{LogicId::L12g, std::size_t{12}}, std::pair{LogicId::L8f, std::size_t{8}}}) {
    int code = 0;
    const json r = run_cli({"modalities", "--logic", to_string(logic), "--max-len", "5", "--size-cap", "6"}, code);
    evidence << r.dump(1) << '\n';
    const auto counts = r["counts_by_length"].get<std::vector<std::size_t>>();
    const std::size_t got = r["class_count"];
    std::string reps;
    for (const auto& c : r["classes"]) reps += (reps.empty() ? "" : " ") + c["representative"].get<std::string>();
    detail += (detail.empty() ? "" : "; ") + to_string(logic) + ": " + std::to_string(got) + " classes (expected " +
              std::to_string(expected) + "), counts by length " + json(counts).dump() + ", corpus " +
              r["corpus_size"].dump() + " frames, representatives " + reps;
    if (r["stabilized"] != true) v.fail(to_string(logic) + ": count did not stabilise from length 4 to 5");
    if (got != expected) v.fail(to_string(logic) + ": " + std::to_string(got) + " classes, expected " + std::to_string(expected));
  }
  v.detail = v.ok ? detail : v.detail + " | " + detail;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Verdict()> body;
  };
  std::ofstream evidence(std::string(ACCEPTANCE_TMP_DIR) + "/modality_evidence.json");
  const std::vector<Criterion> criteria{
      {1, "geometry pipeline", 1.0, geometry_pipeline},
      {2, "soundness suite", 60.0, soundness_suite},
      {3, "correspondence suite", 120.0, correspondence_suite},
      {4, "T3 separation", 1.0, t3_separation},
      {5, "filtration theorem", 60.0, filtration_theorem},
      {6, "construction suite", 30.0, construction_suite},
      {7, "two-sorted preimage audit", 30.0, preimage_audit},
      {8, "friendship/windmill", 10.0, friendship},
      {9, "modality counts", 600.0, [&] { return modality_counts(evidence); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_s) v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    std::ostringstream line;
    line.precision(3);
    line << "criterion " << c.id << " [" << (v.ok ? "PASS" : "FAIL") << "] " << c.name << ": " << v.detail << " ("
         << std::fixed << secs << " s, limit " << c.limit_s << " s)";
    std::cout << line.str() << std::endl;
    failures += !v.ok;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
