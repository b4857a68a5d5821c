#include "planelog/io.hpp"

#include <fstream>
#include <set>

namespace planelog {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_kind(const json& j, const std::string& kind) {
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw InputError("expected \"kind\": \"" + kind + "\"");
}

std::size_t index_value(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(std::string(what) + " must be a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound) throw InputError(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

OneFrame one_frame_from_json(const json& j) {
  expect_kind(j, "one-frame");
  const json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) throw InputError("\"n\" must be a non-negative integer");
  const auto n = nj.get<std::size_t>();
  if (n > kDefaultMaxFrameSize) throw InputError("frame exceeds the size cap of 4096");
  const json& ej = field(j, "edges");
  if (!ej.is_array()) throw InputError("\"edges\" must be an array of pairs");
  std::vector<Edge> edges;
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair");
    edges.emplace_back(index_value(e[0], n, "vertex"), index_value(e[1], n, "vertex"));
  }
  bool symmetric = false;
  if (auto it = j.find("symmetric"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("\"symmetric\" must be a boolean");
    symmetric = it->get<bool>();
  }
  return OneFrame(n, edges, symmetric);
}

TwoFrame two_frame_from_json(const json& j) {
  expect_kind(j, "two-frame");
  auto points = label_list(field(j, "points"), "\"points\"");
  auto lines = label_list(field(j, "lines"), "\"lines\"");
  const json& ij = field(j, "incidence");
  if (!ij.is_array()) throw InputError("\"incidence\" must be an array of [point, line] pairs");
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto& e : ij) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError("each incidence must be a [point, line] pair of labels");
    inc.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return TwoFrame::from_labels(std::move(points), std::move(lines), inc);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

AnyFrame frame_from_json(const json& j) {
  const json& k = field(j, "kind");
  if (k == "one-frame") return one_frame_from_json(j);
  if (k == "two-frame") return two_frame_from_json(j);
  throw InputError("unknown frame kind " + k.dump());
}

Model model_from_json(const json& j) {
  expect_kind(j, "model");
  OneFrame frame = one_frame_from_json(field(j, "frame"));
  std::map<std::string, WorldSet> val;
  if (auto it = j.find("valuation"); it != j.end()) {
    if (!it->is_object()) throw InputError("\"valuation\" must be an object");
    for (const auto& [var, worlds] : it->items()) {
      if (!worlds.is_array()) throw InputError("valuation of " + var + " must be an array");
      WorldSet s(frame.size());
      for (const auto& w : worlds) s[index_value(w, frame.size(), "world")] = true;
      val.emplace(var, std::move(s));
    }
  }
  return Model(std::move(frame), std::move(val));
}

namespace {

std::size_t carrier_element(const std::string& key, const AnyFrame& f) {
  const std::size_t n = carrier_size(f);
  if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
    const auto v = std::stoull(key);
    if (v >= n) throw InputError("element " + key + " out of range");
    return v;
  }
  if (const auto* t = std::get_if<TwoFrame>(&f)) {
    for (std::size_t i = 0; i < t->num_points(); ++i)
      if (t->point_labels()[i] == key) return i;
    for (std::size_t i = 0; i < t->num_lines(); ++i)
      if (t->line_labels()[i] == key) return t->line_carrier_index(i);
  }
  throw InputError("unknown element \"" + key + "\"");
}

}  // namespace

std::vector<std::size_t> morphism_map_from_json(const json& j, const AnyFrame& source,
                                                const AnyFrame& target) {
  expect_kind(j, "morphism");
  const json& mj = field(j, "map");
  if (!mj.is_object()) throw InputError("\"map\" must be an object");
  const std::size_t n = carrier_size(source);
  std::vector<std::size_t> map(n);
  std::vector<bool> seen(n);
  for (const auto& [k, v] : mj.items()) {
    const auto x = carrier_element(k, source);
    if (seen[x]) throw InputError("element " + k + " mapped twice");
    seen[x] = true;
    if (v.is_string()) map[x] = carrier_element(v.get<std::string>(), target);
    else map[x] = index_value(v, carrier_size(target), "image");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!seen[x]) throw InputError("map is not total: element " + std::to_string(x) + " missing");
  return map;
}

json to_json(const OneFrame& f) {
  const bool sym = f.relation().is_symmetric();
  json edges = json::array();
  for (auto [a, b] : f.edges())
    if (!sym || a <= b) edges.push_back({a, b});
  return {{"kind", "one-frame"}, {"n", f.size()}, {"edges", edges}, {"symmetric", sym}};
}

json to_json(const TwoFrame& f) {
  json inc = json::array();
  for (auto [p, l] : f.incidence()) inc.push_back({f.point_labels()[p], f.line_labels()[l]});
  return {{"kind", "two-frame"}, {"points", f.point_labels()}, {"lines", f.line_labels()}, {"incidence", inc}};
}

json to_json(const AnyFrame& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

json to_json(const WorldSet& s) {
  json out = json::array();
  for (auto i = s.find_first(); i != WorldSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

json to_json(const Model& m) {
  json val = json::object();
  for (const auto& [var, set] : m.valuation()) val[var] = to_json(set);
  return {{"kind", "model"}, {"frame", to_json(m.frame())}, {"valuation", val}};
}

json morphism_to_json(const std::vector<std::size_t>& map) {
  json mj = json::object();
  for (std::size_t x = 0; x < map.size(); ++x) mj[std::to_string(x)] = map[x];
  return {{"kind", "morphism"}, {"map", mj}};
}

json to_json(const CheckResult& r) { return {{"holds", r.holds}, {"tuple", r.tuple}}; }

json to_json(const FrameClassification& c) {
  json sat = json::object();
  for (const auto& [cond, ok] : c.satisfies) sat[to_string(cond)] = ok;
  json out = {{"serial", c.is_serial},
              {"symmetric", c.is_symmetric},
              {"irreflexive", c.is_irreflexive},
              {"connected", c.is_connected},
              {"quasi_plane", c.is_quasi_plane},
              {"conditions", sat},
              {"kind", to_string(c.kind)},
              {"plane", c.is_plane},
              {"nondegenerate", c.is_nondegenerate}};
  out["i2_classes"] = c.i2_classes ? json(*c.i2_classes) : json(nullptr);
  return out;
}

}  // namespace planelog
