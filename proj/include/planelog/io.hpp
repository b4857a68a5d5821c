#pragma once

#include "planelog/morphism.hpp"
#include "planelog/semantics.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace planelog {

using json = nlohmann::json;

// Malformed or schema-violating input.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);

// {"kind":"one-frame","n":4,"edges":[[0,1]],"symmetric":true}
// {"kind":"two-frame","points":["a"],"lines":["l"],"incidence":[["a","l"]]}
AnyFrame frame_from_json(const json& j);
OneFrame one_frame_from_json(const json& j);
TwoFrame two_frame_from_json(const json& j);

// {"kind":"model","frame":{...},"valuation":{"p":[0,2]}}
Model model_from_json(const json& j);

// {"kind":"morphism","map":{"0":0,...}}. Keys and values are carrier indices
// (points first for 2-frames) or, for 2-frames, element labels.
std::vector<std::size_t> morphism_map_from_json(const json& j, const AnyFrame& source,
                                                const AnyFrame& target);

// Symmetric frames are written with "symmetric": true and edges a <= b.
json to_json(const OneFrame& f);
json to_json(const TwoFrame& f);
json to_json(const AnyFrame& f);
json to_json(const Model& m);
json morphism_to_json(const std::vector<std::size_t>& map);

json to_json(const WorldSet& s);  // ascending indices
json to_json(const CheckResult& r);
json to_json(const FrameClassification& c);

}  // namespace planelog
