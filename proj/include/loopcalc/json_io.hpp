#ifndef LOOPCALC_JSON_IO_HPP
#define LOOPCALC_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "loopcalc/canonical.hpp"
#include "loopcalc/closed_surface.hpp"
#include "loopcalc/gate_calculus.hpp"
#include "loopcalc/loop.hpp"
#include "loopcalc/star_calculus.hpp"
#include "loopcalc/surface.hpp"

namespace loopcalc::json_io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws InvalidInput with the file name on failure.
Json read_file(const std::string& path);

SurfaceData parse_surface(const Json& j);
/// Canonical serialization (sorted ids, least-rotation boundaries).
Json to_json(const SurfaceData& data);
Json to_json(const StarFilledSurface& s);
Json to_json(const ValidationReport& r);

Position parse_position(const Json& j);
std::string position_string(const Position& p);

/// Loops are arrays of {"star","edge","sign","pos"}; an object {"transits":[...],"anchor":region}
/// is also accepted. "edge" may name a filling-graph edge when `graph` is given.
CombinatorialLoop parse_loop(const Json& j, const StarFilledSurface& s, const FillingGraph* graph = nullptr);
Json to_json(const CombinatorialLoop& loop, const StarFilledSurface& s);
Json to_json(const GeneratorSet& gens);

Json class_json(const HomotopyClass& c, const StarFilledSurface& s);
Json to_json(const FormalSum& f, const StarFilledSurface& s);
Json to_json(const TensorSum& t, const StarFilledSurface& s);
Json to_json(const ClosedSum& f);
Json to_json(const ClosedTensorSum& t);

/// Raw gate configuration: {"gates":[{"id","eps_omega","crossings":[{"owner","eps","slot","link"}]}],
/// "loops":{"a":[letters],"b":[letters]}}. A letter names a gate ("g", outward) or its inverse
/// ("-g"); other names stand for loops away from the core.
struct RawConfiguration {
  GateConfiguration config;
  GateOrientation omega;
};
RawConfiguration parse_gate_configuration(const Json& j);
Json class_json(const HomotopyClass& c, const GateConfiguration& config);
Json to_json(const FormalSum& f, const GateConfiguration& config);
Json to_json(const TensorSum& t, const GateConfiguration& config);

FillingGraphSpec parse_filling_graph(const Json& j);
Json to_json(const FillingGraphSpec& spec);
Triangulation parse_triangulation(const Json& j);

/// {"op", "per_star":[{"star","value"}], "sum", "halved"} with values rendered by `render`.
template <typename V, typename F>
Json aggregate_json(const std::string& op, const Aggregate<V>& agg, F&& render) {
  Json j;
  j["op"] = op;
  j["per_star"] = Json::array();
  for (const auto& [id, v] : agg.per_star) j["per_star"].push_back({{"star", id}, {"value", render(v)}});
  j["sum"] = render(agg.sum);
  j["halved"] = agg.even ? render(agg.halved) : Json(nullptr);
  return j;
}

}  // namespace loopcalc::json_io

#endif  // LOOPCALC_JSON_IO_HPP
