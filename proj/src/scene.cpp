#include "psphere/scene.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "psphere/jones.hpp"

namespace psphere {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

const json& require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw SceneError(where + ": expected an object");
  return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, unused] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SceneError(where + ": unknown field \"" + key + "\"");
  }
}

double require_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw SceneError(where + ": missing field \"" + key + "\"");
  if (!j[key].is_number()) throw SceneError(where + "." + key + ": expected a number");
  return j[key].get<double>();
}

double require_nonnegative(const json& j, const char* key, const std::string& where) {
  const double v = require_number(j, key, where);
  if (v < 0.0) throw SceneError(where + "." + key + ": must be nonnegative");
  return v;
}

ElementSpec parse_element(const json& j, int index, bool degrees) {
  const std::string where = "elements[" + std::to_string(index) + "]";
  require_object(j, where);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw SceneError(where + ": missing string field \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  ElementSpec spec{};
  if (kind == "rotator") {
    reject_unknown_keys(j, {"kind", "theta"}, where);
    spec.kind = ElementKind::Rotator;
    spec.param1 = require_number(j, "theta", where);
    if (degrees) spec.param1 *= kDegToRad;
  } else if (kind == "phase_shifter") {
    reject_unknown_keys(j, {"kind", "phi"}, where);
    spec.kind = ElementKind::PhaseShifter;
    spec.param1 = require_number(j, "phi", where);
    if (degrees) spec.param1 *= kDegToRad;
  } else if (kind == "squeezer") {
    reject_unknown_keys(j, {"kind", "eta"}, where);
    spec.kind = ElementKind::Squeezer;
    spec.param1 = require_number(j, "eta", where);
  } else if (kind == "attenuator") {
    reject_unknown_keys(j, {"kind", "eta1", "eta2"}, where);
    spec.kind = ElementKind::Attenuator;
    spec.param1 = require_number(j, "eta1", where);
    spec.param2 = require_number(j, "eta2", where);
  } else {
    throw SceneError(where + ": unknown element kind \"" + kind + "\"");
  }
  return spec;
}

}  // namespace

CoherencyMatrix ElementPipeline::apply(const CoherencyMatrix& c) const {
  const CoherencyMatrix rotated = conjugate(op, c);
  return CoherencyMatrix(cplx(scalar * scalar) * rotated.matrix());
}

ElementPipeline Scene::pipeline() const {
  ElementPipeline p;
  for (const ElementSpec& e : elements) {
    switch (e.kind) {
      case ElementKind::Rotator:
        p.op = rotator(e.param1) * p.op;
        break;
      case ElementKind::PhaseShifter:
        p.op = phase_shifter(e.param1) * p.op;
        break;
      case ElementKind::Squeezer:
        p.op = squeezer(e.param1) * p.op;
        break;
      case ElementKind::Attenuator: {
        const AttenuationResult a = attenuator(e.param1, e.param2);
        p.scalar *= a.overall_factor;
        p.op = a.relative * p.op;
        break;
      }
    }
  }
  return p;
}

Scene parse_scene_text(const std::string& text, bool degrees) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("scene: ") + e.what());
  }
  require_object(j, "scene");
  reject_unknown_keys(j, {"beam", "elements", "time_grid"}, "scene");

  if (!j.contains("beam")) throw SceneError("scene: missing field \"beam\"");
  const json& beam = require_object(j["beam"], "beam");
  reject_unknown_keys(beam, {"A", "B", "phi", "lambda"}, "beam");

  Scene scene;
  scene.amp_a = require_nonnegative(beam, "A", "beam");
  scene.amp_b = require_nonnegative(beam, "B", "beam");
  scene.phase = require_number(beam, "phi", "beam");
  if (degrees) scene.phase *= kDegToRad;
  scene.lambda_rate = require_nonnegative(beam, "lambda", "beam");

  if (j.contains("elements")) {
    if (!j["elements"].is_array()) throw SceneError("elements: expected an array");
    int index = 0;
    for (const json& e : j["elements"]) scene.elements.push_back(parse_element(e, index++, degrees));
  }

  if (!j.contains("time_grid")) throw SceneError("scene: missing field \"time_grid\"");
  const json& grid = require_object(j["time_grid"], "time_grid");
  reject_unknown_keys(grid, {"start", "end", "steps"}, "time_grid");
  scene.grid.start = require_nonnegative(grid, "start", "time_grid");
  scene.grid.end = require_number(grid, "end", "time_grid");
  if (scene.grid.end < scene.grid.start) {
    throw SceneError("time_grid.end: must not precede time_grid.start");
  }
  if (!grid.contains("steps") || !grid["steps"].is_number_integer()) {
    throw SceneError("time_grid.steps: expected an integer");
  }
  scene.grid.steps = grid["steps"].get<int>();
  if (scene.grid.steps < 1) throw SceneError("time_grid.steps: must be at least 1");

  return scene;
}

Scene parse_scene_file(const std::string& path, bool degrees) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("scene: cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene_text(buf.str(), degrees);
}

}  // namespace psphere
