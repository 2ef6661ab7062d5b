#include "msmcts/io.hpp"

#include <fstream>
#include <sstream>

#include "msmcts/error.hpp"

namespace msmcts {

using nlohmann::json;

namespace {

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kParse, "point must be [x, y]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json arrangement_json(const Arrangement& a) {
  json out = json::array();
  for (const Point& p : a) out.push_back(point_json(p));
  return out;
}

Arrangement arrangement_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "arrangement must be an array");
  Arrangement a;
  for (const json& p : j) a.push_back(point_from(p));
  return a;
}

}  // namespace

json scene_to_json(const Scene& scene) {
  return json{
      {"workspace", {{"width", scene.workspace.width}, {"depth", scene.workspace.depth}}},
      {"object_radius", scene.object_radius},
      {"robot_home", point_json(scene.robot_home)},
      {"tunnel_width", scene.tunnel_width},
      {"grid_resolution", scene.grid_resolution},
      {"start", arrangement_json(scene.start)},
      {"goal", arrangement_json(scene.goal)},
  };
}

Scene scene_from_json(const json& j) {
  try {
    Scene s;
    s.workspace = {j.at("workspace").at("width").get<double>(),
                   j.at("workspace").at("depth").get<double>()};
    s.object_radius = j.at("object_radius").get<double>();
    s.robot_home = point_from(j.at("robot_home"));
    s.tunnel_width = j.at("tunnel_width").get<double>();
    s.grid_resolution = j.at("grid_resolution").get<double>();
    s.start = arrangement_from(j.at("start"));
    s.goal = arrangement_from(j.at("goal"));
    s.candidates = candidate_grid(s.workspace, s.object_radius, s.grid_resolution);
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("scene json: ") + e.what());
  }
}

json plan_to_json(const Plan& plan, std::optional<double> wall_time) {
  json actions = json::array();
  for (const Action& a : plan.actions) {
    actions.push_back(
        {{"object", a.object}, {"from", point_json(a.from)}, {"to", point_json(a.to)}});
  }
  json out{{"actions", std::move(actions)},
           {"steps", plan.steps},
           {"total_displacement", plan.total_displacement}};
  if (wall_time) out["wall_time"] = *wall_time;
  return out;
}

Plan plan_from_json(const json& j) {
  try {
    std::vector<Action> actions;
    for (const json& a : j.at("actions")) {
      actions.push_back(
          {a.at("object").get<ObjectId>(), point_from(a.at("from")), point_from(a.at("to"))});
    }
    return Plan::from_actions(std::move(actions));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("plan json: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed for " + path);
}

}  // namespace msmcts
