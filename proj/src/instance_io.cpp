#include "cranesite/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cranesite {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw InstanceError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const json& value, const std::string& name) {
  if (!value.is_number())
    throw InstanceError("field '" + name + "' must be a number");
  return value.get<double>();
}

const json& array(const json& value, const std::string& name) {
  if (!value.is_array())
    throw InstanceError("field '" + name + "' must be an array");
  return value;
}

std::vector<Point3> points(const json& obj, const char* name) {
  const json& arr = array(field(obj, name), name);
  std::vector<Point3> out;
  out.reserve(arr.size());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string where = std::string(name) + "[" + std::to_string(n) + "]";
    const json& p = array(arr[n], where);
    if (p.size() != 3)
      throw InstanceError("field '" + where + "' must have 3 coordinates");
    out.push_back({number(p[0], where), number(p[1], where), number(p[2], where)});
  }
  return out;
}

std::vector<double> numbers(const json& value, const std::string& name) {
  const json& arr = array(value, name);
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) out.push_back(number(v, name));
  return out;
}

json points_json(const std::vector<Point3>& pts) {
  json arr = json::array();
  for (const Point3& p : pts) arr.push_back({p.x, p.y, p.z});
  return arr;
}

}  // namespace

SiteInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance document must be an object");
  if (const auto it = doc.find("format");
      it != doc.end() && *it != std::string(kInstanceFormat))
    throw InstanceError("unsupported format '" + it->dump() + "'");

  SiteInstance inst;
  inst.demand_points = points(doc, "demand_points_m");
  inst.supply_points = points(doc, "supply_points_m");
  inst.crane_positions = points(doc, "crane_positions_m");
  inst.gamma = numbers(field(doc, "gamma"), "gamma");
  for (const json& row : array(field(doc, "demand_quantities_units"),
                               "demand_quantities_units"))
    inst.demand_quantities.push_back(numbers(row, "demand_quantities_units"));

  const json& crane = field(doc, "crane");
  inst.crane.v_hoist = number(field(crane, "v_hoist_m_per_min"), "v_hoist_m_per_min");
  inst.crane.v_radial = number(field(crane, "v_radial_m_per_min"), "v_radial_m_per_min");
  inst.crane.v_slew = number(field(crane, "v_slew_rad_per_min"), "v_slew_rad_per_min");
  inst.crane.alpha = number(field(crane, "alpha"), "alpha");
  inst.crane.beta = number(field(crane, "beta"), "beta");
  inst.crane.cost_rate = number(field(crane, "cost_rate_per_min"), "cost_rate_per_min");

  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw InstanceError(e.what());
  }
  return inst;
}

SiteInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string dump_instance(const SiteInstance& instance) {
  json doc;
  doc["format"] = std::string(kInstanceFormat);
  doc["demand_points_m"] = points_json(instance.demand_points);
  doc["supply_points_m"] = points_json(instance.supply_points);
  doc["crane_positions_m"] = points_json(instance.crane_positions);
  doc["gamma"] = instance.gamma;
  doc["demand_quantities_units"] = instance.demand_quantities;
  doc["crane"] = {{"v_hoist_m_per_min", instance.crane.v_hoist},
                  {"v_radial_m_per_min", instance.crane.v_radial},
                  {"v_slew_rad_per_min", instance.crane.v_slew},
                  {"alpha", instance.crane.alpha},
                  {"beta", instance.crane.beta},
                  {"cost_rate_per_min", instance.crane.cost_rate}};
  return doc.dump(2) + "\n";
}

void save_instance(const SiteInstance& instance,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InstanceError("cannot write instance file " + path.string());
  out << dump_instance(instance);
  if (!out) throw InstanceError("failed writing instance file " + path.string());
}

}  // namespace cranesite
