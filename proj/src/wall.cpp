#include "ctf/wall.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctf/error.hpp"

namespace ctf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_layer(const Layer& layer, std::size_t index) {
  const auto where = [index](const char* field) {
    return "layers[" + std::to_string(index) + "]." + field;
  };
  std::visit(overloaded{
                 [&](const MassiveLayer& m) {
                   if (!std::isfinite(m.thickness) || m.thickness < 0.0)
                     throw InvalidConstruction(where("thickness") + ": must be non-negative");
                   if (!positive(m.conductivity))
                     throw InvalidConstruction(where("conductivity") + ": must be positive");
                   if (!positive(m.density))
                     throw InvalidConstruction(where("density") + ": must be positive");
                   if (!positive(m.specific_heat))
                     throw InvalidConstruction(where("specific_heat") + ": must be positive");
                   if (!positive(m.diffusivity()))
                     throw InvalidConstruction(where("conductivity") + ": diffusivity not finite");
                 },
                 [&](const ResistanceLayer& r) {
                   if (!positive(r.resistance))
                     throw InvalidConstruction(where("r_value") + ": must be positive");
                 },
             },
             layer);
}

// Millimetre value that maps back to exactly `metres` under v / 1000.
double to_millimetres(double metres) {
  double mm = metres * 1000.0;
  if (mm / 1000.0 == metres) return mm;
  for (double candidate : {std::nextafter(mm, 0.0), std::nextafter(mm, 1e300)})
    if (candidate / 1000.0 == metres) return candidate;
  return mm;
}

double require_number(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key + ": missing");
  if (!it->is_number()) throw ParseError(where + "." + key + ": expected a number");
  return it->get<double>();
}

}  // namespace

double resistance(const Layer& layer) {
  return std::visit(overloaded{
                        [](const MassiveLayer& m) { return m.resistance(); },
                        [](const ResistanceLayer& r) { return r.resistance; },
                    },
                    layer);
}

Construction::Construction(std::string name, std::vector<Layer> layers)
    : name_(std::move(name)), layers_(std::move(layers)) {
  if (layers_.empty()) throw InvalidConstruction("construction has no layers");
  for (std::size_t i = 0; i < layers_.size(); ++i) check_layer(layers_[i], i);
  if (!positive(total_resistance()))
    throw InvalidConstruction("total resistance must be positive");
}

double Construction::total_resistance() const {
  double r = 0.0;
  for (const auto& layer : layers_) r += resistance(layer);
  return r;
}

bool Construction::is_purely_resistive() const {
  for (const auto& layer : layers_)
    if (const auto* m = std::get_if<MassiveLayer>(&layer); m && m->thickness > 0.0) return false;
  return true;
}

double u_value(const Construction& c) { return 1.0 / c.total_resistance(); }

std::vector<std::string> warnings(const Construction& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.layers().size(); ++i) {
    const auto* m = std::get_if<MassiveLayer>(&c.layers()[i]);
    if (m && m->thickness == 0.0)
      out.push_back("layers[" + std::to_string(i) + "]: zero-thickness massive layer ignored");
  }
  if (c.is_purely_resistive())
    out.push_back("construction is purely resistive; transfer functions are constant");
  return out;
}

Construction parse_construction(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("wall file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("wall file: top level must be an object");

  auto name_it = doc.find("name");
  if (name_it == doc.end() || !name_it->is_string()) throw ParseError("name: expected a string");
  auto layers_it = doc.find("layers");
  if (layers_it == doc.end() || !layers_it->is_array()) throw ParseError("layers: expected an array");
  if (layers_it->empty()) throw ParseError("layers: at least one layer is required");

  std::vector<Layer> layers;
  for (std::size_t i = 0; i < layers_it->size(); ++i) {
    const auto& item = (*layers_it)[i];
    const std::string where = "layers[" + std::to_string(i) + "]";
    if (!item.is_object()) throw ParseError(where + ": expected an object");
    auto type_it = item.find("type");
    if (type_it == item.end() || !type_it->is_string()) throw ParseError(where + ".type: expected a string");
    const auto type = type_it->get<std::string>();
    if (type == "massive") {
      MassiveLayer m{require_number(item, "thickness_mm", where) / 1000.0,
                     require_number(item, "conductivity", where), require_number(item, "density", where),
                     require_number(item, "specific_heat", where)};
      if (!std::isfinite(m.thickness) || m.thickness < 0.0) throw ParseError(where + ".thickness_mm: must be non-negative");
      if (!positive(m.conductivity)) throw ParseError(where + ".conductivity: must be positive");
      if (!positive(m.density)) throw ParseError(where + ".density: must be positive");
      if (!positive(m.specific_heat)) throw ParseError(where + ".specific_heat: must be positive");
      layers.emplace_back(m);
    } else if (type == "resistance") {
      ResistanceLayer r{require_number(item, "r_value", where)};
      if (!positive(r.resistance)) throw ParseError(where + ".r_value: must be positive");
      layers.emplace_back(r);
    } else {
      throw ParseError(where + ".type: unknown layer type '" + type + "'");
    }
  }
  try {
    return Construction(name_it->get<std::string>(), std::move(layers));
  } catch (const InvalidConstruction& e) {
    throw ParseError(e.what());
  }
}

Construction load_construction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open wall file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_construction(ss.str());
}

std::string serialize_construction(const Construction& c, int indent) {
  nlohmann::ordered_json doc;
  doc["name"] = c.name();
  auto layers = nlohmann::ordered_json::array();
  for (const auto& layer : c.layers()) {
    nlohmann::ordered_json item;
    std::visit(overloaded{
                   [&](const MassiveLayer& m) {
                     item["type"] = "massive";
                     item["thickness_mm"] = to_millimetres(m.thickness);
                     item["conductivity"] = m.conductivity;
                     item["density"] = m.density;
                     item["specific_heat"] = m.specific_heat;
                   },
                   [&](const ResistanceLayer& r) {
                     item["type"] = "resistance";
                     item["r_value"] = r.resistance;
                   },
               },
               layer);
    layers.push_back(std::move(item));
  }
  doc["layers"] = std::move(layers);
  return doc.dump(indent);
}

}  // namespace ctf
