#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctf {

/// A homogeneous layer with thermal mass. SI units throughout.
struct MassiveLayer {
  double thickness;      // m
  double conductivity;   // W/(m K)
  double density;        // kg/m^3
  double specific_heat;  // J/(kg K)

  double diffusivity() const { return conductivity / (density * specific_heat); }
  double resistance() const { return thickness / conductivity; }

  bool operator==(const MassiveLayer&) const = default;
};

/// A massless resistance: surface film, air cavity, thin membrane.
struct ResistanceLayer {
  double resistance;  // m^2 K / W

  bool operator==(const ResistanceLayer&) const = default;
};

using Layer = std::variant<MassiveLayer, ResistanceLayer>;

double resistance(const Layer& layer);

/// An ordered layer stack, index 0 is the outside film and the last entry the
/// inside film. Immutable once constructed.
class Construction {
 public:
  /// Throws InvalidConstruction when the stack is empty or a property is not
  /// strictly positive. Massive layers may have zero thickness; they are
  /// treated as absent and reported by warnings().
  Construction(std::string name, std::vector<Layer> layers);

  const std::string& name() const { return name_; }
  const std::vector<Layer>& layers() const { return layers_; }

  double total_resistance() const;

  /// True when no layer carries thermal mass (no transient response).
  bool is_purely_resistive() const;

  bool operator==(const Construction&) const = default;

 private:
  std::string name_;
  std::vector<Layer> layers_;
};

/// Steady-state thermal transmittance, W/(m^2 K).
double u_value(const Construction& c);

/// Non-fatal observations about a construction (zero-thickness layers,
/// purely resistive stacks).
std::vector<std::string> warnings(const Construction& c);

/// Parses the JSON wall document. Thicknesses are given in millimetres.
/// Throws ParseError naming the offending field.
Construction parse_construction(std::string_view document);

Construction load_construction(const std::string& path);

/// Inverse of parse_construction. A parsed Construction parses back identical.
/// Other thicknesses may move by one ulp, since not every metre value is a
/// double millimetre value divided by 1000.
std::string serialize_construction(const Construction& c, int indent = 2);

}  // namespace ctf
