#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include <random>
#include <string>

#include "ctf/catalog.hpp"
#include "ctf/error.hpp"
#include "ctf/wall.hpp"

using namespace ctf;

namespace {

const char* kBrickCavity = R"({
  "name": "brick-cavity",
  "layers": [
    {"type": "resistance", "r_value": 0.060},
    {"type": "massive", "thickness_mm": 105, "conductivity": 0.84, "density": 1700, "specific_heat": 800},
    {"type": "resistance", "r_value": 0.18},
    {"type": "massive", "thickness_mm": 100, "conductivity": 1.63, "density": 2300, "specific_heat": 1000},
    {"type": "resistance", "r_value": 0.12}
  ]
})";

std::string error_of(std::string_view doc) {
  try {
    parse_construction(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("u_value is the reciprocal of summed resistances") {
  const Construction c = parse_construction(kBrickCavity);
  // Resistances of each layer, read off the layer table by hand.
  const double r = 0.060 + 0.105 / 0.84 + 0.18 + 0.100 / 1.63 + 0.12;
  CHECK(u_value(c) == doctest::Approx(1.0 / r).epsilon(1e-15));
  CHECK(u_value(c) == doctest::Approx(1.8303).epsilon(1e-4));

  CHECK(u_value(Construction("r2", {ResistanceLayer{2.0}})) == 0.5);
}

TEST_CASE("wall-group-2 transmittance matches the published value") {
  CHECK(u_value(catalog_entry("wall-group-2").construction) == doctest::Approx(0.317398).epsilon(1e-6));
}

TEST_CASE("splitting a massive layer leaves u_value unchanged") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const double f = frac(rng);
    const MassiveLayer whole{0.2, 0.9, 1800, 850};
    MassiveLayer a = whole, b = whole;
    a.thickness = f * whole.thickness;
    b.thickness = whole.thickness - a.thickness;
    const Construction one("one", {ResistanceLayer{0.04}, whole, ResistanceLayer{0.13}});
    const Construction two("two", {ResistanceLayer{0.04}, a, b, ResistanceLayer{0.13}});
    CHECK(u_value(two) == doctest::Approx(u_value(one)).epsilon(1e-14));
  }
}

TEST_CASE("parse converts millimetres and keeps layer order") {
  const Construction c = parse_construction(kBrickCavity);
  REQUIRE(c.layers().size() == 5);
  CHECK(c.name() == "brick-cavity");
  const auto& brick = std::get<MassiveLayer>(c.layers()[1]);
  CHECK(brick.thickness == 0.105);
  CHECK(brick.conductivity == 0.84);
  CHECK(std::get<ResistanceLayer>(c.layers()[0]).resistance == 0.060);
  CHECK(std::get<ResistanceLayer>(c.layers()[4]).resistance == 0.12);
  CHECK(warnings(c).empty());
  CHECK(c == catalog_entry("brick-cavity").construction);
}

TEST_CASE("parse errors name the offending field") {
  CHECK(error_of(R"({"name": "x", "layers": []})").find("layers") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "layers": [{"type": "massive", "thickness_mm": 100, "conductivity": 0,
                     "density": 1, "specific_heat": 1}]})")
            .find("layers[0].conductivity") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "layers": [{"type": "film", "r_value": 1}]})").find("layers[0].type") !=
        std::string::npos);
  CHECK(error_of(R"({"name": "x", "layers": [{"type": "resistance"}]})").find("layers[0].r_value") !=
        std::string::npos);
  CHECK(error_of(R"({"name": "x", "layers": [{"type": "resistance", "r_value": -1}]})").find("r_value") !=
        std::string::npos);
  CHECK(error_of(R"({"layers": []})").find("name") != std::string::npos);
  CHECK(error_of("not json").find("JSON") != std::string::npos);
}

TEST_CASE("parse errors map to the input exit class") {
  CHECK_THROWS_AS(parse_construction(R"({"name": "x", "layers": []})"), InputError);
  CHECK_THROWS_AS(Construction("x", {}), InputError);
  CHECK_THROWS_AS(Construction("x", {MassiveLayer{0.1, 1.0, -1.0, 1.0}}), InvalidConstruction);
}

TEST_CASE("zero-thickness massive layers are accepted with a warning") {
  const Construction c("z", {ResistanceLayer{0.1}, MassiveLayer{0.0, 1.0, 1000, 1000}, ResistanceLayer{0.1}});
  CHECK(c.is_purely_resistive());
  CHECK(warnings(c).size() == 2);
  CHECK(u_value(c) == doctest::Approx(5.0));
}

TEST_CASE("serialize then parse is the identity") {
  for (const auto& e : catalog()) {
    const Construction back = parse_construction(serialize_construction(e.construction));
    CHECK(back == e.construction);
  }
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.001, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    nlohmann::json doc{{"name", "rand"}};
    doc["layers"] = {{{"type", "resistance"}, {"r_value", u(rng)}},
                     {{"type", "massive"}, {"thickness_mm", 1000 * u(rng)}, {"conductivity", 4 * u(rng)},
                      {"density", 100 + 4000 * u(rng)}, {"specific_heat", 500 + 2000 * u(rng)}},
                     {{"type", "resistance"}, {"r_value", u(rng)}}};
    const Construction c = parse_construction(doc.dump());
    CHECK(parse_construction(serialize_construction(c, -1)) == c);

    // A thickness that did not come from millimetres still lands within one ulp.
    const double metres = u(rng);
    const Construction raw("raw", {MassiveLayer{metres, 1.0, 1000, 1000}});
    const double back = std::get<MassiveLayer>(parse_construction(serialize_construction(raw)).layers()[0]).thickness;
    CHECK(std::abs(back - metres) <= std::abs(std::nextafter(metres, 1.0) - metres));
  }
}
