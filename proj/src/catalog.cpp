#include "ctf/catalog.hpp"

#include <algorithm>

#include "ctf/error.hpp"

namespace ctf {

namespace {

using Eigen::VectorXd;

MassiveLayer massive(double thickness_mm, double conductivity, double density, double specific_heat) {
  return {thickness_mm / 1000.0, conductivity, density, specific_heat};
}

CatalogEntry brick_cavity() {
  CatalogEntry e{"brick-cavity",
                 "Brick and concrete wall with an air cavity",
                 "Published brick/cavity case study: layer table and CTF coefficients at dt = 3600 s, m = 5",
                 Construction("brick-cavity", {ResistanceLayer{0.060}, massive(105, 0.84, 1700, 800),
                                               ResistanceLayer{0.18}, massive(100, 1.63, 2300, 1000),
                                               ResistanceLayer{0.12}}),
                 1.0 / 0.54635,
                 {},
                 std::nullopt,
                 {}};
  e.ctf.push_back({3600.0, 5,
                   (VectorXd(6) << 9.547772, -18.534215, 10.584111, -1.585679, 0.065340, -0.000761).finished(),
                   (VectorXd(6) << 0.000179, 0.013914, 0.043449, 0.018001, 0.001021, 0.000005).finished(),
                   (VectorXd(6) << 6.953532, -12.228572, 5.995942, -0.665431, 0.021226, -0.000128).finished(),
                   (VectorXd(6) << 1.0, -1.621649, 0.727483, -0.065668, 0.001670, -0.000004).finished(),
                   0.076568, 0.041833});
  return e;
}

CatalogEntry heavyweight() {
  CatalogEntry e{"heavyweight-cn",
                 "Heavyweight masonry wall with insulation and plaster",
                 "Published heavyweight-wall case study: layer table, cross response factors and truncation errors "
                 "at dt = 3600 s, m = 6",
                 Construction("heavyweight-cn", {ResistanceLayer{0.0538}, massive(370, 0.814, 1800, 879),
                                                 massive(100, 0.209, 600, 837), massive(25, 0.163, 400, 2093),
                                                 massive(20, 0.814, 1600, 837), ResistanceLayer{0.1147}}),
                 std::nullopt,
                 {},
                 std::nullopt,
                 {}};
  e.factors = ExpectedFactors{3600.0, 6,
                              (VectorXd(72) << -0.0000263957, 0.0000675681, -0.0000468852, 0.0000004003,
                                  0.0001465373, 0.0006073107, 0.0016778107, 0.0033991044,
                                  0.0055920679, 0.0079971773, 0.0103774754, 0.0125625475,
                                  0.0144529693, 0.0160069035, 0.0172224324, 0.0181219045,
                                  0.0187402231, 0.0191169751, 0.0192915961, 0.0193006888,
                                  0.0191767574, 0.0189478135, 0.0186374833, 0.0182653747,
                                  0.0178475567, 0.0173970623, 0.0169243691, 0.0164378325,
                                  0.0159440641, 0.0154482543, 0.0149544418, 0.0144657381,
                                  0.0139845107, 0.0135125326, 0.0130511042, 0.0126011508,
                                  0.0121633014, 0.0117379521, 0.0113253164, 0.0109254660,
                                  0.0105383625, 0.0101638835, 0.0098018425, 0.0094520055,
                                  0.0091141032, 0.0087878415, 0.0084729095, 0.0081689851,
                                  0.0078757406, 0.0075928461, 0.0073199722, 0.0070567927,
                                  0.0068029861, 0.0065582369, 0.0063222362, 0.0060946828,
                                  0.0058752838, 0.0056637540, 0.0054598172, 0.0052632054,
                                  0.0050736593, 0.0048909278, 0.0047147683, 0.0045449464,
                                  0.0043812354, 0.0042234167, 0.0040712792, 0.0039246191,
                                  0.0037832398, 0.0036469516, 0.0035155716, 0.0033889233).finished()};
  for (auto [terms, value] : {std::pair{72, 0.09125}, {96, 0.03740}, {120, 0.01535}, {144, 0.00632}})
    e.errors.push_back({3600.0, 6, terms, 1e-9, 1e-3, 50, value});
  return e;
}

CatalogEntry wall_group_2() {
  CatalogEntry e{"wall-group-2",
                 "Lightweight insulated wall (wall group 2)",
                 "Published wall-group-2 case study: layer table, CTF coefficients and L2 errors for "
                 "dt = 3600, 1800, 600, 300 and 60 s at m = 5",
                 Construction("wall-group-2", {ResistanceLayer{0.06}, massive(25, 0.692, 1858, 840),
                                               massive(125, 0.043, 91, 840), massive(20, 0.727, 1602, 840),
                                               ResistanceLayer{0.12}}),
                 0.317398,
                 {},
                 std::nullopt,
                 {}};
  e.ctf.push_back({3600.0, 5, VectorXd(),
                   (VectorXd(6) << 9.238270E-04, 3.134899E-02, 5.424187E-02, 1.188745E-02, 2.738740E-04, 2.703650E-07).finished(),
                   (VectorXd(6) << 4.964126E+00, -7.538352E+00, 3.020772E+00, -3.499972E-01, 2.131200E-03, -3.968320E-06).finished(),
                   (VectorXd(6) << 1.000000E+00, -9.408329E-01, 2.774543E-01, -2.585314E-02, 1.226296E-04, -2.377552E-08).finished(),
                   std::nullopt, std::nullopt});
  e.ctf.push_back({1800.0, 5, VectorXd(),
                   (VectorXd(6) << 3.523998E-06, 1.834509E-03, 1.144690E-02, 9.920927E-03, 1.424604E-03, 2.253814E-05).finished(),
                   (VectorXd(6) << 6.104093E+00, -1.284061E+01, 8.882510E+00, -2.266845E+00, 1.476614E-01, -2.155427E-03).finished(),
                   (VectorXd(6) << 1.000000E+00, -1.730097E+00, 1.026203E+00, -2.322156E-01, 1.393706E-02, -1.541931E-04).finished(),
                   std::nullopt, std::nullopt});
  e.ctf.push_back({600.0, 5, VectorXd(),
                   (VectorXd(6) << 1.888654E-05, -9.879201E-05, 2.288415E-04, -3.73172E-05, 4.788933E-04, 1.967507E-04).finished(),
                   (VectorXd(6) << 7.154002E+00, -2.330286E+01, 2.899612E+01, -1.704157E+01, 4.666951E+00, -4.718573E-01).finished(),
                   (VectorXd(6) << 1.000000E+00, -3.099307E+00, 3.687662E+00, -2.082222E+00, 5.499704E-01, -5.362348E-02).finished(),
                   std::nullopt, std::nullopt});
  e.ctf.push_back({300.0, 5, VectorXd(),
                   (VectorXd(6) << -8.604667E-06, 8.803074E-05, -3.226204E-04, 5.804443E-04, -5.418111E-04, 2.512651E-04).finished(),
                   (VectorXd(6) << 7.479679E+00, -2.937890E+01, 4.551999E+01, -3.472326E+01, 1.301909E+01, -1.916569E+00).finished(),
                   (VectorXd(6) << 1.000000E+00, -3.840745E+00, 5.826007E+00, -4.355829E+00, 1.602282E+00, -2.315674E-01).finished(),
                   std::nullopt, std::nullopt});
  // published with a misplaced exponent (-0.746338E-01)
  e.ctf.push_back({60.0, 5, VectorXd(),
                   (VectorXd(6) << -1.550119E-04, 8.435387E-04, -1.841489E-03, 2.016482E-03, -1.107979E-03, 2.444852E-04).finished(),
                   (VectorXd(6) << 7.769836E+00, -3.683664E+01, 6.981223E+01, -6.611053E+01, 3.128182E+01, -5.916703E+00).finished(),
                   (VectorXd(6) << 1.000000E+00, -4.721551E+00, 8.911928E+00, -8.405527E+00, 3.961488E+00, -7.46338E-01).finished(),
                   std::nullopt, std::nullopt});
  for (auto [dt, value] : {std::pair{3600.0, 1.174e-2}, {1800.0, 3.05e-3}, {600.0, 3.45e-4}, {300.0, 8.622e-5},
                           {60.0, 3.457e-6}})
    e.errors.push_back({dt, 5, 0, 1e-8, 1e-3, 100, value});
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{brick_cavity(), heavyweight(), wall_group_2()};
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  const auto& all = catalog();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.id == id; });
  if (it != all.end()) return *it;
  std::string known;
  for (const auto& e : all) known += (known.empty() ? "" : ", ") + e.id;
  throw InputError("unknown catalog id '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace ctf
