#include "ctf/realization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctf/error.hpp"
#include "ctf/roots.hpp"

namespace ctf {

namespace {

constexpr double kPairMatchTol = 1e-9;
constexpr double kSeparationTol = 1e-7;
constexpr double kTrimTol = 1e-10;

std::string describe(std::complex<double> p) {
  std::ostringstream ss;
  ss.precision(9);
  ss << p.real() << (p.imag() < 0 ? " - " : " + ") << std::abs(p.imag()) << "j";
  return ss.str();
}

std::string format_ratio(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

using Poly = Coeffs<double>;

// One first- or second-order factor of the z-domain sum, normalised to a
// monic denominator in z. The numerator has the common factor z removed.
struct ZTerm {
  Poly num;
  Poly den;
};

std::vector<ZTerm> z_terms(const PoleResidueForm& prf, double dt) {
  std::vector<ZTerm> terms;
  for (const auto& t : prf.real_terms) {
    const double e = std::exp(-t.rate * dt);
    terms.push_back({Poly::Constant(1, t.residue), (Poly(2) << -e, 1.0).finished()});
  }
  for (const auto& t : prf.pair_terms) {
    const double e = std::exp(-t.sigma1 * dt);
    const double cs = std::cos(t.sigma2 * dt);
    const double sn = std::sin(t.sigma2 * dt);
    terms.push_back({(Poly(2) << 2.0 * e * (t.im * sn - t.re * cs), 2.0 * t.re).finished(),
                     (Poly(3) << e * e, -2.0 * e * cs, 1.0).finished()});
  }
  return terms;
}

bool same_poles(const PoleResidueForm& a, const PoleResidueForm& b) {
  if (a.real_terms.size() != b.real_terms.size() || a.pair_terms.size() != b.pair_terms.size()) return false;
  for (std::size_t i = 0; i < a.real_terms.size(); ++i)
    if (a.real_terms[i].rate != b.real_terms[i].rate) return false;
  for (std::size_t i = 0; i < a.pair_terms.size(); ++i)
    if (a.pair_terms[i].sigma1 != b.pair_terms[i].sigma1 || a.pair_terms[i].sigma2 != b.pair_terms[i].sigma2)
      return false;
  return true;
}

// Numerator of G^Z(z) * dt * M(z), as a polynomial in z of degree m.
//   G^Z = [K1 dt + (z - 1) W(z) / M(z)] / dt,  W = K2 M + (z - 1) Mbar
// W has a vanishing z^m term (q(0) = 0); it is trimmed before the final
// product so that the numerator still sums to K1 dt M(1).
Poly assemble_numerator(const PoleResidueForm& prf, const std::vector<ZTerm>& terms, const Poly& M, double dt,
                        const char* label) {
  const Eigen::Index m = M.size() - 1;
  const Poly z_minus_1 = (Poly(2) << -1.0, 1.0).finished();

  Poly mbar = Poly::Zero(1);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Poly t = terms[i].num;
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (j != i) t = poly::multiply(t, terms[j].den);
    mbar = poly::add(mbar, t);
  }
  const Poly ramp = prf.k2 * M;
  const Poly tail = poly::multiply(z_minus_1, mbar);
  Poly W = poly::add(ramp, tail);
  W.conservativeResize(std::max<Eigen::Index>(W.size(), m + 1));
  if (W.size() > m + 1) W.tail(W.size() - m - 1).setZero();

  // Measured against the addends before they cancel: the assembled
  // coefficients can be many orders smaller than K2 and the residues.
  const double scale = std::max({std::abs(prf.k1 * dt), ramp.cwiseAbs().maxCoeff(), tail.cwiseAbs().maxCoeff()});
  if (std::abs(W[m]) > kTrimTol * scale)
    throw AssemblyError(std::string("realization: z-transfer function ") + label +
                        " keeps a super-order term of relative size " + format_ratio(std::abs(W[m]) / scale));

  Poly num = prf.k1 * dt * M;
  if (m > 0) num = poly::add(num, poly::multiply(z_minus_1, Poly(W.head(m))));
  num.conservativeResize(m + 1);
  return num;
}

}  // namespace

std::vector<std::complex<double>> PoleSet::all() const {
  std::vector<std::complex<double>> out;
  for (double p : real) out.emplace_back(p, 0.0);
  for (auto p : pairs) {
    out.push_back(p);
    out.push_back(std::conj(p));
  }
  return out;
}

PoleSet find_poles(const RealSeries& denom) {
  const Eigen::VectorXcd roots = polynomial_roots(denom.coeffs());
  PoleSet poles;
  std::vector<bool> used(roots.size(), false);
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const auto p = roots[i];
    if (p.real() >= 0.0)
      throw InstabilityError("realization: unstable pole " + describe(p) + " (non-negative real part)");
    if (p.imag() == 0.0) {
      poles.real.push_back(p.real());
      used[i] = true;
    }
  }
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].imag() > 0.0) continue;
    const auto p = roots[i];
    Eigen::Index partner = -1;
    for (Eigen::Index j = 0; j < roots.size(); ++j) {
      if (used[j] || j == i || roots[j].imag() <= 0.0) continue;
      if (std::abs(std::conj(p) - roots[j]) <= kPairMatchTol * std::abs(p)) {
        partner = j;
        break;
      }
    }
    if (partner < 0) throw RootFailure("realization: complex root " + describe(p) + " has no conjugate partner");
    used[i] = used[partner] = true;
    poles.pairs.push_back(p);
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw RootFailure("realization: unmatched complex roots");
  std::sort(poles.real.begin(), poles.real.end(), std::greater<>());
  std::sort(poles.pairs.begin(), poles.pairs.end(),
            [](auto a, auto b) { return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag(); });
  return poles;
}

std::complex<double> PoleResidueForm::ramp_transform(std::complex<double> s) const {
  std::complex<double> g = k1 / (s * s) + k2 / s;
  for (const auto& t : real_terms) g += t.residue / (s + t.rate);
  for (const auto& t : pair_terms) {
    const std::complex<double> res(t.re, t.im);
    g += res / (s + std::complex<double>(t.sigma1, t.sigma2)) +
         std::conj(res) / (s + std::complex<double>(t.sigma1, -t.sigma2));
  }
  return g;
}

double PoleResidueForm::ramp_response(double t) const {
  double q = k1 * t + k2;
  for (const auto& r : real_terms) q += r.residue * std::exp(-r.rate * t);
  for (const auto& p : pair_terms)
    q += 2.0 * std::exp(-p.sigma1 * t) * (p.re * std::cos(p.sigma2 * t) + p.im * std::sin(p.sigma2 * t));
  return q;
}

PoleResidueForm partial_fractions(const RealSeries& num, const RealSeries& denom, const PoleSet& poles) {
  if (denom[0] == 0.0) throw std::invalid_argument("partial fractions: zero denominator constant term");
  const RealSeries n = (1.0 / denom[0]) * num;
  const RealSeries d = (1.0 / denom[0]) * denom;

  const auto all = poles.all();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (std::abs(all[i] - all[j]) <= kSeparationTol * std::max(std::abs(all[i]), std::abs(all[j])))
        throw MultiplicityError("realization: repeated pole near " + describe(all[i]) + " is not supported");

  PoleResidueForm prf;
  prf.k1 = n[0];
  prf.k2 = (n.max_order() >= 1 ? n[1] : 0.0) - n[0] * (d.max_order() >= 1 ? d[1] : 0.0);

  const RealSeries dd = derivative(d);
  const auto residue = [&](std::complex<double> p) { return eval(n, p) / (p * p * eval(dd, p)); };
  for (double p : poles.real) prf.real_terms.push_back({-p, residue(p).real()});
  for (auto p : poles.pairs) {
    const auto r = residue(p);
    prf.pair_terms.push_back({-p.real(), -p.imag(), r.real(), r.imag()});
  }
  return prf;
}

double steady_gain(const Eigen::VectorXd& num, const Eigen::VectorXd& d) { return num.sum() / d.sum(); }

CtfSet assemble_ctf(const PoleResidueForm& prf_x, const PoleResidueForm& prf_y, const PoleResidueForm& prf_z,
                    double dt) {
  if (!(dt > 0.0)) throw InputError("time step must be positive");
  if (!same_poles(prf_x, prf_y) || !same_poles(prf_z, prf_y))
    throw AssemblyError("realization: transfer functions do not share a denominator");

  const auto terms = z_terms(prf_y, dt);
  Poly M = Poly::Ones(1);
  for (const auto& t : terms) M = poly::multiply(M, t.den);
  CtfSet ctf;
  ctf.dt = dt;
  // Polynomials in z of degree m become z^-k coefficients by reversal; M is monic.
  ctf.d = M.reverse();
  const auto realize = [&](const PoleResidueForm& prf, const char* label) -> Eigen::VectorXd {
    return Eigen::VectorXd(assemble_numerator(prf, z_terms(prf, dt), M, dt, label).reverse() / dt);
  };
  ctf.a = realize(prf_x, "X");
  ctf.b = realize(prf_y, "Y");
  ctf.c = realize(prf_z, "Z");
  return ctf;
}

Eigen::VectorXcd z_poles(const CtfSet& ctf) {
  // Eigenvalues of the reciprocal companion of d(w), w = z^-1, are the z roots.
  return companion_eigenvalues(ctf.d);
}

Eigen::VectorXd expand_ztf(const Eigen::VectorXd& num, const Eigen::VectorXd& d, int count) {
  if (count < 1) throw InputError("response factor count must be at least 1");
  const Eigen::Index m = d.size() - 1;
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    double acc = k < num.size() ? num[k] : 0.0;
    for (Eigen::Index j = 1; j <= std::min(k, m); ++j) acc -= d[j] * phi[k - j];
    phi[k] = acc / d[0];
  }
  return phi;
}

ResponseFactorSeq response_factors(const CtfSet& ctf, int count) {
  return {ctf.dt, expand_ztf(ctf.a, ctf.d, count), expand_ztf(ctf.b, ctf.d, count),
          expand_ztf(ctf.c, ctf.d, count)};
}

}  // namespace ctf
