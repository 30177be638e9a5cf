#pragma once

// Truncated power series in s and plain (untruncated) polynomial helpers.
// Coefficients are stored densely in ascending powers: c[k] multiplies x^k.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Core>

namespace ctf {

template <typename Scalar>
using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Power series c_0 + c_1 s + ... + c_N s^N with a fixed truncation order N.
/// Arithmetic never produces terms beyond N.
template <typename Scalar>
class Series {
 public:
  using scalar_type = Scalar;

  explicit Series(int max_order = 0) : c_(Coeffs<Scalar>::Zero(max_order + 1)) {
    if (max_order < 0) throw std::invalid_argument("series: negative order");
  }

  /// Copies `coeffs`, padding with zeros or dropping terms above `max_order`.
  Series(const Coeffs<Scalar>& coeffs, int max_order) : Series(max_order) {
    const Eigen::Index n = std::min<Eigen::Index>(coeffs.size(), c_.size());
    c_.head(n) = coeffs.head(n);
  }

  Series(std::initializer_list<Scalar> coeffs, int max_order) : Series(max_order) {
    Eigen::Index k = 0;
    for (Scalar v : coeffs) {
      if (k > max_order) break;
      c_[k++] = v;
    }
  }

  static Series constant(Scalar value, int max_order) {
    Series s(max_order);
    s.c_[0] = value;
    return s;
  }

  int max_order() const { return static_cast<int>(c_.size()) - 1; }

  Scalar operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }

  const Coeffs<Scalar>& coeffs() const { return c_; }

  /// Highest power with a nonzero coefficient (0 for the zero series).
  int degree() const {
    for (int k = max_order(); k > 0; --k)
      if (c_[k] != Scalar(0)) return k;
    return 0;
  }

  bool all_finite() const {
    for (Eigen::Index k = 0; k < c_.size(); ++k)
      if (!std::isfinite(std::abs(c_[k]))) return false;
    return true;
  }

  /// Same coefficients re-truncated (or zero-padded) to `order`.
  Series truncated(int order) const { return Series(c_, order); }

  bool operator==(const Series& other) const {
    return c_.size() == other.c_.size() && c_ == other.c_;
  }

 private:
  Coeffs<Scalar> c_;
};

using RealSeries = Series<double>;

template <typename Scalar>
Series<Scalar> add(const Series<Scalar>& p, const Series<Scalar>& q) {
  if (p.max_order() != q.max_order())
    throw std::invalid_argument("series add: truncation orders differ");
  return Series<Scalar>(p.coeffs() + q.coeffs(), p.max_order());
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& p, const Series<Scalar>& q) {
  return add(p, q);
}

template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& p, const Series<Scalar>& q) {
  if (p.max_order() != q.max_order())
    throw std::invalid_argument("series subtract: truncation orders differ");
  return Series<Scalar>(p.coeffs() - q.coeffs(), p.max_order());
}

template <typename Scalar>
Series<Scalar> operator*(Scalar a, const Series<Scalar>& p) {
  return Series<Scalar>(a * p.coeffs(), p.max_order());
}

/// Cauchy product with every term above `order` discarded.
template <typename Scalar>
Series<Scalar> mul_truncated(const Series<Scalar>& p, const Series<Scalar>& q, int order) {
  Series<Scalar> r(order);
  const int np = std::min(p.max_order(), order);
  for (int i = 0; i <= np; ++i) {
    const Scalar pi = p[i];
    if (pi == Scalar(0)) continue;
    const int nq = std::min(q.max_order(), order - i);
    for (int j = 0; j <= nq; ++j) r[i + j] += pi * q[j];
  }
  return r;
}

/// Truncated product at the smaller of the two orders.
template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& p, const Series<Scalar>& q) {
  return mul_truncated(p, q, std::min(p.max_order(), q.max_order()));
}

/// Horner evaluation; `x` may be real or complex.
template <typename Derived, typename X>
auto horner(const Eigen::MatrixBase<Derived>& c, X x) {
  using R = decltype(typename Derived::Scalar{} * x);
  R acc(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

template <typename Scalar, typename X>
auto eval(const Series<Scalar>& p, X x) {
  return horner(p.coeffs(), x);
}

inline std::complex<double> eval_complex(const RealSeries& p, std::complex<double> s) {
  return eval(p, s);
}

/// Formal derivative, keeping the same truncation order.
template <typename Scalar>
Series<Scalar> derivative(const Series<Scalar>& p) {
  Series<Scalar> d(p.max_order());
  for (int k = 1; k <= p.max_order(); ++k) d[k - 1] = Scalar(k) * p[k];
  return d;
}

/// log10(max|c_k| / min nonzero |c_k|); a conditioning diagnostic only.
inline double dynamic_range(const RealSeries& p) {
  double hi = 0.0, lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= p.max_order(); ++k) {
    const double a = std::abs(p[k]);
    if (a == 0.0) continue;
    hi = std::max(hi, a);
    lo = std::min(lo, a);
  }
  return hi > 0.0 ? std::log10(hi / lo) : 0.0;
}

// Untruncated polynomials, used for the z-domain assembly.
namespace poly {

template <typename Scalar>
Coeffs<Scalar> multiply(const Coeffs<Scalar>& a, const Coeffs<Scalar>& b) {
  Coeffs<Scalar> r = Coeffs<Scalar>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <typename Scalar>
Coeffs<Scalar> add(const Coeffs<Scalar>& a, const Coeffs<Scalar>& b) {
  Coeffs<Scalar> r = Coeffs<Scalar>::Zero(std::max(a.size(), b.size()));
  r.head(a.size()) += a;
  r.head(b.size()) += b;
  return r;
}

template <typename Scalar>
Coeffs<Scalar> derivative(const Coeffs<Scalar>& a) {
  if (a.size() <= 1) return Coeffs<Scalar>::Zero(1);
  Coeffs<Scalar> d(a.size() - 1);
  for (Eigen::Index k = 1; k < a.size(); ++k) d[k - 1] = Scalar(k) * a[k];
  return d;
}

template <typename Scalar>
Coeffs<Scalar> reversed(const Coeffs<Scalar>& a) {
  return a.reverse();
}

}  // namespace poly

}  // namespace ctf
