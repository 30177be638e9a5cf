#include <doctest.h>

#include <random>

#include "ctf/polynomial.hpp"

using namespace ctf;

namespace {

RealSeries random_series(std::mt19937& rng, int order) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  RealSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = u(rng);
  return s;
}

// Direct double sum over all index pairs with i + j <= order.
RealSeries brute_product(const RealSeries& p, const RealSeries& q, int order) {
  RealSeries r(order);
  for (int i = 0; i <= p.max_order(); ++i)
    for (int j = 0; j <= q.max_order(); ++j)
      if (i + j <= order) r[i + j] += p[i] * q[j];
  return r;
}

void check_close(const RealSeries& a, const RealSeries& b, double tol) {
  REQUIRE(a.max_order() == b.max_order());
  for (int k = 0; k <= a.max_order(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(tol).scale(1.0));
}

}  // namespace

TEST_CASE("truncated products drop terms above the order") {
  const RealSeries p({1.0, 1.0}, 2);
  const RealSeries q({1.0, -1.0}, 2);
  const RealSeries r = mul_truncated(p, q, 2);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 0.0);
  CHECK(r[2] == -1.0);

  const RealSeries sq = mul_truncated(RealSeries({1.0, 1.0}, 1), RealSeries({1.0, 1.0}, 1), 1);
  CHECK(sq[0] == 1.0);
  CHECK(sq[1] == 2.0);
}

TEST_CASE("series product agrees with a brute-force convolution") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int np = 1 + trial % 9, nq = 2 + trial % 7, order = 1 + trial % 12;
    const RealSeries p = random_series(rng, np), q = random_series(rng, nq);
    check_close(mul_truncated(p, q, order), brute_product(p, q, order), 1e-14);
  }
}

TEST_CASE("series product is commutative and associative") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RealSeries p = random_series(rng, 10), q = random_series(rng, 10), r = random_series(rng, 10);
    check_close(p * q, q * p, 1e-14);
    check_close((p * q) * r, p * (q * r), 1e-12);
    check_close(p * (q + r), p * q + p * r, 1e-12);
  }
}

TEST_CASE("adding series of different orders is rejected") {
  CHECK_THROWS_AS(RealSeries(2) + RealSeries(3), std::invalid_argument);
}

TEST_CASE("evaluation and derivative") {
  const RealSeries p({1.0, -3.0, 2.0}, 2);
  CHECK(eval(p, 1.0) == 0.0);
  CHECK(eval(p, 2.0) == 3.0);
  const auto z = eval(p, std::complex<double>(0.0, 1.0));
  CHECK(z.real() == -1.0);
  CHECK(z.imag() == -3.0);
  const RealSeries d = derivative(p);
  CHECK(d[0] == -3.0);
  CHECK(d[1] == 4.0);
  CHECK(d[2] == 0.0);
  CHECK(p.degree() == 2);
  CHECK(RealSeries(4).degree() == 0);
}

TEST_CASE("untruncated polynomial helpers") {
  const Coeffs<double> a = (Coeffs<double>(2) << -1.0, 1.0).finished();
  const Coeffs<double> b = (Coeffs<double>(2) << 1.0, 1.0).finished();
  const Coeffs<double> ab = poly::multiply(a, b);
  REQUIRE(ab.size() == 3);
  CHECK(ab[0] == -1.0);
  CHECK(ab[1] == 0.0);
  CHECK(ab[2] == 1.0);
  const Coeffs<double> s = poly::add(ab, a);
  CHECK(s.size() == 3);
  CHECK(s[0] == -2.0);
  CHECK(poly::derivative(ab)[1] == 2.0);
}

TEST_CASE("evaluating a product equals the product of evaluations") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int trial = 0; trial < 30; ++trial) {
    const RealSeries p = random_series(rng, 4).truncated(12), q = random_series(rng, 6).truncated(12);
    const std::complex<double> s(u(rng), u(rng));
    const auto lhs = eval_complex(mul_truncated(p, q, 10), s);
    const auto rhs = eval_complex(p, s) * eval_complex(q, s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
  CHECK(eval_complex(RealSeries({1.0, 1.0}, 1), {0.0, 1.0}) == std::complex<double>(1.0, 1.0));
  CHECK(eval_complex(RealSeries({0.0, 0.0, 1.0}, 2), {0.0, 1.0}) == std::complex<double>(-1.0, 0.0));
}

TEST_CASE("add identities") {
  const RealSeries sum = RealSeries({1.0, 1.0}, 1) + RealSeries({1.0, -1.0}, 1);
  CHECK(sum == RealSeries({2.0, 0.0}, 1));
  std::mt19937 rng(1);
  const RealSeries p = random_series(rng, 5);
  CHECK(p + RealSeries(5) == p);
}
