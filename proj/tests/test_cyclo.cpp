#include "doctest.h"

#include <complex>
#include <random>

#include "nichols/cyclo.hpp"
#include "nichols/linalg.hpp"

using namespace nichols;

namespace {

// Independent float evaluation: sum_k c_k exp(2 pi i k / N).
std::complex<double> evaluate(const CycScalar& x) {
  const int n = x.conductor();
  const double pi = 3.14159265358979323846;
  std::complex<double> acc = 0;
  const auto& c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += c[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / n);
  return acc;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-12; }

CycScalar random_scalar(std::mt19937& rng) {
  static const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int n = conductors[pick(rng)];
  std::vector<mpq_class> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = coef(rng);
  return CycScalar::from_coefficients(n, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycScalar::root_of_unity(2, 1) == CycScalar(-1));
  CHECK(CycScalar::root_of_unity(4, 2) == CycScalar(-1));
  CHECK(CycScalar::root_of_unity(3, 1) + CycScalar::root_of_unity(3, 2) == CycScalar(-1));
  CHECK(CycScalar::root_of_unity(7, 0).is_one());
  CHECK(CycScalar::root_of_unity(5, 3) == CycScalar::root_of_unity(5, 8));
  CHECK(CycScalar::root_of_unity(5, -2) == CycScalar::root_of_unity(5, 3));
  for (int k = 0; k < 12; ++k)
    for (int l = 0; l < 12; ++l)
      CHECK(CycScalar::root_of_unity(12, k) * CycScalar::root_of_unity(12, l) ==
            CycScalar::root_of_unity(12, k + l));
}

TEST_CASE("field operations") {
  CHECK(CycScalar(-1).inverse() == CycScalar(-1));
  const auto i = CycScalar::root_of_unity(4, 1);
  CHECK(i * i == CycScalar(-1));
  const auto minus_one = CycScalar::root_of_unity(2, 1);
  CHECK(minus_one * i == CycScalar::root_of_unity(4, 3));
  CHECK(close(evaluate(minus_one * i), std::complex<double>(0, -1)));
  CHECK_THROWS_AS(CycScalar(0).inverse(), DivisionByZero);
  CHECK(CycScalar(0).is_zero());
  CHECK((i - i).is_zero());
  CHECK((i - i).conductor() == 1);
}

TEST_CASE("conductor is minimal") {
  // zeta_6 = -zeta_3^2
  CHECK(CycScalar::root_of_unity(6, 1) == -CycScalar::root_of_unity(3, 2));
  CHECK(CycScalar::root_of_unity(8, 2) == CycScalar::root_of_unity(4, 1));
  CHECK(CycScalar::root_of_unity(8, 2).conductor() == 4);
  // sqrt(2) = zeta_8 + zeta_8^7 is real but not rational
  const auto s = CycScalar::root_of_unity(8, 1) + CycScalar::root_of_unity(8, 7);
  CHECK(s.conductor() == 8);
  CHECK(s * s == CycScalar(2));
}

TEST_CASE("random field axioms against float oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_scalar(rng);
    const auto b = random_scalar(rng);
    CHECK(close(evaluate(a + b), evaluate(a) + evaluate(b)));
    CHECK(close(evaluate(a * b), evaluate(a) * evaluate(b)));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycScalar(1));
      CHECK(close(evaluate(a.inverse()), 1.0 / evaluate(a)));
    }
    const auto c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("promotion then demotion is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_scalar(rng);
    const int n = a.conductor() * 3;
    CHECK(CycScalar::from_coefficients(n, a.coefficients_at(n)) == a);
  }
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_scalar(rng);
    CHECK(CycScalar::parse(a.to_string()) == a);
  }
  CHECK(CycScalar::parse("zeta(4)^2") == CycScalar(-1));
  CHECK(CycScalar::parse("-3/4") == CycScalar(mpq_class(-3, 4)));
  CHECK(CycScalar::parse("1/2*zeta(3) + 1/2*zeta(3)^2") == CycScalar(mpq_class(-1, 2)));
  CHECK_THROWS_AS(CycScalar::parse("zeta(0)"), ParseError);
  CHECK_THROWS_AS(CycScalar::parse("1+"), ParseError);
  CHECK_THROWS_AS(CycScalar::parse("abc"), ParseError);
}

TEST_CASE("linear algebra basics") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  const Matrix ns = nullspace(m);
  CHECK(ns.rows() == 1);
  CHECK((m * ns.row(0)) == Vector(3));
  CHECK_FALSE(inverse(m).has_value());

  const auto i = CycScalar::root_of_unity(4, 1);
  Matrix r = Matrix::from_rows({{0, i}, {1, 0}}, 2);
  const auto inv = inverse(r);
  REQUIRE(inv.has_value());
  CHECK((r * *inv).is_identity());

  const auto x = solve(r, Vector{1, 2});
  REQUIRE(x.has_value());
  CHECK(r * *x == Vector{1, 2});
  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}, 2), Vector{1, 2}).has_value());

  SpanBuilder sb(3);
  CHECK(sb.add({1, 1, 0}));
  CHECK(sb.add({0, 1, 1}));
  CHECK_FALSE(sb.add({1, 2, 1}));
  CHECK(sb.contains({2, 0, -2}));
  CHECK(sb.rank() == 2);
}
