#include <doctest.h>

#include <random>

#include "moff/matrix.hpp"
#include "moff/rational.hpp"

using namespace moff;

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2).den() == 2);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(2, 9)) == Rational(1, 6));
  CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
  CHECK(Rational(5, 3) - Rational(5, 3) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int k = 0; k < 500; ++k) {
    Rational a(d(rng), d(rng) * 2 + 1), b(d(rng), d(rng) * 2 + 1), c(d(rng), d(rng) * 2 + 1);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a / a == Rational(1));
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("rational ordering and rendering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS(Rational::parse("1/2x"));
}

TEST_CASE("rational overflow detection") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("gaussian rational complex") {
  ExactComplex i(Rational(0), Rational(1));
  CHECK(i * i == ExactComplex(Rational(-1)));
  CHECK(i.conj() * i == ExactComplex(Rational(1)));
  ExactComplex z(Rational(3, 5), Rational(4, 5));
  CHECK(z.abs2() == Rational(1));
  CHECK((z * z.conj()).is_real());
}

namespace {

ExactMatrix pauli_like(int which) {
  // 2x2 test projectors/unitaries with entries in (1/2) Z[i]
  std::vector<ExactComplex> e;
  Rational h(1, 2);
  switch (which) {
    case 0:  // projection onto (1,1)/sqrt(2)
      e = {ExactComplex(h), ExactComplex(h), ExactComplex(h), ExactComplex(h)};
      break;
    case 1:  // projection onto (1,i)/sqrt(2)
      e = {ExactComplex(h), ExactComplex(Rational(0), -h), ExactComplex(Rational(0), h),
           ExactComplex(h)};
      break;
    default:  // e11
      e = {ExactComplex(Rational(1)), ExactComplex(Rational(0)), ExactComplex(Rational(0)),
           ExactComplex(Rational(0))};
  }
  return ExactMatrix::from_entries(2, 2, e);
}

}  // namespace

TEST_CASE("exact matrix algebra") {
  ExactMatrix id = ExactMatrix::identity(3);
  CHECK(id * id == id);
  CHECK(id.trace() == ExactComplex(Rational(3)));

  ExactMatrix p = pauli_like(0);
  CHECK(p.is_hermitian());
  CHECK(p * p == p);
  CHECK(p.trace() == ExactComplex(Rational(1)));
  CHECK(p.adjoint() == p);

  ExactMatrix q = pauli_like(1);
  CHECK(hs_inner_real(p, q) == Rational(1, 2));
  CHECK(hs_inner_real(p, p) == Rational(1));

  ExactMatrix sum = p + q - q;
  CHECK(sum == p);
  CHECK(p.scaled(Rational(2)).trace() == ExactComplex(Rational(2)));
}

TEST_CASE("kronecker product") {
  ExactMatrix a = pauli_like(2);
  ExactMatrix k = kron(a, a);
  CHECK(k.rows() == 4);
  CHECK(k.trace() == ExactComplex(Rational(1)));
  CHECK(k * k == k);

  // mixed-rank: tr(A (x) B) = tr A tr B
  ExactMatrix p = pauli_like(0), q = pauli_like(1);
  ExactMatrix pq = kron(p, q);
  CHECK(pq.trace() == ExactComplex(Rational(1)));
  CHECK(hs_inner_real(pq, pq) == Rational(1));
}

TEST_CASE("projector verification, exact") {
  CHECK(verify_projector(pauli_like(0)).ok);
  CHECK(verify_projector(pauli_like(0)).rank == 1);
  CHECK(verify_projector(ExactMatrix::identity(4)).rank == 4);

  // hermitian but not idempotent
  ExactMatrix bad = ExactMatrix::identity(2).scaled(Rational(1, 2));
  CHECK_FALSE(verify_projector(bad).ok);
}

TEST_CASE("projector verification, float: eigenvalues land in {0,1}") {
  // conjugate diag(1,0) by a rotation; verify_projector must accept it
  double th = 0.7;
  FloatMatrix u(2, 2);
  u.at(0, 0) = std::cos(th);
  u.at(0, 1) = -std::sin(th);
  u.at(1, 0) = std::sin(th);
  u.at(1, 1) = std::cos(th);
  FloatMatrix d(2, 2);
  d.at(0, 0) = 1.0;
  FloatMatrix p = u * d * u.adjoint();
  ProjectorCheck pc = verify_projector(p, 1e-12);
  CHECK(pc.ok);
  CHECK(pc.rank == 1);
  auto [lo, hi] = extreme_eigenvalues(p);
  CHECK(lo == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rank computations") {
  std::vector<std::vector<Rational>> g = {
      {Rational(1), Rational(2), Rational(3)},
      {Rational(2), Rational(4), Rational(6)},
      {Rational(0), Rational(1), Rational(1)},
  };
  CHECK(rational_rank(g) == 2);
  std::vector<std::vector<double>> f = {{1, 0}, {0, 1e-14}};
  CHECK(float_rank(f, 1e-10) == 1);
}
