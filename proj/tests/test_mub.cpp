#include <doctest.h>

#include "moff/mub.hpp"

using namespace moff;

TEST_CASE("counts and ambient dimensions") {
  CHECK(max_mub_count(Field::cplx, 2) == 3);
  CHECK(max_mub_count(Field::cplx, 4) == 5);
  CHECK(max_mub_count(Field::cplx, 16) == 17);
  CHECK(max_mub_count(Field::real, 4) == 3);
  CHECK(ambient_design_dim(Field::cplx, 4) == 15);
  CHECK(ambient_design_dim(Field::real, 4) == 9);
  CHECK(ambient_design_dim(Field::cplx, 16) == 255);
}

TEST_CASE("complex constructions verify exactly") {
  for (std::size_t m : {std::size_t(2), std::size_t(4), std::size_t(8)}) {
    BasisSet s = construct_mubs(Field::cplx, m);
    CHECK(s.count() == m + 1);
    UnbiasedReport rep = verify_unbiased(s);
    CHECK(rep.pass);
    CHECK(rep.worst_unbiased_dev == 0.0);
    CHECK(rep.worst_gram_dev == 0.0);
  }
}

TEST_CASE("real m=4 construction verifies exactly") {
  BasisSet s = construct_mubs(Field::real, 4);
  CHECK(s.count() == 3);
  CHECK(verify_unbiased(s).pass);
}

TEST_CASE("unsupported parameters are rejected") {
  CHECK_THROWS_AS(construct_mubs(Field::cplx, 3), UnsupportedConstruction);
  CHECK_THROWS_AS(construct_mubs(Field::cplx, 6), UnsupportedConstruction);
  CHECK_THROWS_AS(construct_mubs(Field::real, 8), UnsupportedConstruction);
  CHECK_THROWS_AS(construct_mubs(Field::real, 2), UnsupportedConstruction);
}

TEST_CASE("projective span of the lines has dimension rm - r + 1") {
  for (std::size_t m : {std::size_t(2), std::size_t(4)}) {
    BasisSet s = construct_mubs(Field::cplx, m);
    std::size_t r = s.count();
    CHECK(dgs_span_check(s) == r * m - r + 1);
  }
  BasisSet sr = construct_mubs(Field::real, 4);
  CHECK(dgs_span_check(sr) == 3 * 4 - 3 + 1);
}

TEST_CASE("maximal sets meet the line-2-design average exactly") {
  BasisSet s2 = construct_mubs(Field::cplx, 2);
  LinesTwoDesignReport r2 = mub_lines_2design_check(s2);
  CHECK(r2.equal);
  CHECK(r2.average_q == Rational(1, 3));
  CHECK(r2.closed_form_q == Rational(1, 3));

  BasisSet s4 = construct_mubs(Field::cplx, 4);
  LinesTwoDesignReport r4 = mub_lines_2design_check(s4);
  CHECK(r4.equal);
  CHECK(r4.closed_form_q == Rational(1, 10));
}

TEST_CASE("a single basis fails the 2-design average strictly") {
  BasisSet s = construct_mubs(Field::cplx, 4);
  s.bases.resize(1);
  LinesTwoDesignReport r = mub_lines_2design_check(s);
  CHECK_FALSE(r.equal);
  CHECK(r.at_least);
  CHECK(r.average_q == Rational(1, 4));
  CHECK(r.average_q > r.closed_form_q);
}

TEST_CASE("exact cross inner products have squared modulus 1/m") {
  BasisSet s = construct_mubs(Field::cplx, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(exact_inner_abs2(s, 0, j, 1, j) == Rational(1, 8));
    CHECK(exact_inner_abs2(s, 2, j, 7, (j + 3) % 8) == Rational(1, 8));
    CHECK(exact_inner_abs2(s, 3, j, 3, j) == Rational(1));
  }
}
