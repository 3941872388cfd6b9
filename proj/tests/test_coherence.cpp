#include <doctest.h>

#include <bit>

#include "moff/coherence.hpp"
#include "moff/oracle.hpp"

using namespace moff;

namespace {

FusionFrame standard_frame(Field field, std::size_t m) {
  return assemble(construct_mubs(field, m),
                  to_blocks(build_S(static_cast<int>(std::countr_zero(m)))));
}

}  // namespace

TEST_CASE("rank-one 2-coherence tensor coefficients") {
  // complex m=2: a = 1/3, b = a/2 = 1/6, c = 0
  ExactMatrix kc = build_K2(1, 2, Field::cplx);
  REQUIRE(kc.rows() == 4);
  // index (j,j') in the m^2 grid is j*m + j'
  CHECK(kc.entry(0, 0) == ExactComplex(Rational(1, 3)));  // a at E_11 (x) E_11
  CHECK(kc.entry(3, 3) == ExactComplex(Rational(1, 3)));
  CHECK(kc.entry(1, 2) == ExactComplex(Rational(1, 6)));  // b: E_12 (x) E_21
  CHECK(kc.entry(1, 1) == ExactComplex(Rational(1, 6)));  // b: E_11 (x) E_22
  CHECK(kc.entry(0, 3) == ExactComplex(Rational(0)));     // c = 0: E_12 (x) E_12

  // real m=2: a = 3/8, b = c = 1/8
  ExactMatrix kr = build_K2(1, 2, Field::real);
  CHECK(kr.entry(0, 0) == ExactComplex(Rational(3, 8)));
  CHECK(kr.entry(1, 2) == ExactComplex(Rational(1, 8)));
  CHECK(kr.entry(1, 1) == ExactComplex(Rational(1, 8)));
  CHECK(kr.entry(0, 3) == ExactComplex(Rational(1, 8)));
}

TEST_CASE("full-rank coherence tensor is the identity square") {
  for (std::size_t m : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
    ExactMatrix k = build_K2(m, m, Field::cplx);
    CHECK(k == kron(ExactMatrix::identity(m), ExactMatrix::identity(m)));
  }
}

TEST_CASE("squared norm matches the built tensor for every small case") {
  for (Field field : {Field::cplx, Field::real})
    for (std::size_t m = 2; m <= 8; ++m)
      for (std::size_t l = 1; l <= m; ++l) {
        ExactMatrix k = build_K2(l, m, field);
        CHECK(hs_inner_real(k, k) == k2_norm_sq(l, m, field));
        CHECK(k.trace() == ExactComplex(Rational(static_cast<long long>(l * l))));
        CHECK(k.is_hermitian());
      }
  CHECK(k2_norm_sq(2, 4, Field::cplx) == Rational(16, 15));
}

TEST_CASE("frame test reaches equality exactly on the maximal frame") {
  FusionFrame ff = standard_frame(Field::cplx, 4);
  SidelnikovResult r = sidelnikov_test(ff);
  CHECK(r.exact);
  CHECK(r.equal);
  CHECK(r.lhs_q == Rational(16, 15));
  CHECK(r.rhs_q == Rational(16, 15));

  // strict inequality after deleting one projection
  ff.projections.pop_back();
  ff.provenance.pop_back();
  SidelnikovResult rd = sidelnikov_test(ff);
  CHECK_FALSE(rd.equal);
  CHECK(rd.at_least);
}

TEST_CASE("random frames sit strictly above the bound") {
  FusionFrame ff = random_frame(4, 2, 30, 99);
  SidelnikovResult r = sidelnikov_test(ff);
  CHECK_FALSE(r.equal);
  CHECK(r.at_least);
}

TEST_CASE("diagonal tensors, closed form against enumeration") {
  for (std::size_t m : {std::size_t(4), std::size_t(6)})
    for (std::size_t l = 1; l <= m / 2; ++l)
      for (int t = 1; t <= static_cast<int>(l) && t <= 2; ++t)
        CHECK(build_D(t, l, m) == build_D_enumerated(t, l, m));

  // entries: u distinct coordinates -> C(m-u, l-u)/C(m, l)
  ExactMatrix d = build_D(2, 2, 4);
  CHECK(d.entry(0, 0) == ExactComplex(Rational(1, 2)));   // (1,1): u=1, l/m
  CHECK(d.entry(1, 1) == ExactComplex(Rational(1, 6)));   // (1,2): u=2
  CHECK(d_norm_sq(2, 4) == Rational(4, 3));
  CHECK(d_norm_sq(4, 8) == Rational(32, 7));
}

TEST_CASE("block test reaches equality exactly on the recursive designs") {
  for (int r = 2; r <= 5; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    SidelnikovResult s2 = block_sidelnikov_test(f, 2);
    CHECK(s2.equal);
    SidelnikovResult s1 = block_sidelnikov_test(f, 1);
    CHECK(s1.equal);
  }
  BlockFamily f2 = to_blocks(build_S(2));
  CHECK(block_sidelnikov_test(f2, 2).rhs_q == Rational(4, 3));
  BlockFamily f3 = to_blocks(build_S(3));
  CHECK(block_sidelnikov_test(f3, 2).rhs_q == Rational(32, 7));

  f2.blocks.pop_back();
  SidelnikovResult broken = block_sidelnikov_test(f2, 2);
  CHECK_FALSE(broken.equal);
  CHECK(broken.at_least);
}

TEST_CASE("tensor characterization agrees with direct counting") {
  for (int r = 2; r <= 3; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    TensorDesignResult td = tensor_design_check(f, 2);
    CHECK(td.is_design);
    CHECK(td.lambda == (1LL << (r - 1)) - 1);
    auto direct = is_t_design(f, 2);
    REQUIRE(direct.has_value());
    CHECK(*direct == td.lambda);
  }

  BlockFamily f = to_blocks(build_S(2));
  f.blocks.pop_back();
  CHECK_FALSE(tensor_design_check(f, 2).is_design);
}

TEST_CASE("design-BIBD equivalence, both fields at m = 4") {
  BlockFamily f = to_blocks(build_S(2));
  for (Field field : {Field::cplx, Field::real}) {
    EquivalenceReport rep = gdesign_bibd_equivalence(construct_mubs(field, 4), f);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.frame_2design);
    CHECK(rep.blocks_bibd);
    CHECK(rep.lambda == 1);
    CHECK(rep.biconditional_ok);
  }
}

TEST_CASE("equivalence hypotheses are checked") {
  // dimension mismatch between the bases and the block family
  BlockFamily f8 = to_blocks(build_S(3));
  EquivalenceReport rep = gdesign_bibd_equivalence(construct_mubs(Field::cplx, 4), f8);
  CHECK_FALSE(rep.hypotheses_ok);

  // non-maximal basis set
  BasisSet s = construct_mubs(Field::cplx, 4);
  s.bases.resize(3);
  EquivalenceReport rep2 = gdesign_bibd_equivalence(s, to_blocks(build_S(2)));
  CHECK_FALSE(rep2.hypotheses_ok);
}

TEST_CASE("haar sampling is deterministic and roughly unbiased") {
  std::mt19937_64 rng(5);
  FloatMatrix u = haar_random_unitary(3, Field::cplx, rng);
  FloatMatrix g = u.adjoint() * u;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);

  std::mt19937_64 rng2(5);
  FloatMatrix u2 = haar_random_unitary(3, Field::cplx, rng2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(u.at(i, j) == u2.at(i, j));

  // real sampling produces a genuinely real orthogonal matrix
  std::mt19937_64 rng3(5);
  FloatMatrix o = haar_random_unitary(3, Field::real, rng3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(o.at(i, j).imag() == 0.0);

  // modest-sample Monte-Carlo estimate lands near the closed form
  FloatMatrix est = haar_k2_estimate(1, 2, Field::cplx, 20000, 42);
  FloatMatrix ref = to_float(build_K2(1, 2, Field::cplx));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(est.at(i, j) - ref.at(i, j)) < 2e-2);
}
