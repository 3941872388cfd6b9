#pragma once

#include <optional>
#include <vector>

#include "moff/designs.hpp"
#include "moff/matrix.hpp"
#include "moff/mub.hpp"

namespace moff {

struct Provenance {
  std::size_t basis_index = 0;
  std::uint64_t block = 0;
};

/// A family of rank-l orthogonal projections on F^m. Exact frames carry
/// Gaussian-rational matrices; imported or randomized frames carry floats.
struct FusionFrame {
  Field field = Field::cplx;
  std::size_t m = 0;
  std::size_t l = 0;
  bool exact = true;
  std::vector<ExactMatrix> projections;
  std::vector<FloatMatrix> fprojections;
  std::vector<Provenance> provenance;  // empty or one entry per projection

  std::size_t size() const { return exact ? projections.size() : fprojections.size(); }
};

/// P_J = sum_{j in J} b_j b_j* for a block over one basis.
ExactMatrix coordinate_projection(const Basis& basis, std::uint64_t block, std::size_t m);
FloatMatrix coordinate_projection(const FloatMatrix& basis, std::uint64_t block);

/// One projection per (basis, block) pair, with provenance.
FusionFrame assemble(const BasisSet& s, const BlockFamily& f);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool tight = false;
  Rational tight_value;  // nl/m, meaningful when tight (exact mode)
};

FrameBounds frame_bounds(const FusionFrame& ff, double tol = 1e-10);

/// Table of tr(P_i P_j); exact frames get rationals, float frames doubles.
struct CrossGramian {
  bool exact = true;
  std::size_t n = 0;
  std::vector<Rational> q;  // n*n, row-major (exact mode)
  std::vector<double> d;    // n*n, row-major (float mode)

  const Rational& qat(std::size_t i, std::size_t j) const { return q[i * n + j]; }
  double at(std::size_t i, std::size_t j) const {
    return exact ? q[i * n + j].to_double() : d[i * n + j];
  }

  std::vector<Rational> distinct_offdiag_q;  // sorted
  std::vector<double> distinct_offdiag_d;    // sorted, tol-clustered
  double chordal(std::size_t i, std::size_t j, std::size_t l) const;
};

CrossGramian cross_gramian(const FusionFrame& ff, double tol = 1e-10);

struct DesignParams {
  int t = 2;
  std::size_t m = 0, l = 0;
  long long lambda = 0;
};

struct Certificate {
  Field field = Field::cplx;
  std::size_t n = 0, l = 0, m = 0;
  bool exact = true;
  double tol = 0.0;

  double frame_lower = 0.0, frame_upper = 0.0;
  bool is_tight = false;
  Rational tight_value;

  Rational max_cross_q;
  double max_cross = 0.0;
  Rational simplex_bound;   // (n l^2 - m l) / (m (n - 1))
  Rational orthoplex_bound; // l^2 / m

  enum class Regime { simplex, orthoplex } regime = Regime::simplex;
  bool is_equiangular = false;
  bool is_orthoplex_achieving = false;
  bool is_maximal_orthoplectic = false;
  bool half_dimension_ok = false;  // m == 2l, asserted in the maximal case
  std::vector<long long> partner;  // antipodal partner per projection, -1 if none

  Rational sidelnikov_lhs_q, sidelnikov_rhs_q;
  double sidelnikov_lhs = 0.0, sidelnikov_rhs = 0.0;
  bool sidelnikov_equal = false;

  std::optional<DesignParams> design_params;
};

Certificate rankin_certify(const FusionFrame& ff, double tol = 1e-10);

/// Traceless embedding V_j = sqrt(m/(l(m-l))) (P_j - (l/m) I). In exact mode
/// the irrational scale stays symbolic: inner products are evaluated through
/// <V_j,V_k> = (m tr(P_j P_k) - l^2) / (l (m-l)).
struct Embedding {
  bool exact = true;
  std::size_t n = 0, m = 0, l = 0;
  std::vector<Rational> inner_q;  // n*n
  std::vector<double> inner_d;

  double inner(std::size_t i, std::size_t j) const {
    return exact ? inner_q[i * n + j].to_double() : inner_d[i * n + j];
  }

  bool unit_norms = false;
  bool sum_zero = false;          // checked only when the frame is tight
  bool trace_relation_ok = false; // tr(P P') = l^2/m + (l(m-l)/m) <V,V'>
  Rational min_inner_q;
  double min_inner = 0.0;
  bool antipodal_floor_ok = false;  // min inner >= -l/(m-l)
};

Embedding embed(const FusionFrame& ff, double tol = 1e-10);

/// Rank of span{V_j} for a frame whose projections all come from one basis.
std::size_t coordinate_embedding_rank(const FusionFrame& ff);

/// Restriction of a frame to the projections with the given provenance basis.
FusionFrame sub_frame_for_basis(const FusionFrame& ff, std::size_t basis_index);

bool mutual_unbiasedness_check(const FusionFrame& a, const FusionFrame& b,
                               double tol = 1e-10);

}  // namespace moff
