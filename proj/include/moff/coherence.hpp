#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "moff/designs.hpp"
#include "moff/fusion.hpp"
#include "moff/matrix.hpp"
#include "moff/mub.hpp"

namespace moff {

/// 2-coherence tensor K_{2,l,m} (m^2 x m^2, exact). Dense construction is
/// capped at m <= 8; the norm and the Sidelnikov tests use the closed form
/// and never materialize the tensor.
ExactMatrix build_K2(std::size_t l, std::size_t m, Field field);

/// tr(K_{2,l,m}^2) = l^4/m^2 + l^2 (m-l)^2 / (d_F(m) m^2).
Rational k2_norm_sq(std::size_t l, std::size_t m, Field field);

struct SidelnikovResult {
  bool exact = true;
  Rational lhs_q, rhs_q;
  double lhs = 0.0, rhs = 0.0;
  bool equal = false;
  bool at_least = false;  // lhs >= rhs, holds for every frame / family
};

/// (1/n^2) sum tr(P_i P_j)^t against tr(K_{t,l,m}^2); only t = 2.
SidelnikovResult sidelnikov_test(const FusionFrame& ff, int t = 2, double tol = 1e-10);

/// Diagonal coherence tensor D_{t,l,m} (m^t x m^t diagonal, exact).
/// t = 1, 2 via the closed forms; larger t by enumeration over all C(m,l)
/// blocks, subject to the budget.
ExactMatrix build_D(int t, std::size_t l, std::size_t m, std::size_t budget = 100000);

/// Independent enumeration path over all C(m,l) subsets (test oracle).
ExactMatrix build_D_enumerated(int t, std::size_t l, std::size_t m,
                               std::size_t budget = 100000);

/// tr(D_{2,l,m}^2) = l^2 (l^2 - 2l + m) / (m (m-1)).
Rational d_norm_sq(std::size_t l, std::size_t m);

/// (1/|S|^2) sum |J cap J'|^t against tr(D_{t,l,m}^2).
SidelnikovResult block_sidelnikov_test(const BlockFamily& f, int t);

struct TensorDesignResult {
  bool is_design = false;
  long long lambda = 0;
};

/// Zauner's tensor characterization: averages D_J^{(x)t} over the family and
/// compares with D_{t,l,m} entrywise (both diagonal); lambda from the
/// displayed trace formula.
TensorDesignResult tensor_design_check(const BlockFamily& f, int t);

struct EquivalenceReport {
  bool hypotheses_ok = false;
  std::string note;
  bool frame_2design = false;
  bool blocks_bibd = false;
  long long lambda = 0;
  bool biconditional_ok = false;
};

/// Both sides of the Grassmannian-2-design <-> 2-(m, m/2, m/2-1) BIBD
/// equivalence, evaluated independently.
EquivalenceReport gdesign_bibd_equivalence(const BasisSet& s, const BlockFamily& f);

/// Monte-Carlo estimate of K_{2,l,m} from Haar-random conjugations of a fixed
/// rank-l projection; deterministic under the seed.
FloatMatrix haar_k2_estimate(std::size_t l, std::size_t m, Field field,
                             std::size_t samples, std::uint64_t seed);

/// Haar-random orthogonal/unitary matrix via QR of a Gaussian matrix with
/// R-diagonal phase normalization.
FloatMatrix haar_random_unitary(std::size_t m, Field field, std::mt19937_64& rng);

}  // namespace moff
