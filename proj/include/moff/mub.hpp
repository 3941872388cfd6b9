#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moff/matrix.hpp"

namespace moff {

enum class Field { real, cplx };

std::string field_name(Field f);
Field field_from_name(const std::string& s);

enum class Scale { none, inv_sqrt_dim };

/// One orthonormal basis, columns are the basis vectors. In exact mode the
/// stored entries are Gaussian integers; with scale == inv_sqrt_dim the actual
/// vectors are the columns divided by sqrt(dim).
struct Basis {
  ExactMatrix mat;
  Scale scale = Scale::none;
};

struct BasisSet {
  Field field = Field::cplx;
  std::size_t dim = 0;
  bool exact = true;
  std::vector<Basis> bases;         // exact mode
  std::vector<FloatMatrix> fbases;  // float mode (unit columns, scale none)

  std::size_t count() const { return exact ? bases.size() : fbases.size(); }
};

/// k_F(m): m+1 complex, m/2+1 real (m even).
std::size_t max_mub_count(Field f, std::size_t m);

/// d_F(m): m^2-1 complex, (m+2)(m-1)/2 real.
std::size_t ambient_design_dim(Field f, std::size_t m);

struct UnsupportedConstruction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Maximal MUB set: complex m = 2^r via the Galois-ring phase construction,
/// real m = 4 via an explicit Hadamard triple. Everything else must be
/// imported and verified instead.
BasisSet construct_mubs(Field f, std::size_t m);

struct UnbiasedReport {
  bool pass = false;
  std::size_t basis_count = 0;
  std::size_t cross_pairs = 0;
  // worst deviation of |<b,b'>|^2 from 1/m across bases, and of each Gram
  // from the identity; exactly zero for passing exact sets
  double worst_unbiased_dev = 0.0;
  double worst_gram_dev = 0.0;
};

UnbiasedReport verify_unbiased(const BasisSet& s, double tol = 1e-10);

/// Real dimension of span{ b (x) b* } over all vectors of the set, computed
/// from the rank of the Hilbert-Schmidt Gram matrix. Equals rm - r + 1 for a
/// maximal set of r mutually unbiased bases.
std::size_t dgs_span_check(const BasisSet& s, double tol = 1e-10);

struct LinesTwoDesignReport {
  bool exact = true;
  Rational average_q;      // (1/(mk)^2) sum of tr(P P')^2
  Rational closed_form_q;  // (k + m - 1) / (m^2 k)
  Rational k2_q;           // tr(K_{2,1,m}^2)
  double average = 0.0;
  double closed_form = 0.0;
  bool equal = false;
  bool at_least = false;  // average >= closed form (holds for every set)
};

LinesTwoDesignReport mub_lines_2design_check(const BasisSet& s, double tol = 1e-10);

/// Squared modulus of the inner product of columns (ka, ja) and (kb, jb),
/// exact mode. Used by the verifiers and the line-design check.
Rational exact_inner_abs2(const BasisSet& s, std::size_t ka, std::size_t ja,
                          std::size_t kb, std::size_t jb);

}  // namespace moff
