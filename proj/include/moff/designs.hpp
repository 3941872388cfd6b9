#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moff/rational.hpp"

namespace moff {

/// 0/1 incidence matrix: rows index the ground set [m], columns index blocks.
struct IncidenceMatrix {
  std::size_t m = 0;  // rows (ground-set size)
  std::size_t n = 0;  // columns (number of blocks)
  std::vector<std::uint8_t> a;

  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols) : m(rows), n(cols), a(rows * cols, 0) {}

  std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/// Blocks of constant size l over {1..m}, stored as bitmasks (bit j-1 <-> j).
/// Duplicate blocks are allowed; list positions are distinct.
struct BlockFamily {
  std::size_t m = 0;
  std::size_t l = 0;
  std::vector<std::uint64_t> blocks;

  std::size_t size() const { return blocks.size(); }
};

std::vector<std::size_t> block_elements(std::uint64_t mask);  // 1-based, ascending
std::uint64_t block_from_elements(const std::vector<std::size_t>& elems, std::size_t m);

/// The recursive incidence matrix S_r: 2^r x (2^(r+1) - 2), starting from
/// S_1 = I_2.
IncidenceMatrix build_S(int r);

/// Column swap matrix F_r = I_(2^r - 1) (x) [[0,1],[1,0]], of size c_r x c_r.
IncidenceMatrix build_F(int r);

BlockFamily to_blocks(const IncidenceMatrix& s);
IncidenceMatrix from_blocks(const BlockFamily& f);

struct SumsReport {
  bool pass = false;
  long long expected_col_sum = 0;
  long long expected_row_sum = 0;
  std::optional<std::size_t> bad_column;
  std::optional<std::size_t> bad_row;
};

/// Every column sums to 2^(r-1), every row to 2^r - 1.
SumsReport check_sums(const IncidenceMatrix& s, int r);

struct MatrixCheckReport {
  bool pass = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

/// S^T S against the closed form: diagonal 2^(r-1), paired column 0,
/// all other entries 2^(r-2).
MatrixCheckReport gram_check(const IncidenceMatrix& s, int r);

struct OuterReport {
  bool pass = false;
  MatrixCheckReport outer;        // S S^T = 2^(r-1) I + (2^(r-1)-1) J
  MatrixCheckReport outer_swap;   // S F S^T = 2^(r-1) (J - I)
};

OuterReport outer_identities_check(const IncidenceMatrix& s, int r);

/// Max over distinct list positions of |J intersect J'|; needs >= 2 blocks.
std::size_t cohesiveness(const BlockFamily& f);

/// lambda when every t-subset of {1..m} lies in the same number of blocks.
std::optional<long long> is_t_design(const BlockFamily& f, int t);

struct OrthoplecticVerdict {
  bool is_max = false;
  Rational bound;  // l^2 / m
  std::size_t cohesion = 0;
  bool cohesive_ok = false;
  bool cardinality_ok = false;  // |F| == 2(m-1)
  // complementary disjoint pairs (indices into the family) when present
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

OrthoplecticVerdict is_maximally_orthoplectic(const BlockFamily& f);

/// Johnson-type bound l^2/m on the max pairwise intersection; only valid
/// for n > m, otherwise nullopt.
std::optional<Rational> johnson_bound(std::size_t m, std::size_t l, std::size_t n);

/// Enumerates all t-subsets of {0..m-1} as bitmasks, in lexicographic order.
std::vector<std::uint64_t> subsets_of_size(std::size_t m, std::size_t t);

}  // namespace moff
