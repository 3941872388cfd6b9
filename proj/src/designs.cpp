#include "moff/designs.hpp"

#include <bit>
#include <stdexcept>

namespace moff {

std::vector<std::size_t> block_elements(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; mask; ++j, mask >>= 1)
    if (mask & 1) out.push_back(j + 1);
  return out;
}

std::uint64_t block_from_elements(const std::vector<std::size_t>& elems, std::size_t m) {
  std::uint64_t mask = 0;
  for (std::size_t e : elems) {
    if (e < 1 || e > m) throw std::invalid_argument("block element out of range");
    std::uint64_t bit = std::uint64_t(1) << (e - 1);
    if (mask & bit) throw std::invalid_argument("repeated element within a block");
    mask |= bit;
  }
  return mask;
}

IncidenceMatrix build_S(int r) {
  if (r < 1) throw std::invalid_argument("build_S: r must be at least 1");
  if (r > 6) throw std::invalid_argument("build_S: r capped at 6 (m <= 64 bitmasks)");
  IncidenceMatrix s(2, 2);
  s.at(0, 0) = 1;
  s.at(1, 1) = 1;
  for (int k = 2; k <= r; ++k) {
    std::size_t rows = std::size_t(1) << k;
    std::size_t half = rows / 2;
    std::size_t cols_prev = s.n;
    IncidenceMatrix next(rows, 2 + 2 * cols_prev);
    // B^(i): the two halves of the ground set
    for (std::size_t i = 0; i < half; ++i) {
      next.at(i, 0) = 1;
      next.at(half + i, 1) = 1;
    }
    // B^(ii) = [S; S]
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < cols_prev; ++j) {
        next.at(i, 2 + j) = s.at(i, j);
        next.at(half + i, 2 + j) = s.at(i, j);
      }
    // B^(iii) = [S; S F], where F swaps adjacent column pairs
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < cols_prev; ++j) {
        next.at(i, 2 + cols_prev + j) = s.at(i, j);
        next.at(half + i, 2 + cols_prev + j) = s.at(i, j ^ 1);
      }
    s = std::move(next);
  }
  return s;
}

IncidenceMatrix build_F(int r) {
  std::size_t c = (std::size_t(1) << (r + 1)) - 2;
  IncidenceMatrix f(c, c);
  for (std::size_t j = 0; j < c; ++j) f.at(j ^ 1, j) = 1;
  return f;
}

BlockFamily to_blocks(const IncidenceMatrix& s) {
  if (s.m > 64) throw std::invalid_argument("to_blocks: ground set larger than 64");
  BlockFamily f;
  f.m = s.m;
  f.blocks.reserve(s.n);
  std::size_t l = 0;
  for (std::size_t j = 0; j < s.n; ++j) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < s.m; ++i) {
      std::uint8_t v = s.at(i, j);
      if (v > 1) throw std::invalid_argument("to_blocks: non-binary entry");
      if (v) mask |= std::uint64_t(1) << i;
    }
    std::size_t sz = std::popcount(mask);
    if (j == 0)
      l = sz;
    else if (sz != l)
      throw std::invalid_argument("to_blocks: non-constant block size");
    f.blocks.push_back(mask);
  }
  f.l = l;
  return f;
}

IncidenceMatrix from_blocks(const BlockFamily& f) {
  IncidenceMatrix s(f.m, f.blocks.size());
  for (std::size_t j = 0; j < f.blocks.size(); ++j) {
    std::uint64_t mask = f.blocks[j];
    if (f.m < 64 && (mask >> f.m) != 0)
      throw std::invalid_argument("from_blocks: element outside ground set");
    if (std::size_t(std::popcount(mask)) != f.l)
      throw std::invalid_argument("from_blocks: block of wrong size");
    for (std::size_t i = 0; i < f.m; ++i)
      if (mask & (std::uint64_t(1) << i)) s.at(i, j) = 1;
  }
  return s;
}

SumsReport check_sums(const IncidenceMatrix& s, int r) {
  SumsReport rep;
  rep.expected_col_sum = 1LL << (r - 1);
  rep.expected_row_sum = (1LL << r) - 1;
  rep.pass = true;
  for (std::size_t j = 0; j < s.n; ++j) {
    long long sum = 0;
    for (std::size_t i = 0; i < s.m; ++i) sum += s.at(i, j);
    if (sum != rep.expected_col_sum) {
      rep.pass = false;
      if (!rep.bad_column) rep.bad_column = j;
    }
  }
  for (std::size_t i = 0; i < s.m; ++i) {
    long long sum = 0;
    for (std::size_t j = 0; j < s.n; ++j) sum += s.at(i, j);
    if (sum != rep.expected_row_sum) {
      rep.pass = false;
      if (!rep.bad_row) rep.bad_row = i;
    }
  }
  return rep;
}

MatrixCheckReport gram_check(const IncidenceMatrix& s, int r) {
  MatrixCheckReport rep;
  rep.pass = true;
  long long diag = 1LL << (r - 1);
  long long other = r >= 2 ? (1LL << (r - 2)) : 0;  // unused at r = 1 (no such pair)
  for (std::size_t a = 0; a < s.n; ++a)
    for (std::size_t b = 0; b < s.n; ++b) {
      long long got = 0;
      for (std::size_t i = 0; i < s.m; ++i) got += s.at(i, a) * s.at(i, b);
      long long want = a == b ? diag : (b == (a ^ 1) ? 0 : other);
      if (got != want) {
        rep.pass = false;
        if (!rep.first_mismatch) rep.first_mismatch = {a, b};
      }
    }
  return rep;
}

OuterReport outer_identities_check(const IncidenceMatrix& s, int r) {
  OuterReport rep;
  long long half = 1LL << (r - 1);
  IncidenceMatrix f = build_F(r);
  rep.outer.pass = true;
  rep.outer_swap.pass = true;
  for (std::size_t a = 0; a < s.m; ++a)
    for (std::size_t b = 0; b < s.m; ++b) {
      long long got = 0, got_swap = 0;
      for (std::size_t j = 0; j < s.n; ++j) {
        got += s.at(a, j) * s.at(b, j);
        got_swap += s.at(a, j) * s.at(b, j ^ 1);  // (S F)_{b, j} = S_{b, j^1}
      }
      long long want = a == b ? half + (half - 1) : (half - 1);
      long long want_swap = a == b ? 0 : half;
      if (got != want) {
        rep.outer.pass = false;
        if (!rep.outer.first_mismatch) rep.outer.first_mismatch = {a, b};
      }
      if (got_swap != want_swap) {
        rep.outer_swap.pass = false;
        if (!rep.outer_swap.first_mismatch) rep.outer_swap.first_mismatch = {a, b};
      }
    }
  rep.pass = rep.outer.pass && rep.outer_swap.pass;
  return rep;
}

std::size_t cohesiveness(const BlockFamily& f) {
  if (f.blocks.size() < 2)
    throw std::invalid_argument("cohesiveness: needs at least 2 blocks");
  std::size_t best = 0;
  for (std::size_t a = 0; a < f.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < f.blocks.size(); ++b)
      best = std::max(best, std::size_t(std::popcount(f.blocks[a] & f.blocks[b])));
  return best;
}

std::vector<std::uint64_t> subsets_of_size(std::size_t m, std::size_t t) {
  std::vector<std::uint64_t> out;
  if (t > m) return out;
  if (t == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t mask = (std::uint64_t(1) << t) - 1;
  std::uint64_t limit = m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
  while (mask <= limit) {
    out.push_back(mask);
    // Gosper's hack
    std::uint64_t c = mask & -mask;
    std::uint64_t rr = mask + c;
    if (rr == 0) break;
    mask = (((rr ^ mask) >> 2) / c) | rr;
  }
  return out;
}

std::optional<long long> is_t_design(const BlockFamily& f, int t) {
  if (t < 0 || std::size_t(t) > f.l)
    throw std::invalid_argument("is_t_design: t must satisfy 0 <= t <= l");
  std::optional<long long> lambda;
  for (std::uint64_t sub : subsets_of_size(f.m, std::size_t(t))) {
    long long count = 0;
    for (std::uint64_t blk : f.blocks)
      if ((blk & sub) == sub) ++count;
    if (!lambda)
      lambda = count;
    else if (*lambda != count)
      return std::nullopt;
  }
  return lambda;
}

OrthoplecticVerdict is_maximally_orthoplectic(const BlockFamily& f) {
  OrthoplecticVerdict v;
  v.bound = Rational(static_cast<long long>(f.l) * static_cast<long long>(f.l),
                     static_cast<long long>(f.m));
  v.cohesion = cohesiveness(f);
  v.cohesive_ok = Rational(static_cast<long long>(v.cohesion)) <= v.bound;
  v.cardinality_ok = f.blocks.size() == 2 * (f.m - 1);
  v.is_max = v.cohesive_ok && v.cardinality_ok;
  if (v.is_max) {
    // the Johnson bound at n = 2(m-1) forces a partition into complementary
    // disjoint pairs; recover it greedily
    std::uint64_t full = f.m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << f.m) - 1;
    std::vector<bool> used(f.blocks.size(), false);
    for (std::size_t a = 0; a < f.blocks.size(); ++a) {
      if (used[a]) continue;
      for (std::size_t b = a + 1; b < f.blocks.size(); ++b) {
        if (used[b]) continue;
        if ((f.blocks[a] | f.blocks[b]) == full && (f.blocks[a] & f.blocks[b]) == 0) {
          v.pairs.emplace_back(a, b);
          used[a] = used[b] = true;
          break;
        }
      }
    }
  }
  return v;
}

std::optional<Rational> johnson_bound(std::size_t m, std::size_t l, std::size_t n) {
  if (n <= m) return std::nullopt;
  return Rational(static_cast<long long>(l) * static_cast<long long>(l),
                  static_cast<long long>(m));
}

}  // namespace moff
