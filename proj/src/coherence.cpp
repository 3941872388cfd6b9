#include "moff/coherence.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace moff {
namespace {

long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * int128(n - k + i) / int128(i);
    if (acc > int128(INT64_MAX)) throw std::overflow_error("binomial overflow");
  }
  return static_cast<long long>(acc);
}

/// Diagonal entry of D_{t,l,m} at a multi-index with u distinct coordinates:
/// the fraction of l-subsets containing all of them.
Rational d_diag_entry(std::size_t u, std::size_t l, std::size_t m) {
  return Rational(binomial(m - u, l - u), binomial(m, l));
}

std::size_t distinct_count(const std::vector<std::size_t>& idx) {
  std::uint64_t seen = 0;
  for (std::size_t j : idx) seen |= std::uint64_t(1) << j;
  return std::size_t(std::popcount(seen));
}

bool next_multi_index(std::vector<std::size_t>& idx, std::size_t m) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < m) return true;
    idx[k] = 0;
  }
  return false;
}

std::size_t pow_sz(std::size_t base, int exp) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

}  // namespace

ExactMatrix build_K2(std::size_t l, std::size_t m, Field field) {
  if (l < 1 || l > m) throw std::invalid_argument("build_K2: requires 1 <= l <= m");
  if (m > 8) throw std::invalid_argument("build_K2: dense construction capped at m <= 8");
  long long lm = static_cast<long long>(m);
  long long d = static_cast<long long>(ambient_design_dim(field, m));

  Rational a(d + (lm - 1) * (lm - 1), lm * lm * d);
  Rational b = field == Field::cplx ? a / Rational(2) : a / Rational(3);
  Rational c = field == Field::cplx ? Rational(0) : a / Rational(3);

  std::size_t dim = m * m;
  std::vector<Rational> k1(dim * dim);
  auto add_at = [&](std::size_t row, std::size_t col, const Rational& v) {
    k1[row * dim + col] += v;
  };
  for (std::size_t j = 0; j < m; ++j) add_at(j * m + j, j * m + j, a);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t j2 = 0; j2 < m; ++j2) {
      if (j == j2) continue;
      add_at(j * m + j2, j2 * m + j, b);  // E_{j,j'} (x) E_{j',j}
      add_at(j * m + j2, j * m + j2, b);  // E_{j,j} (x) E_{j',j'}
      add_at(j * m + j, j2 * m + j2, c);  // E_{j,j'} (x) E_{j,j'}
    }

  // K_{2,l,m} = (l - l(l-1)/(m-1)) K_{2,1,m} + (l(l-1)/(m(m-1))) I (x) I
  long long ll = static_cast<long long>(l);
  Rational s1 = Rational(ll) - Rational(ll * (ll - 1), lm - 1);
  Rational s2(ll * (ll - 1), lm * (lm - 1));
  std::vector<ExactComplex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t col = 0; col < dim; ++col) {
      Rational v = s1 * k1[r * dim + col];
      if (r == col) v += s2;
      entries[r * dim + col] = ExactComplex(v);
    }
  return ExactMatrix::from_entries(dim, dim, entries);
}

Rational k2_norm_sq(std::size_t l, std::size_t m, Field field) {
  if (l < 1 || l > m) throw std::invalid_argument("k2_norm_sq: requires 1 <= l <= m");
  long long lm = static_cast<long long>(m);
  long long ll = static_cast<long long>(l);
  long long d = static_cast<long long>(ambient_design_dim(field, m));
  return Rational(ll * ll * ll * ll, lm * lm) +
         Rational(ll * ll * (lm - ll) * (lm - ll), d * lm * lm);
}

SidelnikovResult sidelnikov_test(const FusionFrame& ff, int t, double tol) {
  if (t != 2) throw std::invalid_argument("sidelnikov_test: only t = 2 is implemented");
  SidelnikovResult res;
  res.exact = ff.exact;
  res.rhs_q = k2_norm_sq(ff.l, ff.m, ff.field);
  res.rhs = res.rhs_q.to_double();
  CrossGramian g = cross_gramian(ff, tol);
  long long n = static_cast<long long>(g.n);
  if (ff.exact) {
    Rational sum(0);
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j) {
        const Rational& v = g.qat(i, j);
        sum += v * v;
      }
    res.lhs_q = sum / Rational(n * n);
    res.lhs = res.lhs_q.to_double();
    res.equal = res.lhs_q == res.rhs_q;
    res.at_least = res.lhs_q >= res.rhs_q;
    return res;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      double v = g.at(i, j);
      sum += v * v;
    }
  res.lhs = sum / (double(n) * double(n));
  res.equal = std::abs(res.lhs - res.rhs) <= tol;
  res.at_least = res.lhs >= res.rhs - tol;
  return res;
}

ExactMatrix build_D(int t, std::size_t l, std::size_t m, std::size_t budget) {
  if (t < 1) throw std::invalid_argument("build_D: t must be positive");
  if (std::size_t(t) > l) throw std::invalid_argument("build_D: requires t <= l");
  if (t > 2) return build_D_enumerated(t, l, m, budget);
  std::size_t dim = pow_sz(m, t);
  std::vector<ExactComplex> entries(dim * dim);
  if (t == 1) {
    Rational v(static_cast<long long>(l), static_cast<long long>(m));
    for (std::size_t j = 0; j < m; ++j) entries[j * dim + j] = ExactComplex(v);
  } else {
    Rational same(static_cast<long long>(l), static_cast<long long>(m));
    Rational mixed(static_cast<long long>(l) * static_cast<long long>(l - 1),
                   static_cast<long long>(m) * static_cast<long long>(m - 1));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t j2 = 0; j2 < m; ++j2) {
        std::size_t idx = j * m + j2;
        entries[idx * dim + idx] = ExactComplex(j == j2 ? same : mixed);
      }
  }
  return ExactMatrix::from_entries(dim, dim, entries);
}

ExactMatrix build_D_enumerated(int t, std::size_t l, std::size_t m, std::size_t budget) {
  if (t < 1 || std::size_t(t) > l)
    throw std::invalid_argument("build_D_enumerated: requires 1 <= t <= l");
  if (std::size_t(binomial(m, l)) > budget)
    throw std::invalid_argument("build_D_enumerated: enumeration budget exceeded");
  std::size_t dim = pow_sz(m, t);
  if (dim > 4096) throw std::invalid_argument("build_D_enumerated: tensor too large");
  auto blocks = subsets_of_size(m, l);
  std::vector<long long> counts(dim, 0);
  std::vector<std::size_t> idx(t, 0);
  do {
    std::uint64_t need = 0;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      need |= std::uint64_t(1) << idx[k];
      flat = flat * m + idx[k];
    }
    for (std::uint64_t blk : blocks)
      if ((blk & need) == need) ++counts[flat];
  } while (next_multi_index(idx, m));
  std::vector<ExactComplex> entries(dim * dim);
  long long total = static_cast<long long>(blocks.size());
  for (std::size_t j = 0; j < dim; ++j)
    entries[j * dim + j] = ExactComplex(Rational(counts[j], total));
  return ExactMatrix::from_entries(dim, dim, entries);
}

Rational d_norm_sq(std::size_t l, std::size_t m) {
  if (l > m) throw std::invalid_argument("d_norm_sq: requires l <= m");
  long long ll = static_cast<long long>(l);
  long long lm = static_cast<long long>(m);
  return Rational(ll * ll * (ll * ll - 2 * ll + lm), lm * (lm - 1));
}

SidelnikovResult block_sidelnikov_test(const BlockFamily& f, int t) {
  if (t < 1 || std::size_t(t) > f.l)
    throw std::invalid_argument("block_sidelnikov_test: requires 1 <= t <= l");
  SidelnikovResult res;
  res.exact = true;
  if (t == 1)
    res.rhs_q = Rational(static_cast<long long>(f.l) * static_cast<long long>(f.l),
                         static_cast<long long>(f.m));
  else if (t == 2)
    res.rhs_q = d_norm_sq(f.l, f.m);
  else {
    ExactMatrix d = build_D_enumerated(t, f.l, f.m);
    res.rhs_q = hs_inner_real(d, d);
  }
  res.rhs = res.rhs_q.to_double();

  int128 sum = 0;
  for (std::uint64_t a : f.blocks)
    for (std::uint64_t b : f.blocks) {
      long long inter = std::popcount(a & b);
      int128 p = 1;
      for (int k = 0; k < t; ++k) p *= inter;
      sum += p;
    }
  long long n = static_cast<long long>(f.blocks.size());
  res.lhs_q = Rational(static_cast<long long>(sum), n * n);
  res.lhs = res.lhs_q.to_double();
  res.equal = res.lhs_q == res.rhs_q;
  res.at_least = res.lhs_q >= res.rhs_q;
  return res;
}

TensorDesignResult tensor_design_check(const BlockFamily& f, int t) {
  if (t < 1 || std::size_t(t) > f.l)
    throw std::invalid_argument("tensor_design_check: requires 1 <= t <= l");
  if (pow_sz(f.m, t) > 100000)
    throw std::invalid_argument("tensor_design_check: tensor budget exceeded");
  TensorDesignResult res;
  res.is_design = true;
  long long n = static_cast<long long>(f.blocks.size());
  std::vector<std::size_t> idx(t, 0);
  do {
    std::uint64_t need = 0;
    for (std::size_t j : idx) need |= std::uint64_t(1) << j;
    long long count = 0;
    for (std::uint64_t blk : f.blocks)
      if ((blk & need) == need) ++count;
    Rational avg(count, n);
    if (avg != d_diag_entry(distinct_count(idx), f.l, f.m)) {
      res.is_design = false;
      break;
    }
  } while (next_multi_index(idx, f.m));
  // lambda = |S| tr(D_{t,l,m} (x)_s E_{s,s}), the diagonal entry at the
  // all-distinct multi-index (1, ..., t)
  Rational lam = Rational(n) * d_diag_entry(std::size_t(t), f.l, f.m);
  res.lambda = lam.is_integer() ? lam.num() : 0;
  if (!lam.is_integer()) res.is_design = false;
  return res;
}

EquivalenceReport gdesign_bibd_equivalence(const BasisSet& s, const BlockFamily& f) {
  EquivalenceReport rep;
  std::size_t m = s.dim;
  if (f.m != m) {
    rep.note = "dimension mismatch between basis set and block family";
    return rep;
  }
  if (s.count() != max_mub_count(s.field, m)) {
    rep.note = "basis set is not maximal";
    return rep;
  }
  if (2 * f.l != m) {
    rep.note = "blocks do not have size m/2";
    return rep;
  }
  if (s.count() * f.size() != 2 * ambient_design_dim(s.field, m)) {
    rep.note = "frame cardinality differs from 2 d_F(m)";
    return rep;
  }
  // each basis is complete, so the assembled projections always span and the
  // theorem hypotheses are met once the cardinalities line up
  FusionFrame ff = assemble(s, f);
  rep.hypotheses_ok = true;
  SidelnikovResult sid = sidelnikov_test(ff, 2);
  rep.frame_2design = sid.equal;
  auto lambda = is_t_design(f, 2);
  rep.blocks_bibd =
      lambda.has_value() && *lambda == static_cast<long long>(m / 2 - 1);
  if (lambda) rep.lambda = *lambda;
  rep.biconditional_ok = rep.frame_2design == rep.blocks_bibd;
  return rep;
}

FloatMatrix haar_random_unitary(std::size_t m, Field field, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FloatMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a.at(i, j) = field == Field::cplx
                       ? std::complex<double>(gauss(rng), gauss(rng))
                       : std::complex<double>(gauss(rng), 0.0);
  // modified Gram-Schmidt with positive real R diagonal; this is the unique
  // QR normalization, so Q carries the Haar distribution
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      std::complex<double> r = 0.0;
      for (std::size_t i = 0; i < m; ++i) r += std::conj(a.at(i, k)) * a.at(i, j);
      for (std::size_t i = 0; i < m; ++i) a.at(i, j) -= r * a.at(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += std::norm(a.at(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i) a.at(i, j) /= norm;
  }
  return a;
}

FloatMatrix haar_k2_estimate(std::size_t l, std::size_t m, Field field,
                             std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("haar_k2_estimate: samples >= 1");
  if (l < 1 || l > m) throw std::invalid_argument("haar_k2_estimate: requires 1 <= l <= m");
  std::mt19937_64 rng(seed);
  std::size_t dim = m * m;
  FloatMatrix acc(dim, dim);
  for (std::size_t s = 0; s < samples; ++s) {
    FloatMatrix u = haar_random_unitary(m, field, rng);
    // U P U* with P = projection onto the first l coordinates
    FloatMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        std::complex<double> v = 0.0;
        for (std::size_t j = 0; j < l; ++j) v += u.at(i, j) * std::conj(u.at(i2, j));
        p.at(i, i2) = v;
      }
    acc = acc + kron(p, p);
  }
  return acc.scaled(1.0 / double(samples));
}

}  // namespace moff
