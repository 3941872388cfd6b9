#include "moff/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moff/coherence.hpp"

namespace moff {
namespace {

long long scale_sq(const Basis& b, std::size_t m) {
  return b.scale == Scale::inv_sqrt_dim ? static_cast<long long>(m) : 1;
}

Rational frac(long long n, long long d) { return Rational(n, d); }

}  // namespace

ExactMatrix coordinate_projection(const Basis& basis, std::uint64_t block, std::size_t m) {
  if (basis.mat.rows() != m || basis.mat.cols() != m)
    throw std::invalid_argument("coordinate_projection: basis shape mismatch");
  if (m < 64 && (block >> m) != 0)
    throw std::out_of_range("coordinate_projection: block index out of range");
  ExactMatrix num(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(block & (std::uint64_t(1) << j))) continue;
    for (std::size_t i = 0; i < m; ++i) {
      const GaussInt& ci = basis.mat.raw(i, j);
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        GaussInt cj = basis.mat.raw(i2, j).conj();
        GaussInt& e = num.raw(i, i2);
        e.re += ci.re * cj.re - ci.im * cj.im;
        e.im += ci.re * cj.im + ci.im * cj.re;
      }
    }
  }
  num.set_den(scale_sq(basis, m));
  return num;
}

FloatMatrix coordinate_projection(const FloatMatrix& basis, std::uint64_t block) {
  std::size_t m = basis.rows();
  if ((m < 64) && (block >> m) != 0)
    throw std::out_of_range("coordinate_projection: block index out of range");
  FloatMatrix p(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(block & (std::uint64_t(1) << j))) continue;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        p.at(i, i2) += basis.at(i, j) * std::conj(basis.at(i2, j));
  }
  return p;
}

FusionFrame assemble(const BasisSet& s, const BlockFamily& f) {
  if (s.dim != f.m) throw std::invalid_argument("assemble: dimension mismatch");
  FusionFrame ff;
  ff.field = s.field;
  ff.m = s.dim;
  ff.l = f.l;
  ff.exact = s.exact;
  for (std::size_t k = 0; k < s.count(); ++k)
    for (std::uint64_t blk : f.blocks) {
      if (s.exact)
        ff.projections.push_back(coordinate_projection(s.bases[k], blk, s.dim));
      else
        ff.fprojections.push_back(coordinate_projection(s.fbases[k], blk));
      ff.provenance.push_back({k, blk});
    }
  return ff;
}

FrameBounds frame_bounds(const FusionFrame& ff, double tol) {
  FrameBounds fb;
  std::size_t n = ff.size();
  if (n == 0) throw std::invalid_argument("frame_bounds: empty frame");
  if (ff.exact) {
    ExactMatrix sum = ff.projections[0];
    for (std::size_t j = 1; j < n; ++j) sum = sum + ff.projections[j];
    Rational a = frac(static_cast<long long>(n) * static_cast<long long>(ff.l),
                      static_cast<long long>(ff.m));
    if (sum == ExactMatrix::identity(ff.m).scaled(a)) {
      fb.tight = true;
      fb.tight_value = a;
      fb.lower = fb.upper = a.to_double();
      return fb;
    }
    auto [lo, hi] = extreme_eigenvalues(to_float(sum));
    fb.lower = lo;
    fb.upper = hi;
    return fb;
  }
  FloatMatrix sum = ff.fprojections[0];
  for (std::size_t j = 1; j < n; ++j) sum = sum + ff.fprojections[j];
  auto [lo, hi] = extreme_eigenvalues(sum);
  fb.lower = lo;
  fb.upper = hi;
  fb.tight = (hi - lo) <= tol * std::max(1.0, std::abs(hi));
  return fb;
}

double CrossGramian::chordal(std::size_t i, std::size_t j, std::size_t l) const {
  double t = double(l) - at(i, j);
  return t <= 0 ? 0.0 : std::sqrt(t);
}

CrossGramian cross_gramian(const FusionFrame& ff, double tol) {
  CrossGramian g;
  g.exact = ff.exact;
  g.n = ff.size();
  if (ff.exact) {
    g.q.resize(g.n * g.n);
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = i; j < g.n; ++j) {
        Rational v = hs_inner_real(ff.projections[i], ff.projections[j]);
        g.q[i * g.n + j] = v;
        g.q[j * g.n + i] = v;
        if (i != j) g.distinct_offdiag_q.push_back(v);
      }
    std::sort(g.distinct_offdiag_q.begin(), g.distinct_offdiag_q.end());
    g.distinct_offdiag_q.erase(
        std::unique(g.distinct_offdiag_q.begin(), g.distinct_offdiag_q.end()),
        g.distinct_offdiag_q.end());
    return g;
  }
  g.d.resize(g.n * g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i; j < g.n; ++j) {
      double v = hs_inner(ff.fprojections[i], ff.fprojections[j]).real();
      g.d[i * g.n + j] = v;
      g.d[j * g.n + i] = v;
      if (i != j) g.distinct_offdiag_d.push_back(v);
    }
  std::sort(g.distinct_offdiag_d.begin(), g.distinct_offdiag_d.end());
  std::vector<double> clustered;
  for (double v : g.distinct_offdiag_d)
    if (clustered.empty() || v - clustered.back() > tol) clustered.push_back(v);
  g.distinct_offdiag_d = std::move(clustered);
  return g;
}

Certificate rankin_certify(const FusionFrame& ff, double tol) {
  std::size_t n = ff.size();
  if (n < 2) throw std::invalid_argument("rankin_certify: needs at least 2 projections");
  Certificate c;
  c.field = ff.field;
  c.n = n;
  c.l = ff.l;
  c.m = ff.m;
  c.exact = ff.exact;
  c.tol = tol;

  long long ln = static_cast<long long>(n);
  long long lm = static_cast<long long>(ff.m);
  long long ll = static_cast<long long>(ff.l);
  std::size_t d = ambient_design_dim(ff.field, ff.m);

  FrameBounds fb = frame_bounds(ff, tol);
  c.frame_lower = fb.lower;
  c.frame_upper = fb.upper;
  c.is_tight = fb.tight;
  c.tight_value = fb.tight_value;

  CrossGramian g = cross_gramian(ff, tol);
  c.simplex_bound = frac(ln * ll * ll - lm * ll, lm * (ln - 1));
  c.orthoplex_bound = frac(ll * ll, lm);
  c.regime = n > d + 1 ? Certificate::Regime::orthoplex : Certificate::Regime::simplex;

  Rational partner_target = frac(ll * (2 * ll - lm), lm);
  bool max_is_orthoplex;
  if (ff.exact) {
    Rational mx = g.distinct_offdiag_q.back();
    c.max_cross_q = mx;
    c.max_cross = mx.to_double();
    c.is_equiangular = g.distinct_offdiag_q.size() == 1;
    max_is_orthoplex = mx == c.orthoplex_bound;
  } else {
    c.max_cross = g.distinct_offdiag_d.back();
    c.is_equiangular = g.distinct_offdiag_d.size() == 1;
    max_is_orthoplex = std::abs(c.max_cross - c.orthoplex_bound.to_double()) <= tol;
  }

  c.is_orthoplex_achieving =
      c.regime == Certificate::Regime::orthoplex && max_is_orthoplex;
  c.is_maximal_orthoplectic = c.is_orthoplex_achieving && n == 2 * d;

  if (c.is_maximal_orthoplectic) {
    c.half_dimension_ok = ff.m == 2 * ff.l;
    c.partner.assign(n, -1);
    double pt = partner_target.to_double();
    double ob = c.orthoplex_bound.to_double();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t partners = 0;
      bool others_ok = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        bool is_partner, is_bound;
        if (ff.exact) {
          is_partner = g.qat(i, j) == partner_target;
          is_bound = g.qat(i, j) == c.orthoplex_bound;
        } else {
          is_partner = std::abs(g.at(i, j) - pt) <= tol;
          is_bound = std::abs(g.at(i, j) - ob) <= tol;
        }
        // at l = m/2 the two targets coincide at 0 vs l^2/m > 0, so the
        // partner test is unambiguous
        if (is_partner) {
          ++partners;
          c.partner[i] = static_cast<long long>(j);
        } else if (!is_bound) {
          others_ok = false;
        }
      }
      if (partners != 1 || !others_ok) {
        c.is_maximal_orthoplectic = false;
        break;
      }
    }
    if (!c.half_dimension_ok) c.is_maximal_orthoplectic = false;
  }

  // generalized Sidelnikov at t = 2
  SidelnikovResult sid = sidelnikov_test(ff, 2, tol);
  c.sidelnikov_lhs_q = sid.lhs_q;
  c.sidelnikov_rhs_q = sid.rhs_q;
  c.sidelnikov_lhs = sid.lhs;
  c.sidelnikov_rhs = sid.rhs;
  c.sidelnikov_equal = sid.equal;

  if (sid.equal && !ff.provenance.empty()) {
    BlockFamily fam;
    fam.m = ff.m;
    fam.l = ff.l;
    std::size_t basis0 = ff.provenance[0].basis_index;
    for (const auto& p : ff.provenance)
      if (p.basis_index == basis0) fam.blocks.push_back(p.block);
    if (ff.l >= 2) {
      if (auto lambda = is_t_design(fam, 2))
        c.design_params = DesignParams{2, ff.m, ff.l, *lambda};
    }
  }
  return c;
}

Embedding embed(const FusionFrame& ff, double tol) {
  if (ff.l >= ff.m)
    throw std::invalid_argument("embed: requires l < m");
  Embedding e;
  e.exact = ff.exact;
  e.n = ff.size();
  e.m = ff.m;
  e.l = ff.l;

  long long lm = static_cast<long long>(ff.m);
  long long ll = static_cast<long long>(ff.l);
  Rational l2m = frac(ll * ll, lm);
  Rational scale = frac(ll * (lm - ll), lm);   // l(m-l)/m
  Rational wnorm = frac(ll * (lm - ll), 1);    // l(m-l), from <V,V> denominator
  Rational floor_q = frac(-ll, lm - ll);

  FrameBounds fb = frame_bounds(ff, tol);

  if (ff.exact) {
    // W_j = P_j - (l/m) I; <V_j,V_k> = m tr(W_j W_k) / (l (m-l))
    ExactMatrix shift = ExactMatrix::identity(ff.m).scaled(frac(ll, lm));
    std::vector<ExactMatrix> w;
    w.reserve(e.n);
    for (const auto& p : ff.projections) w.push_back(p - shift);

    e.inner_q.resize(e.n * e.n);
    e.unit_norms = true;
    e.trace_relation_ok = true;
    bool have_min = false;
    for (std::size_t i = 0; i < e.n; ++i)
      for (std::size_t j = i; j < e.n; ++j) {
        Rational tw = hs_inner_real(w[i], w[j]);
        Rational inner = tw * Rational(lm) / wnorm;
        e.inner_q[i * e.n + j] = inner;
        e.inner_q[j * e.n + i] = inner;
        Rational tr_pp = hs_inner_real(ff.projections[i], ff.projections[j]);
        if (tr_pp != l2m + scale * inner) e.trace_relation_ok = false;
        if (i == j) {
          if (inner != Rational(1)) e.unit_norms = false;
        } else if (!have_min || inner < e.min_inner_q) {
          e.min_inner_q = inner;
          have_min = true;
        }
      }
    e.min_inner = e.min_inner_q.to_double();
    e.antipodal_floor_ok = !have_min || e.min_inner_q >= floor_q;
    if (fb.tight) {
      ExactMatrix sum = w[0];
      for (std::size_t j = 1; j < e.n; ++j) sum = sum + w[j];
      e.sum_zero = sum == ExactMatrix(ff.m, ff.m);
    }
    return e;
  }

  double sc = std::sqrt(double(ff.m) / (double(ff.l) * double(ff.m - ff.l)));
  std::vector<FloatMatrix> v;
  v.reserve(e.n);
  FloatMatrix shift = FloatMatrix::identity(ff.m).scaled(double(ff.l) / double(ff.m));
  for (const auto& p : ff.fprojections) v.push_back((p - shift).scaled(sc));

  e.inner_d.resize(e.n * e.n);
  e.unit_norms = true;
  e.trace_relation_ok = true;
  bool have_min = false;
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = i; j < e.n; ++j) {
      double inner = hs_inner(v[i], v[j]).real();
      e.inner_d[i * e.n + j] = inner;
      e.inner_d[j * e.n + i] = inner;
      double tr_pp = hs_inner(ff.fprojections[i], ff.fprojections[j]).real();
      if (std::abs(tr_pp - (l2m.to_double() + scale.to_double() * inner)) > tol)
        e.trace_relation_ok = false;
      if (i == j) {
        if (std::abs(inner - 1.0) > tol) e.unit_norms = false;
      } else if (!have_min || inner < e.min_inner) {
        e.min_inner = inner;
        have_min = true;
      }
    }
  e.antipodal_floor_ok = !have_min || e.min_inner >= floor_q.to_double() - tol;
  if (fb.tight) {
    FloatMatrix sum = v[0];
    for (std::size_t j = 1; j < e.n; ++j) sum = sum + v[j];
    double worst = 0.0;
    for (std::size_t i = 0; i < ff.m; ++i)
      for (std::size_t j = 0; j < ff.m; ++j)
        worst = std::max(worst, std::abs(sum.at(i, j)));
    e.sum_zero = worst <= e.n * tol;
  }
  return e;
}

FusionFrame sub_frame_for_basis(const FusionFrame& ff, std::size_t basis_index) {
  if (ff.provenance.size() != ff.size())
    throw std::invalid_argument("sub_frame_for_basis: frame has no provenance");
  FusionFrame out;
  out.field = ff.field;
  out.m = ff.m;
  out.l = ff.l;
  out.exact = ff.exact;
  for (std::size_t i = 0; i < ff.size(); ++i)
    if (ff.provenance[i].basis_index == basis_index) {
      if (ff.exact)
        out.projections.push_back(ff.projections[i]);
      else
        out.fprojections.push_back(ff.fprojections[i]);
      out.provenance.push_back(ff.provenance[i]);
    }
  return out;
}

std::size_t coordinate_embedding_rank(const FusionFrame& ff) {
  if (ff.provenance.size() != ff.size())
    throw std::invalid_argument("coordinate_embedding_rank: provenance required");
  for (const auto& p : ff.provenance)
    if (p.basis_index != ff.provenance[0].basis_index)
      throw std::invalid_argument("coordinate_embedding_rank: mixed provenance");
  std::size_t n = ff.size();
  long long lm = static_cast<long long>(ff.m);
  long long ll = static_cast<long long>(ff.l);
  if (ff.exact) {
    ExactMatrix shift = ExactMatrix::identity(ff.m).scaled(frac(ll, lm));
    std::vector<ExactMatrix> w;
    for (const auto& p : ff.projections) w.push_back(p - shift);
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational v = hs_inner_real(w[i], w[j]);
        gram[i][j] = v;
        gram[j][i] = v;
      }
    return rational_rank(std::move(gram));
  }
  FloatMatrix shift = FloatMatrix::identity(ff.m).scaled(double(ff.l) / double(ff.m));
  std::vector<FloatMatrix> w;
  for (const auto& p : ff.fprojections) w.push_back(p - shift);
  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      gram[i][j] = gram[j][i] = hs_inner(w[i], w[j]).real();
  return float_rank(std::move(gram), 1e-8);
}

bool mutual_unbiasedness_check(const FusionFrame& a, const FusionFrame& b, double tol) {
  if (a.m != b.m || a.l != b.l || a.field != b.field || a.exact != b.exact)
    throw std::invalid_argument("mutual_unbiasedness_check: shape mismatch");
  Rational target(static_cast<long long>(a.l) * static_cast<long long>(a.l),
                  static_cast<long long>(a.m));
  if (a.exact) {
    for (const auto& p : a.projections)
      for (const auto& q : b.projections)
        if (hs_inner_real(p, q) != target) return false;
    return true;
  }
  for (const auto& p : a.fprojections)
    for (const auto& q : b.fprojections)
      if (std::abs(hs_inner(p, q).real() - target.to_double()) > tol) return false;
  return true;
}

}  // namespace moff
