#include "moff/mub.hpp"

#include <cmath>
#include <stdexcept>

#include "moff/galois_ring.hpp"

namespace moff {
namespace {

GaussInt i_power(int t) {
  switch (((t % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

bool is_power_of_two(std::size_t m) { return m >= 1 && (m & (m - 1)) == 0; }

int log2_exact(std::size_t m) {
  int r = 0;
  while ((std::size_t(1) << r) < m) ++r;
  return r;
}

long long scale_factor(const Basis& b, std::size_t m) {
  return b.scale == Scale::inv_sqrt_dim ? static_cast<long long>(m) : 1;
}

GaussInt column_inner(const ExactMatrix& a, std::size_t ja, const ExactMatrix& b,
                      std::size_t jb) {
  int128 re = 0, im = 0;
  for (std::size_t x = 0; x < a.rows(); ++x) {
    GaussInt u = a.raw(x, ja).conj();
    const GaussInt& v = b.raw(x, jb);
    re += int128(u.re) * v.re - int128(u.im) * v.im;
    im += int128(u.re) * v.im + int128(u.im) * v.re;
  }
  return {static_cast<long long>(re), static_cast<long long>(im)};
}

}  // namespace

std::string field_name(Field f) { return f == Field::real ? "real" : "complex"; }

Field field_from_name(const std::string& s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::cplx;
  throw std::invalid_argument("unknown field '" + s + "'");
}

std::size_t max_mub_count(Field f, std::size_t m) {
  if (m < 2) throw std::invalid_argument("max_mub_count: m must be at least 2");
  if (f == Field::cplx) return m + 1;
  if (m % 2 != 0) throw std::invalid_argument("max_mub_count: real field needs even m");
  return m / 2 + 1;
}

std::size_t ambient_design_dim(Field f, std::size_t m) {
  if (m < 2) throw std::invalid_argument("ambient_design_dim: m must be at least 2");
  if (f == Field::cplx) return m * m - 1;
  return (m + 2) * (m - 1) / 2;
}

BasisSet construct_mubs(Field f, std::size_t m) {
  BasisSet s;
  s.field = f;
  s.dim = m;
  s.exact = true;

  if (f == Field::real) {
    if (m != 4)
      throw UnsupportedConstruction(
          "real maximal MUBs are built in only for m = 4; import larger "
          "power-of-four sets via a basis-set file");
    static const int h1[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    static const int h2[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
    s.bases.push_back({ExactMatrix::identity(4), Scale::none});
    for (const auto& h : {h1, h2}) {
      ExactMatrix b(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) b.raw(i, j) = {h[i][j], 0};
      s.bases.push_back({b, Scale::inv_sqrt_dim});
    }
    return s;
  }

  if (!is_power_of_two(m) || m < 2)
    throw UnsupportedConstruction(
        "complex construction requires m = 2^r; import other prime-power "
        "dimensions via a basis-set file");
  int r = log2_exact(m);
  if (r > 8) throw UnsupportedConstruction("complex construction limited to m <= 256");

  // Galois-ring phase construction: besides the standard basis, one basis per
  // a in the Teichmueller set T, with vectors indexed by b in T and
  // components i^{Tr((a + 2b) x)} over x in T.
  GaloisRing ring(r);
  const auto& teich = ring.teichmuller();
  s.bases.push_back({ExactMatrix::identity(m), Scale::none});
  for (std::size_t ai = 0; ai < teich.size(); ++ai) {
    ExactMatrix basis(m, m);
    for (std::size_t bi = 0; bi < teich.size(); ++bi) {
      GaloisRing::Elem two_b(r, 0);
      for (int i = 0; i < r; ++i)
        two_b[i] = static_cast<std::uint8_t>((2 * teich[bi][i]) & 3);
      GaloisRing::Elem phase = ring.add(teich[ai], two_b);
      for (std::size_t xi = 0; xi < teich.size(); ++xi) {
        int t = ring.trace_z4(ring.mul(phase, teich[xi]));
        basis.raw(xi, bi) = i_power(t);
      }
    }
    s.bases.push_back({basis, Scale::inv_sqrt_dim});
  }
  return s;
}

Rational exact_inner_abs2(const BasisSet& s, std::size_t ka, std::size_t ja,
                          std::size_t kb, std::size_t jb) {
  if (!s.exact) throw std::logic_error("exact_inner_abs2: float-mode set");
  const Basis& a = s.bases.at(ka);
  const Basis& b = s.bases.at(kb);
  // columns scale as c / sqrt(m) per inv_sqrt_dim tag, so the squared modulus
  // carries one factor of m per scaled basis
  GaussInt v = column_inner(a.mat, ja, b.mat, jb);
  long long den = scale_factor(a, s.dim) * scale_factor(b, s.dim);
  return Rational(v.re * v.re + v.im * v.im, den);
}

UnbiasedReport verify_unbiased(const BasisSet& s, double tol) {
  UnbiasedReport rep;
  rep.basis_count = s.count();
  std::size_t m = s.dim;
  bool ok = true;

  if (s.exact) {
    for (const auto& b : s.bases)
      if (b.mat.rows() != m || b.mat.cols() != m)
        throw std::invalid_argument("verify_unbiased: dimension mismatch among bases");
    for (std::size_t k = 0; k < s.bases.size(); ++k) {
      long long sf = scale_factor(s.bases[k], m);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t j2 = j; j2 < m; ++j2) {
          GaussInt v = column_inner(s.bases[k].mat, j, s.bases[k].mat, j2);
          GaussInt want{j == j2 ? sf : 0, 0};
          if (!(v == want)) {
            ok = false;
            double dev = std::hypot(double(v.re - want.re), double(v.im - want.im)) / sf;
            rep.worst_gram_dev = std::max(rep.worst_gram_dev, dev);
          }
        }
    }
    Rational target(1, static_cast<long long>(m));
    for (std::size_t k = 0; k < s.bases.size(); ++k)
      for (std::size_t k2 = k + 1; k2 < s.bases.size(); ++k2)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t j2 = 0; j2 < m; ++j2) {
            ++rep.cross_pairs;
            Rational v = exact_inner_abs2(s, k, j, k2, j2);
            if (v != target) {
              ok = false;
              rep.worst_unbiased_dev =
                  std::max(rep.worst_unbiased_dev, std::abs((v - target).to_double()));
            }
          }
    rep.pass = ok;
    return rep;
  }

  for (const auto& b : s.fbases)
    if (b.rows() != m || b.cols() != m)
      throw std::invalid_argument("verify_unbiased: dimension mismatch among bases");
  for (const auto& b : s.fbases) {
    FloatMatrix g = b.adjoint() * b;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        double dev = std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0));
        rep.worst_gram_dev = std::max(rep.worst_gram_dev, dev);
      }
  }
  for (std::size_t k = 0; k < s.fbases.size(); ++k)
    for (std::size_t k2 = k + 1; k2 < s.fbases.size(); ++k2) {
      FloatMatrix g = s.fbases[k].adjoint() * s.fbases[k2];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          ++rep.cross_pairs;
          double dev = std::abs(std::norm(g.at(i, j)) - 1.0 / double(m));
          rep.worst_unbiased_dev = std::max(rep.worst_unbiased_dev, dev);
        }
    }
  rep.pass = rep.worst_gram_dev <= tol && rep.worst_unbiased_dev <= tol;
  return rep;
}

std::size_t dgs_span_check(const BasisSet& s, double tol) {
  std::size_t m = s.dim;
  std::size_t k = s.count();
  std::size_t n = k * m;
  if (s.exact) {
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Rational v = exact_inner_abs2(s, a / m, a % m, b / m, b % m);
        gram[a][b] = v;
        gram[b][a] = v;
      }
    return rational_rank(std::move(gram));
  }
  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::complex<double> ip = 0.0;
      for (std::size_t x = 0; x < m; ++x)
        ip += std::conj(s.fbases[a / m].at(x, a % m)) * s.fbases[b / m].at(x, b % m);
      gram[a][b] = gram[b][a] = std::norm(ip);
    }
  return float_rank(std::move(gram), std::max(tol, 1e-8));
}

LinesTwoDesignReport mub_lines_2design_check(const BasisSet& s, double tol) {
  LinesTwoDesignReport rep;
  std::size_t m = s.dim;
  std::size_t k = s.count();
  std::size_t n = k * m;
  long long d = static_cast<long long>(ambient_design_dim(s.field, m));
  std::size_t kf = max_mub_count(s.field, m);
  rep.closed_form_q =
      Rational(static_cast<long long>(kf + m - 1), static_cast<long long>(m * m * kf));
  rep.k2_q = Rational(d + static_cast<long long>((m - 1) * (m - 1)),
                      static_cast<long long>(m * m) * d);
  rep.closed_form = rep.closed_form_q.to_double();

  if (s.exact) {
    rep.exact = true;
    Rational sum(0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Rational v = exact_inner_abs2(s, a / m, a % m, b / m, b % m);
        sum += v * v;  // tr(P P')^2 = |<b,b'>|^4
      }
    rep.average_q = sum / Rational(static_cast<long long>(n) * static_cast<long long>(n));
    rep.average = rep.average_q.to_double();
    rep.equal = rep.average_q == rep.closed_form_q;
    rep.at_least = rep.average_q >= rep.closed_form_q;
    return rep;
  }

  rep.exact = false;
  double sum = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::complex<double> ip = 0.0;
      for (std::size_t x = 0; x < m; ++x)
        ip += std::conj(s.fbases[a / m].at(x, a % m)) * s.fbases[b / m].at(x, b % m);
      double t = std::norm(ip);
      sum += t * t;
    }
  rep.average = sum / (double(n) * double(n));
  rep.equal = std::abs(rep.average - rep.closed_form) <= tol;
  rep.at_least = rep.average >= rep.closed_form - tol;
  return rep;
}

}  // namespace moff
