// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1]: path to the command-line binary (used by the negative-control
// criterion to exercise process exit codes).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "moff/coherence.hpp"
#include "moff/designs.hpp"
#include "moff/fusion.hpp"
#include "moff/io.hpp"
#include "moff/mub.hpp"
#include "moff/oracle.hpp"

using namespace moff;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok) {
  std::cout << "criterion " << idx << " (" << name << "): " << (ok ? "pass" : "FAIL")
            << std::endl;
  if (!ok) ++failures;
}

FusionFrame standard_frame(Field field, std::size_t m, int r) {
  return assemble(construct_mubs(field, m), to_blocks(build_S(r)));
}

// 1. Recursive incidence matrices: shape, sums, Gram and outer identities,
//    exact integer arithmetic, r = 1..6.
bool criterion_incidence() {
  for (int r = 1; r <= 6; ++r) {
    IncidenceMatrix s = build_S(r);
    if (s.m != (std::size_t(1) << r)) return false;
    if (s.n != (std::size_t(1) << (r + 1)) - 2) return false;
    if (!check_sums(s, r).pass) return false;
    if (!gram_check(s, r).pass) return false;
    OuterReport outer = outer_identities_check(s, r);
    if (!outer.pass) return false;
  }
  return true;
}

// 2. Block designs by all three verification paths; single-block deletion
//    breaks the 2-design property.
bool criterion_designs() {
  for (int r = 2; r <= 6; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    long long m = 1LL << r;
    auto l1 = is_t_design(f, 1);
    if (!l1 || *l1 != m - 1) return false;
    auto l2 = is_t_design(f, 2);
    if (!l2 || *l2 != m / 2 - 1) return false;
    if (!block_sidelnikov_test(f, 1).equal) return false;
    SidelnikovResult s2 = block_sidelnikov_test(f, 2);
    if (!s2.equal) return false;
    long long l = m / 2;
    if (s2.rhs_q != Rational(l * l * (l * l - 2 * l + m), m * (m - 1))) return false;
    if (r <= 3) {
      TensorDesignResult td = tensor_design_check(f, 2);
      if (!td.is_design || td.lambda != *l2) return false;
    }
  }
  BlockFamily f = to_blocks(build_S(2));
  for (std::size_t k = 0; k < f.size(); ++k) {
    BlockFamily g = f;
    g.blocks.erase(g.blocks.begin() + k);
    if (is_t_design(g, 2)) return false;
  }
  return true;
}

// 3. Maximal mutually unbiased bases with exact verification.
bool criterion_mubs() {
  for (std::size_t m : {std::size_t(2), std::size_t(4), std::size_t(8), std::size_t(16)}) {
    BasisSet s = construct_mubs(Field::cplx, m);
    if (s.count() != m + 1) return false;
    UnbiasedReport rep = verify_unbiased(s);
    if (!rep.pass || rep.worst_unbiased_dev != 0.0 || rep.worst_gram_dev != 0.0) return false;
    std::size_t r = s.count();
    if (m <= 8 && dgs_span_check(s) != r * m - r + 1) return false;
    LinesTwoDesignReport lines = mub_lines_2design_check(s);
    if (!lines.equal) return false;
    if (m == 2 && lines.average_q != Rational(1, 3)) return false;
  }
  BasisSet sr = construct_mubs(Field::real, 4);
  if (sr.count() != 3) return false;
  if (!verify_unbiased(sr).pass) return false;
  if (dgs_span_check(sr) != 3 * 4 - 3 + 1) return false;
  return true;
}

// 4. Full certification of the assembled frames, exact, both fields.
bool criterion_certification() {
  struct Case {
    Field field;
    std::size_t m;
    int r;
    std::size_t n;
  };
  const std::vector<Case> cases = {{Field::cplx, 2, 1, 6},
                                   {Field::cplx, 4, 2, 30},
                                   {Field::cplx, 8, 3, 126},
                                   {Field::cplx, 16, 4, 510},
                                   {Field::real, 4, 2, 18}};
  for (const Case& c : cases) {
    FusionFrame ff = standard_frame(c.field, c.m, c.r);
    if (ff.size() != c.n) return false;
    if (c.n != 2 * ambient_design_dim(c.field, c.m)) return false;

    Certificate cert = rankin_certify(ff);
    long long d = static_cast<long long>(ambient_design_dim(c.field, c.m));
    if (!cert.is_tight || cert.tight_value != Rational(d)) return false;
    if (!cert.is_maximal_orthoplectic || !cert.half_dimension_ok) return false;

    CrossGramian g = cross_gramian(ff);
    // l^2/m with l = m/2
    Rational l2m(static_cast<long long>((c.m / 2) * (c.m / 2)), static_cast<long long>(c.m));
    std::vector<Rational> want = {Rational(0), l2m};
    if (g.distinct_offdiag_q != want) return false;

    // perfect orthogonal-partner matching
    std::set<long long> seen;
    for (std::size_t j = 0; j < cert.partner.size(); ++j) {
      long long p = cert.partner[j];
      if (p < 0 || cert.partner[std::size_t(p)] != static_cast<long long>(j)) return false;
      if (g.qat(j, std::size_t(p)) != Rational(0)) return false;
      seen.insert(p);
    }
    if (seen.size() != c.n) return false;

    Embedding e = embed(ff);
    if (!e.unit_norms || !e.sum_zero || !e.trace_relation_ok) return false;
    for (std::size_t i = 0; i < e.n; ++i)
      for (std::size_t j = 0; j < e.n; ++j) {
        if (i == j) continue;
        const Rational& v = e.inner_q[i * e.n + j];
        if (v != Rational(-1) && v != Rational(0)) return false;
      }

    for (std::size_t k = 0; k < construct_mubs(c.field, c.m).count(); ++k)
      if (coordinate_embedding_rank(sub_frame_for_basis(ff, k)) != c.m - 1) return false;

    SidelnikovResult sr = sidelnikov_test(ff);
    long long l = static_cast<long long>(c.m) / 2;
    long long mm = static_cast<long long>(c.m);
    Rational rhs = Rational(l * l * l * l, mm * mm) +
                   Rational(l * l * (mm - l) * (mm - l), d * mm * mm);
    if (!sr.equal || sr.lhs_q != rhs || sr.rhs_q != rhs) return false;
    if (c.field == Field::cplx && c.m == 4 && rhs != Rational(16, 15)) return false;
  }
  return true;
}

// 5. Coherence tensors: closed-form norm for every small case; Monte-Carlo
//    agreement at (l, m) = (1, 2).
bool criterion_coherence() {
  for (Field field : {Field::cplx, Field::real})
    for (std::size_t m = 2; m <= 8; ++m)
      for (std::size_t l = 1; l <= m; ++l) {
        ExactMatrix k = build_K2(l, m, field);
        if (hs_inner_real(k, k) != k2_norm_sq(l, m, field)) return false;
      }

  FloatMatrix est = haar_k2_estimate(1, 2, Field::cplx, 100000, 20260823);
  FloatMatrix ref = to_float(build_K2(1, 2, Field::cplx));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (std::abs(est.at(i, j) - ref.at(i, j)) > 5e-3) return false;
  double tr_est = hs_inner(est, est).real();
  if (std::abs(tr_est - k2_norm_sq(1, 2, Field::cplx).to_double()) > 1e-2) return false;
  return true;
}

// 6. Independent combinatorial search agrees with the constructions.
bool criterion_oracle() {
  CliqueResult a = max_cohesive_family(4, 2, 1);
  if (!a.complete || a.size != 6) return false;
  CliqueResult b = max_cohesive_family(8, 4, 2);
  if (!b.complete || b.size != 14) return false;
  if (a.size != to_blocks(build_S(2)).size()) return false;
  if (b.size != to_blocks(build_S(3)).size()) return false;
  for (int r = 2; r <= 4; ++r) {
    BlockFamily f = to_blocks(build_S(r));
    if (extendability_check(f, (f.l * f.l) / f.m)) return false;
  }
  return true;
}

// 7. Negative controls through the process boundary: random frames and a
//    mutilated genuine frame must be rejected with exit code 1.
bool criterion_negative_controls(const std::string& cli) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "moff_acceptance";
  fs::create_directories(dir);
  std::string frame_path = (dir / "frame.json").string();
  std::string quoted_cli = "'" + cli + "'";

  auto certify_expect_maximal = [&](const std::string& path) {
    std::string cmd = quoted_cli + " certify --frame '" + path +
                      "' --expect maximal-orthoplectic > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    FusionFrame ff = random_frame(4, 2, 30, seed);
    SidelnikovResult sr = sidelnikov_test(ff);
    if (sr.equal || !sr.at_least) return false;
    CrossGramian g = cross_gramian(ff);
    double max_cross = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j)
        if (i != j) max_cross = std::max(max_cross, g.at(i, j));
    if (!(max_cross > 1.0)) return false;

    // spot-check the process boundary on a handful of seeds (each CLI run
    // re-reads and re-certifies a 30-projection frame)
    if (seed <= 5) {
      save_json(frame_path, frame_to_json(ff));
      if (certify_expect_maximal(frame_path) != 1) return false;
    }
  }

  // a genuine frame passes, any single deletion fails
  FusionFrame good = standard_frame(Field::cplx, 4, 2);
  save_json(frame_path, frame_to_json(good));
  if (certify_expect_maximal(frame_path) != 0) return false;

  for (std::size_t k : {std::size_t(0), std::size_t(17), std::size_t(29)}) {
    FusionFrame cut = good;
    cut.projections.erase(cut.projections.begin() + k);
    cut.provenance.erase(cut.provenance.begin() + k);
    save_json(frame_path, frame_to_json(cut));
    if (certify_expect_maximal(frame_path) != 1) return false;
  }
  // in-library check that every deletion (not just the spot checks) fails
  for (std::size_t k = 0; k < good.size(); ++k) {
    FusionFrame cut = good;
    cut.projections.erase(cut.projections.begin() + k);
    cut.provenance.erase(cut.provenance.begin() + k);
    if (rankin_certify(cut).is_maximal_orthoplectic) return false;
  }
  return true;
}

// 8. The design/2-design equivalence, affirmed and refuted.
bool criterion_equivalence() {
  BlockFamily f = to_blocks(build_S(2));
  for (Field field : {Field::cplx, Field::real}) {
    EquivalenceReport rep = gdesign_bibd_equivalence(construct_mubs(field, 4), f);
    if (!rep.hypotheses_ok || !rep.frame_2design || !rep.blocks_bibd) return false;
    if (rep.lambda != 1 || !rep.biconditional_ok) return false;
  }

  // look for a non-design family of the same size and cohesiveness; at m = 4
  // every 1-cohesive 6-family of 2-subsets is the full set (a design), so the
  // hypotheses flag must fire on whatever differs
  BlockFamily nondesign = f;
  nondesign.blocks[5] = nondesign.blocks[4];  // duplicate one block
  if (is_t_design(nondesign, 2)) return false;
  if (cohesiveness(nondesign) > 2) return false;
  for (Field field : {Field::cplx, Field::real}) {
    EquivalenceReport rep = gdesign_bibd_equivalence(construct_mubs(field, 4), nondesign);
    if (rep.hypotheses_ok) {
      // consistent falsity: neither side may claim design status
      if (rep.frame_2design || rep.blocks_bibd || rep.biconditional_ok == false) return false;
    }
    // hypotheses flagged is the documented alternative; nothing further to check
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  if (cli.empty()) {
    std::cerr << "usage: acceptance <path-to-cli-binary>" << std::endl;
    return 2;
  }

  report(1, "recursive incidence identities", criterion_incidence());
  report(2, "block designs by three paths", criterion_designs());
  report(3, "maximal unbiased bases", criterion_mubs());
  report(4, "frame certification", criterion_certification());
  report(5, "coherence tensor cross-validation", criterion_coherence());
  report(6, "search oracle agreement", criterion_oracle());
  report(7, "negative controls", criterion_negative_controls(cli));
  report(8, "design equivalence theorem", criterion_equivalence());

  return failures == 0 ? 0 : 1;
}
