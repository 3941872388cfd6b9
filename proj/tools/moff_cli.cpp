// moff: construct, assemble, certify and search maximal orthoplectic fusion
// frames. Exit codes: 0 all requested checks pass, 1 verification failed,
// 2 bad input or usage.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moff/coherence.hpp"
#include "moff/designs.hpp"
#include "moff/fusion.hpp"
#include "moff/io.hpp"
#include "moff/mub.hpp"
#include "moff/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int run_construct_design(int r, const std::string& out, const std::string& format) {
  moff::IncidenceMatrix s = moff::build_S(r);
  moff::BlockFamily f = moff::to_blocks(s);
  if (format == "csv") {
    moff::save_text(out, moff::incidence_to_csv(s));
  } else {
    moff::save_json(out, moff::design_to_json(f));
  }
  auto lambda = moff::is_t_design(f, 2);
  std::cout << "m=" << f.m << " l=" << f.l << " n=" << f.size()
            << " lambda=" << (lambda ? std::to_string(*lambda) : "none") << "\n";
  return kOk;
}

int run_construct_mubs(const std::string& field, std::size_t dim,
                       const std::string& import, const std::string& out) {
  moff::BasisSet s;
  if (!import.empty()) {
    s = moff::basis_set_from_json(moff::load_json(import));
  } else {
    try {
      s = moff::construct_mubs(moff::field_from_name(field), dim);
    } catch (const moff::UnsupportedConstruction& e) {
      std::cerr << "error: " << e.what()
                << "; supply an externally constructed basis set via --import FILE\n";
      return kUsage;
    }
  }
  moff::UnbiasedReport rep = moff::verify_unbiased(s);
  if (!rep.pass) {
    std::cerr << "error: basis set fails the unbiasedness/orthonormality checks\n";
    return kFail;
  }
  moff::save_json(out, moff::basis_set_to_json(s));
  std::cout << "bases=" << s.count() << "\n";
  return kOk;
}

int run_assemble(const std::string& mubs, const std::string& design, const std::string& out) {
  moff::BasisSet s = moff::basis_set_from_json(moff::load_json(mubs));
  moff::BlockFamily f = moff::design_from_json(moff::load_json(design));
  if (s.dim != f.m) {
    std::cerr << "error: basis dimension " << s.dim << " != design ground set " << f.m << "\n";
    return kUsage;
  }
  moff::FusionFrame ff = moff::assemble(s, f);
  moff::save_json(out, moff::frame_to_json(ff));
  std::cout << "projections=" << ff.size() << "\n";
  return kOk;
}

int run_certify(const std::string& frame_path, double tol,
                const std::vector<std::string>& expects, const std::string& out,
                const std::string& gramian_csv) {
  moff::FusionFrame ff = moff::frame_from_json(moff::load_json(frame_path));
  for (std::size_t k = 0; k < ff.size(); ++k) {
    moff::ProjectorCheck pc = ff.exact ? moff::verify_projector(ff.projections[k])
                                       : moff::verify_projector(ff.fprojections[k], tol);
    if (!pc.ok || pc.rank != ff.l) {
      std::cerr << "error: entry " << k << " is not a rank-" << ff.l
                << " orthogonal projection (" << pc.reason << ")\n";
      return kFail;
    }
  }

  moff::Certificate cert = moff::rankin_certify(ff, tol);
  if (!out.empty())
    moff::save_json(out, moff::certificate_to_json(cert, moff::file_digest(frame_path)));
  if (!gramian_csv.empty())
    moff::save_text(gramian_csv, moff::cross_gramian_to_csv(moff::cross_gramian(ff, tol)));

  bool ok = true;
  for (const std::string& e : expects) {
    bool got;
    if (e == "tight") got = cert.is_tight;
    else if (e == "maximal-orthoplectic") got = cert.is_maximal_orthoplectic;
    else if (e == "2-design") got = cert.sidelnikov_equal;
    else {
      std::cerr << "error: unknown expectation '" << e << "'\n";
      return kUsage;
    }
    std::cout << e << ": " << (got ? "pass" : "FAIL") << "\n";
    ok = ok && got;
  }
  std::cout << "tight=" << (cert.is_tight ? "yes" : "no")
            << " regime=" << (cert.regime == moff::Certificate::Regime::orthoplex
                                  ? "orthoplex" : "simplex")
            << " maximal-orthoplectic=" << (cert.is_maximal_orthoplectic ? "yes" : "no") << "\n";
  return ok ? kOk : kFail;
}

int run_oracle_max_cohesive(std::size_t m, std::size_t l, std::size_t c,
                            std::uint64_t budget, const std::string& out) {
  moff::SearchBudget b;
  if (budget) b.max_nodes = budget;
  moff::CliqueResult res = moff::max_cohesive_family(m, l, c, b);
  nlohmann::json j;
  j["format"] = moff::kFormatTag;
  j["kind"] = "search-report";
  j["search"] = "max-cohesive";
  j["m"] = m;
  j["l"] = l;
  j["c"] = c;
  j["result"] = res.size;
  j["nodes"] = res.nodes;
  j["complete"] = res.complete;
  j["witness"] = moff::design_to_json(res.witness)["blocks"];
  if (!out.empty()) moff::save_json(out, j);
  std::cout << "max=" << res.size << (res.complete ? "" : " (budget exhausted, lower bound only)")
            << "\n";
  return res.complete ? kOk : kFail;
}

int run_oracle_extend(const std::string& design, long long c, const std::string& out) {
  moff::BlockFamily f = moff::design_from_json(moff::load_json(design));
  std::size_t cval = c >= 0 ? std::size_t(c)
                            : std::size_t((f.l * f.l) / f.m);  // default floor(l^2/m)
  bool ext = moff::extendability_check(f, cval);
  nlohmann::json j;
  j["format"] = moff::kFormatTag;
  j["kind"] = "search-report";
  j["search"] = "extend";
  j["c"] = cval;
  j["extendable"] = ext;
  if (!out.empty()) moff::save_json(out, j);
  std::cout << "extendable=" << (ext ? "yes" : "no") << "\n";
  return kOk;
}

int run_oracle_design_count(const std::string& design, int t, const std::string& out) {
  moff::BlockFamily f = moff::design_from_json(moff::load_json(design));
  auto hist = moff::direct_design_count(f, t);
  nlohmann::json j;
  j["format"] = moff::kFormatTag;
  j["kind"] = "search-report";
  j["search"] = "design-count";
  j["t"] = t;
  nlohmann::json h = nlohmann::json::object();
  for (auto& [count, subsets] : hist) h[std::to_string(count)] = subsets;
  j["histogram"] = std::move(h);
  j["is_design"] = hist.size() == 1;
  if (!out.empty()) moff::save_json(out, j);
  for (auto& [count, subsets] : hist)
    std::cout << "count " << count << ": " << subsets << " subsets\n";
  return kOk;
}

int run_oracle_haar_k2(std::size_t m, std::size_t l, const std::string& field,
                       std::size_t samples, std::uint64_t seed, const std::string& out) {
  moff::Field f = moff::field_from_name(field);
  moff::FloatMatrix est = moff::haar_k2_estimate(l, m, f, samples, seed);
  moff::FloatMatrix ref = moff::to_float(moff::build_K2(l, m, f));
  double max_dev = 0.0;
  for (std::size_t i = 0; i < est.rows(); ++i)
    for (std::size_t jx = 0; jx < est.cols(); ++jx)
      max_dev = std::max(max_dev, std::abs(est.at(i, jx) - ref.at(i, jx)));
  double tr_dev = std::abs(moff::hs_inner(est, est).real() -
                           moff::k2_norm_sq(l, m, f).to_double());
  nlohmann::json j;
  j["format"] = moff::kFormatTag;
  j["kind"] = "search-report";
  j["search"] = "haar-k2";
  j["m"] = m;
  j["l"] = l;
  j["field"] = field;
  j["samples"] = samples;
  j["seed"] = seed;
  j["max_entry_deviation"] = max_dev;
  j["trace_sq_deviation"] = tr_dev;
  if (!out.empty()) moff::save_json(out, j);
  std::cout << "seed=" << seed << " max_entry_deviation=" << max_dev
            << " trace_sq_deviation=" << tr_dev << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal orthoplectic fusion frame toolkit"};
  app.require_subcommand(1);

  // construct-design
  auto* cd = app.add_subcommand("construct-design", "write the recursive block design");
  int cd_r = 0;
  std::string cd_out, cd_format = "json";
  cd->add_option("--r", cd_r, "recursion depth (>= 1)")->required();
  cd->add_option("--out", cd_out, "output file")->required();
  cd->add_option("--format", cd_format)->check(CLI::IsMember({"json", "csv"}));

  // construct-mubs
  auto* cm = app.add_subcommand("construct-mubs", "write a maximal set of mutually unbiased bases");
  std::string cm_field = "complex", cm_out, cm_import;
  std::size_t cm_dim = 0;
  cm->add_option("--field", cm_field)->check(CLI::IsMember({"real", "complex"}));
  cm->add_option("--dim", cm_dim, "ambient dimension");
  cm->add_option("--import", cm_import, "verify and re-emit an external basis-set file");
  cm->add_option("--out", cm_out)->required();

  // assemble
  auto* as = app.add_subcommand("assemble", "one projection per (basis, block) pair");
  std::string as_mubs, as_design, as_out;
  as->add_option("--mubs", as_mubs)->required();
  as->add_option("--design", as_design)->required();
  as->add_option("--out", as_out)->required();

  // certify
  auto* ce = app.add_subcommand("certify", "frame bounds, Rankin regime, design tests");
  std::string ce_frame, ce_out, ce_gramian;
  double ce_tol = 1e-10;
  std::vector<std::string> ce_expect;
  ce->add_option("--frame", ce_frame)->required();
  ce->add_option("--tol", ce_tol);
  ce->add_option("--expect", ce_expect, "maximal-orthoplectic | tight | 2-design");
  ce->add_option("--out", ce_out, "certificate file");
  ce->add_option("--gramian", ce_gramian, "cross-gramian CSV");

  // oracle
  auto* orc = app.add_subcommand("oracle", "independent combinatorial / statistical checks");
  orc->require_subcommand(1);
  std::size_t o_m = 0, o_l = 0, o_c = 0, o_samples = 100000;
  long long oe_c = -1;
  int o_t = 2;
  std::uint64_t o_budget = 0, o_seed = 0;
  bool o_has_seed = false;
  std::string o_out, o_design, o_field = "complex";

  auto* omc = orc->add_subcommand("max-cohesive", "exact maximum c-cohesive family size");
  omc->add_option("--m", o_m)->required();
  omc->add_option("--l", o_l)->required();
  omc->add_option("--c", o_c)->required();
  omc->add_option("--budget", o_budget, "node budget");
  omc->add_option("--out", o_out);

  auto* oex = orc->add_subcommand("extend", "can the family grow while staying c-cohesive?");
  oex->add_option("--design", o_design)->required();
  oex->add_option("--c", oe_c, "cohesion cap (default floor(l^2/m))");
  oex->add_option("--out", o_out);

  auto* odc = orc->add_subcommand("design-count", "containment histogram over t-subsets");
  odc->add_option("--design", o_design)->required();
  odc->add_option("--t", o_t);
  odc->add_option("--out", o_out);

  auto* ohk = orc->add_subcommand("haar-k2", "Monte-Carlo check of the 2-coherence tensor");
  ohk->add_option("--dim", o_m)->required();
  ohk->add_option("--l", o_l)->required();
  ohk->add_option("--field", o_field)->check(CLI::IsMember({"real", "complex"}));
  ohk->add_option("--samples", o_samples);
  auto* seed_opt = ohk->add_option("--seed", o_seed);
  ohk->add_option("--out", o_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cd) {
      if (cd_r < 1) {
        std::cerr << "error: --r must be >= 1\n";
        return kUsage;
      }
      return run_construct_design(cd_r, cd_out, cd_format);
    }
    if (*cm) {
      if (cm_import.empty() && cm_dim == 0) {
        std::cerr << "error: need --dim (or --import FILE)\n";
        return kUsage;
      }
      return run_construct_mubs(cm_field, cm_dim, cm_import, cm_out);
    }
    if (*as) return run_assemble(as_mubs, as_design, as_out);
    if (*ce) return run_certify(ce_frame, ce_tol, ce_expect, ce_out, ce_gramian);
    if (*orc) {
      if (*omc) return run_oracle_max_cohesive(o_m, o_l, o_c, o_budget, o_out);
      if (*oex) return run_oracle_extend(o_design, oe_c, o_out);
      if (*odc) return run_oracle_design_count(o_design, o_t, o_out);
      if (*ohk) {
        o_has_seed = seed_opt->count() > 0;
        if (!o_has_seed) {
          o_seed = std::random_device{}();
          std::cout << "generated seed=" << o_seed << "\n";
        }
        return run_oracle_haar_k2(o_m, o_l, o_field, o_samples, o_seed, o_out);
      }
    }
  } catch (const moff::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
