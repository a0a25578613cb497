// Command-line front end: closed-form bound tables, verification suites and
// spectrum curves as deterministic CSV/JSON. Exit codes: 0 success (all
// checks passed), 1 verification failure, 2 usage or input error.

#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsdim/bounds.hpp"
#include "qsdim/hyperbolic.hpp"
#include "qsdim/io.hpp"
#include "qsdim/motion.hpp"
#include "qsdim/numeric.hpp"
#include "qsdim/spectra.hpp"
#include "qsdim/thermo.hpp"

namespace {

using nlohmann::json;
using qsdim::format_number;
using qsdim::LinearGrid;
using Complex = std::complex<double>;

struct OutputOptions {
  std::string out_path;  // empty: stdout
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_path);
  f << text;
}

std::string render_table(const OutputOptions& opts,
                         const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
  std::ostringstream ss;
  if (opts.format == "json") {
    json j;
    j["columns"] = header;
    json jrows = json::array();
    for (const auto& row : rows) {
      json jr = json::array();
      for (double v : row) jr.push_back(format_number(v));
      jrows.push_back(jr);
    }
    j["rows"] = jrows;
    ss << j.dump(2) << '\n';
  } else {
    qsdim::io::write_table_csv(ss, header, rows);
  }
  return ss.str();
}

std::string render_curve(const OutputOptions& opts,
                         const qsdim::spectra::SpectrumCurve& curve,
                         const std::string& x_name, const std::string& y_name,
                         bool conjectural = false) {
  std::ostringstream ss;
  if (opts.format == "json") {
    json j;
    if (conjectural) j["conjectural"] = true;
    j["columns"] = {x_name, y_name};
    json jrows = json::array();
    for (const auto& p : curve.points)
      jrows.push_back({format_number(p.x), format_number(p.y)});
    j["rows"] = jrows;
    ss << j.dump(2) << '\n';
  } else {
    qsdim::io::write_curve_csv(ss, curve, x_name, y_name, conjectural);
  }
  return ss.str();
}

int emit_report(const OutputOptions& opts, const json& report, bool pass) {
  std::ostringstream ss;
  ss << report.dump(2) << '\n';
  emit(opts, ss.str());
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- bounds ---

struct BoundsArgs {
  double delta = 0.0, k = 0.0, K = 1.0, t = 0.0, beta = 0.0, dim = 1.0;
  int grid = 0;
  OutputOptions out;
};

std::vector<double> delta_grid_or_point(const BoundsArgs& a, bool has_delta) {
  if (a.grid > 0) return LinearGrid{0.0, 1.0, a.grid}.points();
  if (!has_delta)
    throw std::invalid_argument("either --delta or --grid is required");
  return {a.delta};
}

// ---------------------------------------------------------------- verify ---

json phi_report_json(const qsdim::motion::PhiReport& r) {
  json j;
  j["delta"] = r.delta;
  j["a"] = r.a;
  j["max_abs_phi"] = r.max_abs_phi;
  j["symmetry_defect"] = r.symmetry_defect;
  j["real_imag_defect"] = r.real_imag_defect;
  j["real_min"] = r.real_min;
  j["phi0_excess"] = r.phi0_excess;
  j["lemma_defect"] = r.lemma_defect;
  j["violations"] = r.violations;
  j["pass"] = r.pass;
  return j;
}

// ------------------------------------------------------------------ main ---

int run(int argc, char** argv) {
  CLI::App app{"quasisymmetric dimension-distortion toolkit"};
  app.require_subcommand(1);

  // ---- bounds ----
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound tables");
  bounds_cmd->require_subcommand(1);
  auto bargs = std::make_shared<BoundsArgs>();

  auto* dist = bounds_cmd->add_subcommand(
      "dist", "compression/expansion bounds D and D*");
  auto* dist_delta = dist->add_option("--delta", bargs->delta, "dimension in [0,1]");
  dist->add_option("--k", bargs->k, "dilatation k")->required();
  dist->add_option("--grid", bargs->grid, "sweep delta over [0,1] with N points");
  add_output_flags(dist, bargs->out);
  dist->callback([bargs, dist_delta] {
    std::vector<std::vector<double>> rows;
    for (double d : delta_grid_or_point(*bargs, dist_delta->count() > 0))
      rows.push_back({d, bargs->k, qsdim::bounds::compress_bound(d, bargs->k),
                      qsdim::bounds::expand_bound(d, bargs->k)});
    emit(bargs->out,
         render_table(bargs->out, {"delta", "k", "compress", "expand"}, rows));
  });

  auto* expand = bounds_cmd->add_subcommand("expand", "expansion bound D*");
  auto* expand_delta = expand->add_option("--delta", bargs->delta, "dimension in [0,1]");
  expand->add_option("--k", bargs->k, "dilatation k")->required();
  expand->add_option("--grid", bargs->grid, "sweep delta over [0,1]");
  add_output_flags(expand, bargs->out);
  expand->callback([bargs, expand_delta] {
    std::vector<std::vector<double>> rows;
    for (double d : delta_grid_or_point(*bargs, expand_delta->count() > 0))
      rows.push_back({d, bargs->k, qsdim::bounds::expand_bound(d, bargs->k)});
    emit(bargs->out, render_table(bargs->out, {"delta", "k", "expand"}, rows));
  });

  auto* antisym = bounds_cmd->add_subcommand(
      "antisym", "expansion bound for antisymmetric maps");
  auto* antisym_delta = antisym->add_option("--delta", bargs->delta, "dimension in [0,1]");
  antisym->add_option("--k", bargs->k, "dilatation k")->required();
  antisym->add_option("--grid", bargs->grid, "sweep delta over [0,1]");
  add_output_flags(antisym, bargs->out);
  antisym->callback([bargs, antisym_delta] {
    std::vector<std::vector<double>> rows;
    for (double d : delta_grid_or_point(*bargs, antisym_delta->count() > 0))
      rows.push_back({d, bargs->k, qsdim::bounds::antisym_expand(d, bargs->k)});
    emit(bargs->out, render_table(bargs->out, {"delta", "k", "antisym"}, rows));
  });

  auto* conformal = bounds_cmd->add_subcommand(
      "conformal", "expansion/contraction bounds for maps conformal in a half-plane");
  auto* conformal_delta = conformal->add_option("--delta", bargs->delta, "dimension in [0,1]");
  conformal->add_option("--k", bargs->k, "dilatation k")->required();
  conformal->add_option("--grid", bargs->grid, "sweep delta over [0,1]");
  add_output_flags(conformal, bargs->out);
  conformal->callback([bargs, conformal_delta] {
    std::vector<std::vector<double>> rows;
    for (double d : delta_grid_or_point(*bargs, conformal_delta->count() > 0))
      rows.push_back({d, bargs->k,
                      qsdim::bounds::conformal_expand_bound(d, bargs->k),
                      qsdim::bounds::conformal_contract_bound(d, bargs->k)});
    emit(bargs->out,
         render_table(bargs->out, {"delta", "k", "conformal_expand",
                                   "conformal_contract"}, rows));
  });

  auto* makarov = bounds_cmd->add_subcommand(
      "makarov", "dimension lower bound from the integral means spectrum");
  makarov->add_option("--dim", bargs->dim, "dim E in (0,1]")->required();
  makarov->add_option("--t", bargs->t, "negative exponent t")->required();
  makarov->add_option("--beta", bargs->beta, "beta(t)")->required();
  add_output_flags(makarov, bargs->out);
  makarov->callback([bargs] {
    emit(bargs->out,
         render_table(bargs->out, {"dim", "t", "beta", "lower"},
                      {{bargs->dim, bargs->t, bargs->beta,
                        qsdim::bounds::makarov_dim_lower(bargs->dim, bargs->t,
                                                         bargs->beta)}}));
  });

  auto* lp = bounds_cmd->add_subcommand("lp", "integrability exponent bound");
  lp->add_option("--K", bargs->K, "maximal dilatation K >= 1")->required();
  add_output_flags(lp, bargs->out);
  lp->callback([bargs] {
    const auto p = qsdim::bounds::lp_exponent_bound(bargs->K);
    const double v = p ? *p : std::numeric_limits<double>::infinity();
    emit(bargs->out, render_table(bargs->out, {"K", "p_sup"}, {{bargs->K, v}}));
  });

  auto* convert = bounds_cmd->add_subcommand("convert", "dilatation conversion");
  auto* conv_k = convert->add_option("--k", bargs->k, "small dilatation k in [0,1)");
  auto* conv_K = convert->add_option("--K", bargs->K, "maximal dilatation K >= 1");
  add_output_flags(convert, bargs->out);
  convert->callback([bargs, conv_k, conv_K] {
    if ((conv_k->count() > 0) == (conv_K->count() > 0))
      throw std::invalid_argument("convert: give exactly one of --k, --K");
    if (conv_k->count() > 0)
      emit(bargs->out, render_table(bargs->out, {"K"},
                                    {{qsdim::bounds::k_to_K(bargs->k)}}));
    else
      emit(bargs->out, render_table(bargs->out, {"k"},
                                    {{qsdim::bounds::K_to_k(bargs->K)}}));
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
  verify_cmd->require_subcommand(1);

  struct VerifyArgs {
    long samples = 10000;
    std::uint64_t seed = 42;
    std::string packing_path;
    double rho = 0.9;
    double k = 0.0;
    std::optional<double> delta;
    std::optional<double> a;
    int steps = 32;
    int boundary_samples = 1 << 10;
    OutputOptions out;
  };
  auto vargs = std::make_shared<VerifyArgs>();
  auto exit_code = std::make_shared<int>(0);

  auto* blaschke = verify_cmd->add_subcommand(
      "blaschke", "extremal inequality h(k) <= B_{-l}(k) over random test maps");
  blaschke->add_option("--samples", vargs->samples, "sample count");
  blaschke->add_option("--seed", vargs->seed, "rng seed");
  add_output_flags(blaschke, vargs->out);
  blaschke->callback([vargs, exit_code] {
    const auto rep = qsdim::hyperbolic::verify_blaschke_lemma(vargs->samples,
                                                              vargs->seed);
    json j;
    j["command"] = "verify blaschke";
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["violations"] = rep.violations;
    j["worst_margin"] = rep.worst_margin;
    *exit_code = emit_report(vargs->out, j, rep.violations == 0);
  });

  auto* threepoint = verify_cmd->add_subcommand(
      "threepoint", "three-point distance inequality over random test maps");
  threepoint->add_option("--samples", vargs->samples, "sample count");
  threepoint->add_option("--seed", vargs->seed, "rng seed");
  add_output_flags(threepoint, vargs->out);
  threepoint->callback([vargs, exit_code] {
    qsdim::Rng rng(vargs->seed);
    long violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < vargs->samples; ++i) {
      const auto h = qsdim::hyperbolic::random_test_function(rng);
      Complex z, w, v;
      do {
        z = qsdim::hyperbolic::sample_disk_point(rng);
        w = qsdim::hyperbolic::sample_disk_point(rng);
        v = qsdim::hyperbolic::sample_disk_point(rng);
      } while (std::abs(z - v) < 1e-3 || std::abs(w - v) < 1e-3 ||
               std::abs(z - w) < 1e-3);
      const auto rep = qsdim::hyperbolic::three_point_check(
          h, qsdim::hyperbolic::DiskPoint(z), qsdim::hyperbolic::DiskPoint(w),
          qsdim::hyperbolic::DiskPoint(v));
      worst = std::max(worst, rep.lhs - rep.rhs);
      if (!rep.ok) ++violations;
    }
    json j;
    j["command"] = "verify threepoint";
    j["samples"] = vargs->samples;
    j["seed"] = vargs->seed;
    j["violations"] = violations;
    j["worst_margin"] = worst;
    *exit_code = emit_report(vargs->out, j, violations == 0);
  });

  auto* phi = verify_cmd->add_subcommand(
      "phi", "structural properties of Phi over the restricted motion");
  phi->add_option("--packing", vargs->packing_path, "packing JSON")->required();
  phi->add_option("--rho", vargs->rho, "restriction radius in (0,1)");
  phi->add_option("--delta", vargs->delta,
                  "exponent; default: dimension of the rescaled radii");
  phi->add_option("--a", vargs->a,
                  "rescaling constant; default: 1/C^2 with empirical C");
  phi->add_option("--samples", vargs->samples, "samples for the empirical C");
  phi->add_option("--seed", vargs->seed, "rng seed");
  phi->add_option("--steps", vargs->steps, "branch continuation substeps");
  add_output_flags(phi, vargs->out);
  phi->callback([vargs, exit_code] {
    const auto pf = qsdim::io::load_packing(vargs->packing_path);
    qsdim::motion::MotionConfig cfg{vargs->rho, 1.0, vargs->steps};
    double a;
    if (vargs->a) {
      a = *vargs->a;
    } else {
      const double C =
          qsdim::motion::qs_constant(pf.family, cfg, vargs->samples, vargs->seed);
      a = 1.0 / (C * C);
    }
    cfg.a = a;
    const double delta =
        vargs->delta
            ? *vargs->delta
            : std::min(1.0, qsdim::motion::rescaled_bowen_dimension(pf.packing, a));
    const auto rep =
        qsdim::motion::verify_phi_properties(pf.packing, pf.family, delta, cfg);
    json j = phi_report_json(rep);
    j["command"] = "verify phi";
    j["rho"] = vargs->rho;
    j["seed"] = vargs->seed;
    j["samples"] = vargs->samples;
    *exit_code = emit_report(vargs->out, j, rep.pass);
  });

  auto* packing = verify_cmd->add_subcommand(
      "packing", "packing-level distortion implication at real lambda = k");
  packing->add_option("--packing", vargs->packing_path, "packing JSON")->required();
  packing->add_option("--k", vargs->k, "dilatation k in [0, rho)")->required();
  packing->add_option("--delta", vargs->delta, "exponent in [0,1]")->required();
  packing->add_option("--rho", vargs->rho, "restriction radius in (0,1)");
  packing->add_option("--a", vargs->a,
                      "rescaling constant; default: 1/C^2 with empirical C");
  packing->add_option("--samples", vargs->samples, "samples for the empirical C");
  packing->add_option("--seed", vargs->seed, "rng seed");
  packing->add_option("--boundary-samples", vargs->boundary_samples,
                      "boundary samples per disk");
  add_output_flags(packing, vargs->out);
  packing->callback([vargs, exit_code] {
    const auto pf = qsdim::io::load_packing(vargs->packing_path);
    qsdim::motion::MotionConfig cfg{vargs->rho, 1.0, vargs->steps};
    if (vargs->a) {
      cfg.a = *vargs->a;
    } else {
      const double C =
          qsdim::motion::qs_constant(pf.family, cfg, vargs->samples, vargs->seed);
      cfg.a = 1.0 / (C * C);
    }
    const auto rep = qsdim::motion::verify_packing_implication(
        pf.packing, pf.family, vargs->k, *vargs->delta, cfg,
        vargs->boundary_samples);
    json j;
    j["command"] = "verify packing";
    j["a"] = rep.a;
    j["delta"] = rep.delta;
    j["k"] = vargs->k;
    j["rho"] = vargs->rho;
    j["exponent"] = rep.exponent;
    j["hypothesis_sum"] = rep.hypothesis_sum;
    j["conclusion_sum"] = rep.conclusion_sum;
    j["boundary_samples"] = rep.boundary_samples_used;
    j["status"] = !rep.hypothesis_met ? "hypothesis_not_met"
                  : rep.pass          ? "pass"
                                      : "fail";
    j["pass"] = rep.pass;
    *exit_code = emit_report(vargs->out, j, rep.pass);
  });

  // ---- spectra ----
  auto* spectra_cmd = app.add_subcommand("spectra", "multifractal spectrum curves");
  spectra_cmd->require_subcommand(1);

  struct SpectraArgs {
    double K = 2.0, k = 0.5, alpha = 1.0, t = 0.0, q = 0.0;
    double tmin = 0.0, tmax = 0.0, qmin = -10.0, qmax = 10.0;
    double alpha_min = 0.2, alpha_max = 2.2;
    int grid = 0;
    int r_exp = 20;
    double eps = 0.05;
    std::string measure_path, in_path, direction = "f_to_beta", map = "identity";
    double angle = 0.7;
    int j0 = 6, j1 = 14, nodes = 1 << 12;
    OutputOptions out;
  };
  auto sargs = std::make_shared<SpectraArgs>();

  auto* fbound = spectra_cmd->add_subcommand("f-bound", "disjoint-disk spectrum bound");
  fbound->add_option("--K", sargs->K, "maximal dilatation")->required();
  auto* fb_alpha = fbound->add_option("--alpha", sargs->alpha, "point evaluation");
  fbound->add_option("--grid", sargs->grid, "N points over [1/K, K]");
  add_output_flags(fbound, sargs->out);
  fbound->callback([sargs, fb_alpha] {
    qsdim::spectra::SpectrumCurve curve;
    curve.kind = qsdim::spectra::CurveKind::f_of_alpha;
    if (sargs->grid > 0) {
      for (double a :
           LinearGrid{1.0 / sargs->K, sargs->K, sargs->grid}.points())
        curve.points.push_back({a, qsdim::spectra::f_bound(a, sargs->K)});
    } else if (fb_alpha->count() > 0) {
      curve.points.push_back(
          {sargs->alpha, qsdim::spectra::f_bound(sargs->alpha, sargs->K)});
    } else {
      throw std::invalid_argument("f-bound: give --alpha or --grid");
    }
    emit(sargs->out, render_curve(sargs->out, curve, "alpha", "f"));
  });

  auto* bbound = spectra_cmd->add_subcommand("beta-bound", "integral-means spectrum bound");
  bbound->add_option("--K", sargs->K, "maximal dilatation")->required();
  auto* bb_t = bbound->add_option("--t", sargs->t, "point evaluation");
  bbound->add_option("--grid", sargs->grid, "N points over [tmin, tmax]");
  auto* bb_tmin = bbound->add_option("--tmin", sargs->tmin, "grid start");
  auto* bb_tmax = bbound->add_option("--tmax", sargs->tmax, "grid end");
  add_output_flags(bbound, sargs->out);
  bbound->callback([sargs, bb_t, bb_tmin, bb_tmax] {
    qsdim::spectra::SpectrumCurve curve;
    curve.kind = qsdim::spectra::CurveKind::beta_of_t;
    if (sargs->grid > 0) {
      double lo = bb_tmin->count() ? sargs->tmin
                  : sargs->K > 1.0 ? -2.0 / (sargs->K - 1.0) - 2.0
                                   : -4.0;
      double hi = bb_tmax->count() ? sargs->tmax
                  : sargs->K > 1.0 ? 2.0 * sargs->K / (sargs->K - 1.0) + 2.0
                                   : 4.0;
      for (double t : LinearGrid{lo, hi, sargs->grid}.points())
        curve.points.push_back({t, qsdim::spectra::beta_bound(t, sargs->K)});
    } else if (bb_t->count() > 0) {
      curve.points.push_back(
          {sargs->t, qsdim::spectra::beta_bound(sargs->t, sargs->K)});
    } else {
      throw std::invalid_argument("beta-bound: give --t or --grid");
    }
    emit(sargs->out, render_curve(sargs->out, curve, "t", "beta"));
  });

  auto* qdisk = spectra_cmd->add_subcommand("quasidisk", "quasidisk spectrum bound");
  qdisk->add_option("--k", sargs->k, "small dilatation in (0,1)")->required();
  auto* qd_t = qdisk->add_option("--t", sargs->t, "point evaluation");
  qdisk->add_option("--grid", sargs->grid, "N points over the bounded range");
  add_output_flags(qdisk, sargs->out);
  qdisk->callback([sargs, qd_t] {
    qsdim::spectra::SpectrumCurve curve;
    curve.kind = qsdim::spectra::CurveKind::beta_of_t;
    const double k2 = sargs->k * sargs->k;
    if (sargs->grid > 0) {
      for (double t : LinearGrid{1.0 + k2, (1.0 + k2) / sargs->k + 2.0,
                                 sargs->grid}
                          .points())
        curve.points.push_back(
            {t, qsdim::spectra::quasidisk_beta_bound(t, sargs->k)});
    } else if (qd_t->count() > 0) {
      curve.points.push_back(
          {sargs->t, qsdim::spectra::quasidisk_beta_bound(sargs->t, sargs->k)});
    } else {
      throw std::invalid_argument("quasidisk: give --t or --grid");
    }
    emit(sargs->out, render_curve(sargs->out, curve, "t", "beta"));
  });

  auto* conj = spectra_cmd->add_subcommand("conjectured", "conjectural lower bound");
  conj->add_option("--k", sargs->k, "small dilatation in (0,1)")->required();
  auto* cj_t = conj->add_option("--t", sargs->t, "point evaluation");
  conj->add_option("--grid", sargs->grid, "N points over [-2/k, 2/k]");
  add_output_flags(conj, sargs->out);
  conj->callback([sargs, cj_t] {
    qsdim::spectra::SpectrumCurve curve;
    curve.kind = qsdim::spectra::CurveKind::beta_of_t;
    if (sargs->grid > 0) {
      for (double t :
           LinearGrid{-2.0 / sargs->k, 2.0 / sargs->k, sargs->grid}.points())
        curve.points.push_back(
            {t, qsdim::spectra::conjectured_beta_lower(t, sargs->k)});
    } else if (cj_t->count() > 0) {
      curve.points.push_back(
          {sargs->t, qsdim::spectra::conjectured_beta_lower(sargs->t, sargs->k)});
    } else {
      throw std::invalid_argument("conjectured: give --t or --grid");
    }
    emit(sargs->out, render_curve(sargs->out, curve, "t", "beta", true));
  });

  auto* tau = spectra_cmd->add_subcommand("tau", "moment exponent of a self-similar measure");
  tau->add_option("--measure", sargs->measure_path, "measure JSON")->required();
  auto* tau_q = tau->add_option("--q", sargs->q, "point evaluation");
  tau->add_option("--grid", sargs->grid, "N points over [qmin, qmax]");
  tau->add_option("--qmin", sargs->qmin, "grid start");
  tau->add_option("--qmax", sargs->qmax, "grid end");
  add_output_flags(tau, sargs->out);
  tau->callback([sargs, tau_q] {
    const auto m = qsdim::io::load_measure(sargs->measure_path);
    qsdim::spectra::SpectrumCurve curve;
    curve.kind = qsdim::spectra::CurveKind::tau_of_q;
    if (sargs->grid > 0) {
      for (double q : LinearGrid{sargs->qmin, sargs->qmax, sargs->grid}.points())
        curve.points.push_back({q, qsdim::spectra::tau_exponent(m, q)});
    } else if (tau_q->count() > 0) {
      curve.points.push_back(
          {sargs->q, qsdim::spectra::tau_exponent(m, sargs->q)});
    } else {
      throw std::invalid_argument("tau: give --q or --grid");
    }
    emit(sargs->out, render_curve(sargs->out, curve, "q", "tau"));
  });

  auto* fest = spectra_cmd->add_subcommand("f-est", "box-counting spectrum estimate");
  fest->add_option("--measure", sargs->measure_path, "measure JSON")->required();
  fest->add_option("--r-exp", sargs->r_exp, "scale r = 2^{-r_exp}");
  fest->add_option("--eps", sargs->eps, "mass-exponent window");
  fest->add_option("--grid", sargs->grid, "alpha grid points");
  fest->add_option("--alpha-min", sargs->alpha_min, "grid start");
  fest->add_option("--alpha-max", sargs->alpha_max, "grid end");
  add_output_flags(fest, sargs->out);
  fest->callback([sargs] {
    const auto m = qsdim::io::load_measure(sargs->measure_path);
    const int n = sargs->grid > 0 ? sargs->grid : 81;
    const auto curve = qsdim::spectra::box_f_estimate(
        m, std::pow(2.0, -sargs->r_exp), sargs->eps,
        LinearGrid{sargs->alpha_min, sargs->alpha_max, n});
    emit(sargs->out, render_curve(sargs->out, curve, "alpha", "f"));
  });

  auto* best = spectra_cmd->add_subcommand("beta-est", "integral-means exponent estimate");
  best->add_option("--map", sargs->map, "identity, rotation or stretch")
      ->check(CLI::IsMember({"identity", "rotation", "stretch"}));
  best->add_option("--angle", sargs->angle, "rotation angle");
  best->add_option("--k", sargs->k, "stretch dilatation");
  best->add_option("--t", sargs->t, "exponent t")->required();
  best->add_option("--j0", sargs->j0, "first radius index (r = 1 - 2^{-j})");
  best->add_option("--j1", sargs->j1, "last radius index");
  best->add_option("--nodes", sargs->nodes, "initial quadrature nodes");
  add_output_flags(best, sargs->out);
  best->callback([sargs] {
    std::function<Complex(Complex)> map;
    if (sargs->map == "identity") {
      map = [](Complex z) { return z; };
    } else if (sargs->map == "rotation") {
      const Complex rot(std::cos(sargs->angle), std::sin(sargs->angle));
      map = [rot](Complex z) { return rot * z; };
    } else {
      map = qsdim::motion::cayley_stretch(sargs->k);
    }
    const auto est = qsdim::spectra::beta_estimate(
        map, sargs->t, {sargs->j0, sargs->j1}, sargs->nodes);
    if (sargs->out.format == "json") {
      json j;
      j["t"] = sargs->t;
      j["beta"] = est.beta;
      j["j_lo"] = est.j_lo;
      j["j_hi"] = est.j_hi;
      j["residual"] = est.residual;
      std::ostringstream ss;
      ss << j.dump(2) << '\n';
      emit(sargs->out, ss.str());
    } else {
      emit(sargs->out, render_table(sargs->out, {"t", "beta"},
                                    {{sargs->t, est.beta}}));
    }
  });

  auto* legendre = spectra_cmd->add_subcommand("legendre", "discrete Legendre transform");
  legendre->add_option("--in", sargs->in_path, "input curve CSV")->required();
  legendre->add_option("--direction", sargs->direction, "f_to_beta or beta_to_f")
      ->check(CLI::IsMember({"f_to_beta", "beta_to_f"}));
  legendre->add_option("--grid", sargs->grid, "dual grid points");
  auto* lg_tmin = legendre->add_option("--tmin", sargs->tmin, "dual grid start");
  auto* lg_tmax = legendre->add_option("--tmax", sargs->tmax, "dual grid end");
  add_output_flags(legendre, sargs->out);
  legendre->callback([sargs, lg_tmin, lg_tmax] {
    std::ifstream in(sargs->in_path);
    if (!in)
      throw std::invalid_argument("cannot open input file: " + sargs->in_path);
    qsdim::spectra::SpectrumCurve curve;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string xs, ys;
      if (!std::getline(ls, xs, ',') || !std::getline(ls, ys)) continue;
      try {
        const double x = std::stod(xs);
        const double y = ys == "-inf"
                             ? -std::numeric_limits<double>::infinity()
                             : std::stod(ys);
        curve.points.push_back({x, y});
      } catch (const std::exception&) {
        // header row
      }
    }
    const auto dir = sargs->direction == "f_to_beta"
                         ? qsdim::spectra::LegendreDirection::f_to_beta
                         : qsdim::spectra::LegendreDirection::beta_to_f;
    std::optional<LinearGrid> dual;
    if (lg_tmin->count() && lg_tmax->count())
      dual = LinearGrid{sargs->tmin, sargs->tmax,
                        sargs->grid > 0 ? sargs->grid
                                        : static_cast<int>(curve.points.size())};
    const auto out = qsdim::spectra::legendre_transform(curve, dir, dual);
    const bool to_beta = dir == qsdim::spectra::LegendreDirection::f_to_beta;
    emit(sargs->out, render_curve(sargs->out, out, to_beta ? "t" : "alpha",
                                  to_beta ? "beta" : "f"));
  });

  // ---- bowen ----
  auto* bowen_cmd = app.add_subcommand("bowen", "dimension of a packing's ratio system");
  struct BowenArgs {
    std::string packing_path;
    double a = 1.0;
    OutputOptions out;
  };
  auto bwargs = std::make_shared<BowenArgs>();
  bowen_cmd->add_option("--packing", bwargs->packing_path, "packing JSON")->required();
  bowen_cmd->add_option("--a", bwargs->a, "radius rescaling");
  add_output_flags(bowen_cmd, bwargs->out);
  bowen_cmd->callback([bwargs] {
    const auto pf = qsdim::io::load_packing(bwargs->packing_path);
    std::vector<double> m = pf.packing.radii();
    for (double& r : m) r *= bwargs->a;
    emit(bwargs->out,
         format_number(qsdim::thermo::bowen_dimension(m)) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return *exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
