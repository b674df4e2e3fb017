// Command-line front end for the special affine curve toolkit.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 degenerate curve,
// 3 curves not equivalent.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affcurve/canonical.hpp"
#include "affcurve/errors.hpp"
#include "affcurve/invariants.hpp"
#include "affcurve/io.hpp"
#include "affcurve/reconstruction.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kDegenerate = 2;
constexpr int kNotEquivalent = 3;

struct Config {
  double tolerance = 1e-3;
  std::size_t samples = 400;
  double eps_det = 1e-9;
  std::uint64_t seed = 0;
};

void add_config_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--tol", cfg.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", cfg.samples, "arc-length grid length")
      ->check(CLI::Range(std::size_t{9}, std::size_t{1000000}));
  cmd->add_option("--eps-det", cfg.eps_det, "degeneracy threshold for det(c',c'',c''')");
}

std::size_t pipeline_samples(const Config& cfg, const affcurve::SampledCurve& curve) {
  return std::max(cfg.samples, curve.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special affine differential invariants of space curves"};
  app.require_subcommand(1);

  Config cfg;

  // signature
  std::string sig_input, sig_output;
  CLI::App* sig = app.add_subcommand("signature", "curvatures (chi1, chi2) against arc length");
  sig->add_option("input", sig_input, "curve CSV")->required();
  sig->add_option("--out", sig_output, "signature CSV")->required();
  add_config_flags(sig, cfg);

  // synthesize
  double chi1 = 0.0, chi2 = 0.0, sigma_max = 3.0;
  std::string synth_output;
  bool case_only = false;
  CLI::App* synth = app.add_subcommand("synthesize", "constant-curvature canonical curve");
  synth->add_option("--chi1", chi1, "first special affine curvature")->required();
  synth->add_option("--chi2", chi2, "second special affine curvature")->required();
  synth->add_option("--sigma-max", sigma_max, "arc-length extent")->check(CLI::PositiveNumber);
  synth->add_option("--out", synth_output, "curve CSV");
  synth->add_flag("--case", case_only, "print the case label and stop");
  add_config_flags(synth, cfg);

  // compare
  std::string cmp_a, cmp_b;
  CLI::App* cmp = app.add_subcommand("compare", "decide special affine equivalence");
  cmp->add_option("a", cmp_a, "curve CSV")->required();
  cmp->add_option("b", cmp_b, "curve CSV")->required();
  add_config_flags(cmp, cfg);

  // reconstruct
  std::string rec_input, rec_output;
  CLI::App* rec = app.add_subcommand("reconstruct", "curve from its natural equations");
  rec->add_option("input", rec_input, "signature CSV")->required();
  rec->add_option("--out", rec_output, "curve CSV")->required();
  add_config_flags(rec, cfg);

  // transform
  std::string tr_input, tr_output, tr_map_path;
  bool seeded = false;
  CLI::App* tr = app.add_subcommand("transform", "apply a special affine map to a curve");
  tr->add_option("input", tr_input, "curve CSV")->required();
  tr->add_option("--out", tr_output, "curve CSV")->required();
  CLI::Option* opt_map = tr->add_option("--map", tr_map_path, "map JSON file");
  CLI::Option* opt_seed = tr->add_option("--seed", cfg.seed, "draw a seeded random map");
  opt_map->excludes(opt_seed);
  add_config_flags(tr, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kIoError;
  }
  seeded = opt_seed->count() > 0;

  try {
    if (sig->parsed()) {
      auto curve = affcurve::read_curve_csv_file(sig_input);
      auto result = affcurve::signature(curve, pipeline_samples(cfg, curve), cfg.eps_det);
      affcurve::write_signature_csv_file(sig_output, result);
      return kOk;
    }

    if (synth->parsed()) {
      auto label = affcurve::classify_case(chi1, chi2);
      std::cout << affcurve::to_string(label) << '\n';
      if (!case_only) {
        if (synth_output.empty()) {
          std::cerr << "synthesize: --out is required unless --case is given\n";
          return kIoError;
        }
        auto curve = affcurve::generate_canonical(chi1, chi2, sigma_max, cfg.samples);
        affcurve::write_curve_csv_file(synth_output, curve);
      }
      return kOk;
    }

    if (cmp->parsed()) {
      auto a = affcurve::read_curve_csv_file(cmp_a);
      auto b = affcurve::read_curve_csv_file(cmp_b);
      auto report = affcurve::verify_equivalence(a, b, cfg.tolerance,
                                                 std::max(cfg.samples, std::max(a.size(), b.size())),
                                                 cfg.eps_det);
      std::cout << affcurve::report_to_json(report) << '\n';
      return report.equivalent ? kOk : kNotEquivalent;
    }

    if (rec->parsed()) {
      auto sig_data = affcurve::read_signature_csv_file(rec_input);
      auto eqs = affcurve::NaturalEquations::from_signature(sig_data);
      auto curve = affcurve::reconstruct_curve(eqs);
      affcurve::write_curve_csv_file(rec_output, curve);
      return kOk;
    }

    if (tr->parsed()) {
      auto curve = affcurve::read_curve_csv_file(tr_input);
      affcurve::SpecialAffineMap map;
      if (seeded) {
        map = affcurve::random_map(cfg.seed);
        std::cout << affcurve::map_to_json(map) << '\n';
      } else if (!tr_map_path.empty()) {
        map = affcurve::read_map_json_file(tr_map_path);
        double det = map.B.det();
        if (std::abs(det - 1.0) > 1e-6) {
          std::cerr << "transform: map is not unimodular (det = " << det << ")\n";
          return kIoError;
        }
      } else {
        std::cerr << "transform: provide --map or --seed\n";
        return kIoError;
      }
      affcurve::write_curve_csv_file(tr_output, affcurve::apply(map, curve));
      return kOk;
    }
  } catch (const affcurve::DegenerateCurve& e) {
    std::cerr << e.what() << '\n';
    return kDegenerate;
  } catch (const affcurve::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kIoError;
  } catch (const affcurve::Error& e) {
    std::cerr << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}
