// lieharm: structure, submersion and harmonic-morphism checks for real
// semisimple Lie algebras.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 unknown algebra or
// malformed input, 3 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieharm/error.hpp"
#include "lieharm/pipeline.hpp"
#include "lieharm/verify.hpp"

namespace {

enum Exit { kPass = 0, kFailedCheck = 1, kBadInput = 2, kNumerical = 3 };

std::vector<lieharm::AlgebraSpec> extra_catalog(const std::string& flag) {
  std::string path = flag;
  if (path.empty())
    if (const char* env = std::getenv("LIEHARM_CATALOG")) path = env;
  if (path.empty()) return {};
  return lieharm::load_catalog_file(path);
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw lieharm::Error(lieharm::ErrorCode::MalformedInput, "cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lieharm: harmonic submersions of symmetric spaces NA -> N^beta A^beta"};
  app.set_version_flag("--version", lieharm::tool_version());
  app.require_subcommand(1);

  std::string algebra, catalog, out, checks = "all", map = "phi", point;
  bool json = false, all_betas = false;
  std::size_t beta = 0;
  lieharm::VerifyOptions opts;

  auto common = [&](CLI::App* sub) {
    sub->add_option("algebra", algebra, "algebra id (sl2, sl3, sl4, su12, so13, so23, sp4, g2split, ...)")->required();
    sub->add_option("--catalog", catalog, "extra catalog JSON (falls back to $LIEHARM_CATALOG)");
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "print rank, roots, multiplicities and rank-one data");
  common(analyze);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--beta", beta, "simple-root index (0-based)");
  verify->add_flag("--all-betas", all_betas, "run every simple root");
  verify->add_option("--checks", checks, "all, structure, lemma1, submersion, morphism or functions");
  verify->add_option("--samples", opts.samples, "sample points per check")->check(CLI::PositiveNumber);
  verify->add_option("--step", opts.step, "finite-difference step");
  verify->add_option("--tol", opts.tol, "tolerance for finite-difference checks");
  verify->add_option("--seed", opts.seed, "sampling seed");
  verify->add_option("--out", out, "also write the JSON report here");

  auto* eval = app.add_subcommand("eval", "evaluate phi or a pulled-back function at a point of NA");
  common(eval);
  eval->add_option("--beta", beta, "simple-root index (0-based)");
  eval->add_option("--map", map, "phi or pullback:<t|t2|exp_half|eigen|phi>");
  eval->add_option("--point", point, R"(JSON point, e.g. {"X":[1],"H":[0]})")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kBadInput;
  }

  try {
    const auto spec = lieharm::resolve_algebra(algebra, extra_catalog(catalog));
    const auto structure = lieharm::analyze_algebra(spec);

    if (*analyze) {
      std::cout << (json ? lieharm::analysis_json(structure) : lieharm::analysis_text(structure));
      return kPass;
    }

    if (*verify) {
      opts.checks = checks;
      opts.all_betas = all_betas;
      opts.betas = {beta};
      lieharm::parse_suites(checks);
      const auto report = lieharm::run_verification(structure, opts);
      const std::string text = lieharm::to_json(report);
      if (!out.empty()) write_out(out, text);
      std::cout << (json ? text : lieharm::to_text(report));
      return report.pass() ? kPass : kFailedCheck;
    }

    const auto ctx = lieharm::build_beta_context(structure, beta);
    const auto p = lieharm::parse_point(structure.group, point);
    const auto value = lieharm::evaluate_map(structure, ctx, map, p);
    std::cout << lieharm::format_complex(value) << "\n";
    return kPass;
  } catch (const lieharm::Error& e) {
    std::cerr << "lieharm: " << e.what() << "\n";
    return lieharm::is_numerical(e.code()) ? kNumerical : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "lieharm: " << e.what() << "\n";
    return kNumerical;
  }
}
