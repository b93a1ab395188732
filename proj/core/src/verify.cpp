#include "lieharm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "lieharm/error.hpp"

#ifndef LIEHARM_VERSION
#define LIEHARM_VERSION "0.0.0"
#endif

namespace lieharm {
namespace {

using json = nlohmann::ordered_json;

constexpr double kExact = 1e-10;

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::string coeff_label(const std::vector<int>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  CheckResult& below(std::string name, std::optional<std::size_t> beta, double residual, double tol) {
    out_.push_back({std::move(name), beta, residual < tol, residual, tol, {}, {}});
    return out_.back();
  }
  CheckResult& flag(std::string name, std::optional<std::size_t> beta, bool ok, double residual, double tol) {
    out_.push_back({std::move(name), beta, ok, residual, tol, {}, {}});
    return out_.back();
  }

 private:
  std::vector<CheckResult>& out_;
};

// salts keep every check's sample stream independent of the others
enum Stream : std::uint64_t { kCurvature = 1, kMorphism, kIntertwining, kRadial, kEigen, kRHarmonic };

std::vector<GroupPoint> points_for(const AlgebraStructure& s, const VerifyOptions& o, std::size_t beta,
                                   Stream stream, std::size_t cap = 0) {
  const std::size_t n = cap ? std::min(o.samples, cap) : o.samples;
  return sample_points(s.group, n, o.seed, {beta, stream});
}

std::vector<GroupPoint> project_all(const SubmersionProjection& pi, const std::vector<GroupPoint>& pts) {
  std::vector<GroupPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(project_point(pi, p));
  return out;
}

void structure_suite(const AlgebraStructure& s, Recorder& rec) {
  const auto& g = s.algebra;
  const auto& res = g.residuals();
  rec.below("bracket_closure", std::nullopt, res.closure, kExact);
  rec.below("jacobi_identity", std::nullopt, res.jacobi, kExact);
  rec.below("theta_involution", std::nullopt, std::max(res.theta_closure, res.theta_involution), kExact);
  rec.below("theta_automorphism", std::nullopt, res.theta_automorphism, kExact);
  rec.below("form_invariance", std::nullopt, std::max({res.form_symmetry, res.form_invariance, res.gram_symmetry}),
            kExact);
  auto& c = rec.below("cartan_brackets", std::nullopt,
                      std::max({s.cartan.kk_residual, s.cartan.kp_residual, s.cartan.pp_residual}), kExact);
  c.values = {{"dim_k", s.cartan.dim_k()}, {"dim_p", s.cartan.dim_p()}};
  rec.below("ad_adjointness", std::nullopt, ad_adjointness_residual(g, s.cartan), kExact);
  rec.below("a_abelian", std::nullopt, s.a.abelian_residual, kExact);
  auto& m = rec.flag("a_maximal", std::nullopt, s.a.centralizer_dim == s.a.rank,
                     std::abs(s.a.centralizer_dim - s.a.rank), 0.5);
  m.values = {{"rank", s.a.rank}, {"centralizer_dim", s.a.centralizer_dim}};
  rec.below("root_decomposition", std::nullopt, root_decomposition_residual(g, s.roots), kExact);
  rec.below("root_brackets", std::nullopt, root_bracket_residual(g, s.roots), kExact);
  rec.below("root_clustering", std::nullopt, s.roots.cluster_residual, RootTolerances{}.cluster);

  int total = static_cast<int>(s.roots.g0.cols());
  for (const auto& r : s.roots.roots) total += r.multiplicity;
  auto& d = rec.flag("dimension_count", std::nullopt, total == g.dim(), std::abs(total - g.dim()), 0.5);
  d.values = {{"dim_g", g.dim()}, {"dim_g0", static_cast<double>(s.roots.g0.cols())},
              {"positive_roots", static_cast<double>(s.roots.num_positive)}};
}

void lemma1_suite(const AlgebraStructure& s, const BetaContext& ctx, Recorder& rec) {
  const auto rep = check_lemma1(s.algebra, s.roots, ctx.rankone.beta);
  const auto b = ctx.simple;
  rec.below("lemma1_ideal", b, rep.ideal_residual, kExact);
  auto& w = rec.below("lemma1_weighted_sum", b, std::abs(rep.weighted_sum), kExact);
  w.values = {{"weighted_sum", rep.weighted_sum}, {"roots", static_cast<double>(rep.sigma_plus_beta.size())}};
  auto& p = rec.flag("lemma1_parity", b, rep.araki_parity, rep.araki_parity ? 0.0 : 1.0, 0.5);
  p.values = {{"m_beta", rep.m_beta}, {"m_2beta", rep.m_2beta}};
  rec.flag("lemma1_reflection", b, rep.reflection_permutes && rep.sum_invariance_residual < kExact,
           rep.sum_invariance_residual, kExact);
}

void submersion_suite(const AlgebraStructure& s, const BetaContext& ctx, const VerifyOptions& o, Recorder& rec) {
  const auto b = ctx.simple;
  const auto& pi = ctx.projection;
  const auto& r = ctx.rankone;
  rec.below("projection_idempotent", b, pi.idempotence_residual, kExact);
  rec.below("projection_self_adjoint", b, pi.self_adjoint_residual, kExact);
  rec.below("kernel_ideal", b, pi.ideal_residual, kExact);
  rec.below("projection_homomorphism", b, pi.homomorphism_residual, kExact);
  rec.below("submersion_isometry", b, pi.isometry_residual, 1e-12);

  const auto tau = tension_field(pi, ctx.source, ctx.target);
  auto& t = rec.below("tension_traces", b, max_abs(tau.per_direction_traces), kExact);
  for (Eigen::Index j = 0; j < tau.per_direction_traces.size(); ++j)
    t.values.emplace_back("trace_" + std::to_string(j), tau.per_direction_traces(j));
  if (pi.kernel_basis.cols() == 0) t.note = "empty kernel";
  auto& mn = rec.below("fibre_minimality", b, max_abs(tau.connection_route), kExact);
  for (Eigen::Index j = 0; j < tau.connection_route.size(); ++j)
    mn.values.emplace_back("mean_curvature_" + std::to_string(j), tau.connection_route(j));

  rec.below("levi_civita", b,
            std::max({ctx.source.metric_compatibility_residual(), ctx.source.torsion_residual(),
                      ctx.target.metric_compatibility_residual(), ctx.target.torsion_residual()}),
            kExact);
  rec.below("curvature_symmetries", b,
            std::max(ctx.source.curvature_symmetry_residual(), ctx.target.curvature_symmetry_residual()), kExact);

  // <nabla_X X, H_beta> = <alpha, beta> <X, X> over root vectors spanning ker pi
  double worst = 0.0, largest = 0.0;
  bool expect_nonzero = false;
  std::vector<std::pair<std::string, double>> vals;
  for (std::size_t a : s.roots.positives_without(r.beta)) {
    const auto& root = s.roots.roots[a];
    const double ab = s.roots.ip(a, r.beta);
    if (std::abs(ab) > kExact) expect_nonzero = true;
    for (Eigen::Index k = 0; k < root.space.cols(); ++k) {
      const Vec x = root.space.col(k);
      const double value = fiber_second_fundamental(ctx.source, x, r);
      worst = std::max(worst, std::abs(value - ab * s.algebra.inner(x, x)));
      largest = std::max(largest, std::abs(value));
      if (k == 0) vals.emplace_back("root" + coeff_label(root.simple_coeffs), value);
    }
  }
  const bool nonzero = largest > kExact;
  auto& f = rec.flag("fibre_second_fundamental", b, worst < kExact && nonzero == expect_nonzero, worst, kExact);
  f.values = std::move(vals);
  f.note = nonzero ? "fibres not totally geodesic" : (pi.kernel_basis.cols() ? "all <alpha,beta> vanish" : "empty kernel");

  // sectional curvature of the target over all frame planes and random planes
  const int m = ctx.target.dim();
  double kmin = 0.0, kmax = -1e300;
  bool any = false;
  auto sample_plane = [&](const Vec& x, const Vec& y) {
    try {
      const double k = ctx.target.sectional_curvature(x, y);
      kmin = any ? std::min(kmin, k) : k;
      kmax = any ? std::max(kmax, k) : k;
      any = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegeneratePlane) throw;
    }
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) sample_plane(Vec::Unit(m, i), Vec::Unit(m, j));
  const auto vecs = sample_vectors(m, 2 * o.samples, o.seed, {b, kCurvature});
  for (std::size_t i = 0; i + 1 < vecs.size(); i += 2) sample_plane(vecs[i], vecs[i + 1]);

  const double bb = r.beta_norm2;
  if (r.m_2beta == 0) {
    const double dev = any ? std::max(std::abs(kmin + bb), std::abs(kmax + bb)) : 0.0;
    auto& k = rec.below("target_curvature_constant", b, dev, 1e-8);
    k.values = {{"beta_norm2", bb}, {"k_min", kmin}, {"k_max", kmax}};
  } else {
    // required: all K in [-<b,b>, -<b,b>/4] and min K within 2% of -<b,b>
    const double below_range = std::max(0.0, -bb - kmin);
    const double above_range = std::max(0.0, kmax + bb / 4.0);
    const double min_gap = std::abs(kmin + bb) / bb;
    const double residual = std::max({below_range / bb, above_range / bb, min_gap});
    auto& k = rec.below("target_curvature_range", b, residual, 0.02);
    k.values = {{"beta_norm2", bb}, {"k_min", kmin}, {"k_max", kmax}, {"k_min_over_beta_norm2", kmin / bb},
                {"k_max_over_beta_norm2", kmax / bb}};
    k.note = "required range [-<b,b>, -<b,b>/4]";
  }
}

void morphism_suite(const AlgebraStructure& s, const BetaContext& ctx, const VerifyOptions& o, Recorder& rec) {
  const auto b = ctx.simple;
  const auto& g = s.group;
  const auto phi = build_phi(g, ctx.rankone);
  auto& nrm = rec.below("phi_normalization", b, phi.normalization_residual, 1e-12);
  nrm.note = to_string(phi.variant);

  const ScalarFunction base = phi;
  const ScalarFunction up = pullback(ctx.projection, base);
  const auto pts = points_for(s, o, b, kMorphism);
  const auto down = project_all(ctx.projection, pts);

  const auto on_na = check_harmonic_morphism(up, ctx.source, g, pts, o.step);
  rec.below("phi_laplacian", b, on_na.max_laplacian, o.tol).note = "phi o pi on NA";
  rec.below("phi_conformality", b, on_na.max_conformality, o.tol).note = "phi o pi on NA";
  const auto on_target = check_harmonic_morphism(base, ctx.target, g, down, o.step);
  rec.below("phi_target_laplacian", b, on_target.max_laplacian, o.tol);
  rec.below("phi_target_conformality", b, on_target.max_conformality, o.tol);
  rec.flag("phi_nonconstancy", b, on_na.nonconstancy > 0.1, on_na.nonconstancy, 0.1).note =
      "pass when the sample spread exceeds the tolerance";

  // holomorphic post-composition keeps the harmonic-morphism property
  const ScalarFunction sq = [up](const GroupPoint& p) { return up(p) * up(p); };
  const ScalarFunction ex = [up](const GroupPoint& p) { return std::exp(std::complex<double>(0, 1) * up(p)); };
  const auto comp_pts = points_for(s, o, b, kMorphism, 20);
  const auto r_sq = check_harmonic_morphism(sq, ctx.source, g, comp_pts, o.step);
  const auto r_ex = check_harmonic_morphism(ex, ctx.source, g, comp_pts, o.step);
  auto& cp = rec.below("phi_composition", b,
                       std::max({r_sq.max_laplacian, r_sq.max_conformality, r_ex.max_laplacian, r_ex.max_conformality}),
                       1e-4);
  cp.values = {{"square_laplacian", r_sq.max_laplacian}, {"square_conformality", r_sq.max_conformality},
               {"exp_laplacian", r_ex.max_laplacian}, {"exp_conformality", r_ex.max_conformality}};

  const auto ipts = points_for(s, o, b, kIntertwining, 50);
  const Vec beta_a = g.split(ctx.rankone.h_beta).first.H;
  const Vec x_first = g.split(ctx.rankone.n_beta_basis.col(0)).first.X;
  const std::vector<std::pair<std::string, ScalarFunction>> tests{
      {"linear", [=](const GroupPoint& q) { return std::complex<double>(x_first.dot(q.X) + beta_a.dot(q.H)); }},
      {"t2", [=](const GroupPoint& q) { return std::complex<double>(std::pow(beta_a.dot(q.H), 2)); }},
      {"exp_half", [=](const GroupPoint& q) { return std::complex<double>(std::exp(0.5 * beta_a.dot(q.H))); }},
  };
  double worst = 0.0;
  std::vector<std::pair<std::string, double>> vals;
  for (const auto& [name, f] : tests) {
    const double res = check_intertwining(ctx.projection, ctx.source, ctx.target, g, f, ipts, o.step);
    vals.emplace_back(name, res);
    worst = std::max(worst, res);
  }
  rec.below("intertwining", b, worst, o.tol).values = std::move(vals);
}

void functions_suite(const AlgebraStructure& s, const BetaContext& ctx, const VerifyOptions& o, Recorder& rec) {
  const auto b = ctx.simple;
  const auto& g = s.group;
  const auto& r = ctx.rankone;
  const Vec beta_a = g.split(r.h_beta).first.H;

  // A-radial functions against the exact one-dimensional operator
  const auto rpts = points_for(s, o, b, kRadial, 50);
  struct Radial {
    const char* name;
    RadialFunction u;
  };
  const std::vector<Radial> radial{
      {"t", {[](double t) { return t; }, [](double) { return 1.0; }, [](double) { return 0.0; }}},
      {"t2", {[](double t) { return t * t; }, [](double t) { return 2 * t; }, [](double) { return 2.0; }}},
      {"exp_half",
       {[](double t) { return std::exp(0.5 * t); }, [](double t) { return 0.5 * std::exp(0.5 * t); },
        [](double t) { return 0.25 * std::exp(0.5 * t); }}},
  };
  double worst = 0.0;
  std::vector<std::pair<std::string, double>> vals;
  for (const auto& [name, u] : radial) {
    const ScalarFunction f = [&, value = u.value](const GroupPoint& q) {
      return std::complex<double>(value(beta_a.dot(q.H)));
    };
    double w = 0.0;
    for (const auto& p : rpts) {
      const double want = radial_laplacian(ctx.source_radial, u, beta_a.dot(p.H));
      w = std::max(w, std::abs(laplacian(ctx.source, g, f, p, o.step) - want));
    }
    vals.emplace_back(name, w);
    worst = std::max(worst, w);
  }
  rec.below("radial_consistency", b, worst, o.tol).values = std::move(vals);

  const double s_val = r.m_beta + 2 * r.m_2beta;
  if (r.m_2beta == 7) {
    rec.flag("eigen_harmonic", b, true, 0.0, o.tol).note = "not applicable: Cayley hyperbolic factor";
    rec.flag("eigen_square", b, true, 0.0, o.tol).note = "not applicable: Cayley hyperbolic factor";
  } else {
    const auto epts = points_for(s, o, b, kEigen);
    const auto rep = check_eigenfunction_pullback(r, ctx.projection, ctx.source, g, s_val, epts, o.step);
    auto& h = rec.below("eigen_harmonic", b, std::max(rep.max_eigen_residual, std::abs(rep.lambda)), o.tol);
    h.values = {{"s", rep.s}, {"lambda", rep.lambda}};
    const double mu_expected = 2.0 * r.beta_norm2 * s_val * s_val;
    const double mu_gap = std::abs(rep.mu - mu_expected) / mu_expected;
    auto& q = rec.below("eigen_square", b, std::max(rep.max_square_residual, mu_gap), o.tol);
    q.values = {{"mu", rep.mu}, {"mu_expected", mu_expected}};
  }

  bool exact_ok = true;
  double mismatch = 0.0;
  for (int order = 1; order <= 6; ++order) {
    const auto rep = check_r_harmonic_pullback(s.roots, r, ctx.projection, ctx.source, g, order, {}, false, o.step);
    exact_ok = exact_ok && rep.exact_vanishes && rep.exact_nonzero;
    mismatch = std::max(mismatch, rep.operator_mismatch);
  }
  auto& ex = rec.flag("r_harmonic_exact", b, exact_ok && mismatch < kExact, mismatch, kExact);
  ex.values = {{"r_max", 6}};
  ex.note = "r = 1 uses exp((m_beta + 2 m_2beta) t), since t is not harmonic";

  const auto npts = points_for(s, o, b, kRHarmonic, 20);
  double nworst = 0.0;
  std::vector<std::pair<std::string, double>> nvals;
  for (int order = 1; order <= 2; ++order) {
    const auto rep = check_r_harmonic_pullback(s.roots, r, ctx.projection, ctx.source, g, order, npts, true, o.step);
    for (std::size_t k = 0; k < rep.numeric_residuals.size(); ++k) {
      nvals.emplace_back("r" + std::to_string(order) + "_k" + std::to_string(k + 1), rep.numeric_residuals[k]);
      nworst = std::max(nworst, rep.numeric_residuals[k]);
    }
  }
  rec.below("r_harmonic_numeric", b, nworst, 1e-4).values = std::move(nvals);
}

json details(const CheckResult& c) {
  json d = json::object();
  for (const auto& [k, v] : c.values) d[k] = v;
  if (!c.note.empty()) d["note"] = c.note;
  return d;
}

std::string fmt(double x, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, x);
  return buf;
}

}  // namespace

const char* tool_version() noexcept { return LIEHARM_VERSION; }

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Structure: return "structure";
    case Suite::Lemma1: return "lemma1";
    case Suite::Submersion: return "submersion";
    case Suite::Morphism: return "morphism";
    case Suite::Functions: return "functions";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view sel) {
  const std::vector<Suite> all{Suite::Structure, Suite::Lemma1, Suite::Submersion, Suite::Morphism, Suite::Functions};
  if (sel == "all") return all;
  for (Suite s : all)
    if (sel == to_string(s)) return {s};
  throw Error(ErrorCode::MalformedInput, "unknown check suite '" + std::string(sel) + "'");
}

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(sections.begin(), sections.end(), [](const auto& c) { return !c.pass; }));
}

VerificationReport run_verification(const AlgebraStructure& s, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.started = utc_now();
  rep.algebra_id = s.spec.id;
  rep.options = opts;
  const auto suites = parse_suites(opts.checks);
  if (opts.all_betas) {
    for (std::size_t i = 0; i < s.roots.simples.size(); ++i) rep.betas.push_back(i);
  } else {
    rep.betas = opts.betas;
  }

  Recorder rec(rep.sections);
  auto wants = [&](Suite x) { return std::find(suites.begin(), suites.end(), x) != suites.end(); };
  if (wants(Suite::Structure)) structure_suite(s, rec);
  for (std::size_t b : rep.betas) {
    if (!wants(Suite::Lemma1) && !wants(Suite::Submersion) && !wants(Suite::Morphism) && !wants(Suite::Functions))
      break;
    const BetaContext ctx = build_beta_context(s, b);
    if (wants(Suite::Lemma1)) lemma1_suite(s, ctx, rec);
    if (wants(Suite::Submersion)) submersion_suite(s, ctx, opts, rec);
    if (wants(Suite::Morphism)) morphism_suite(s, ctx, opts, rec);
    if (wants(Suite::Functions)) functions_suite(s, ctx, opts, rec);
  }
  rep.finished = utc_now();
  return rep;
}

std::string to_json(const VerificationReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = tool_version();
  j["algebra_id"] = r.algebra_id;
  j["beta_index"] = r.betas;
  j["checks"] = r.options.checks;
  j["seed"] = r.options.seed;
  j["samples"] = r.options.samples;
  j["step"] = r.options.step;
  j["tol"] = r.options.tol;
  j["timestamps"] = {{"started", r.started}, {"finished", r.finished}};
  json sections = json::array();
  for (const auto& c : r.sections) {
    json e;
    e["check_name"] = c.name;
    e["beta"] = c.beta ? json(*c.beta) : json(nullptr);
    e["status"] = c.pass ? "pass" : "fail";
    e["residual"] = c.residual;
    e["tolerance"] = c.tolerance;
    e["details"] = details(c);
    sections.push_back(std::move(e));
  }
  j["sections"] = std::move(sections);
  j["overall"] = r.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "lieharm " << tool_version() << "  verify " << r.algebra_id << "  checks=" << r.options.checks
     << "  seed=" << r.options.seed << "  samples=" << r.options.samples << "\n";
  for (const auto& c : r.sections) {
    os << (c.pass ? "  PASS  " : "  FAIL  ");
    std::string label = c.name + (c.beta ? "[beta " + std::to_string(*c.beta) + "]" : "");
    label.resize(std::max<std::size_t>(label.size(), 40), ' ');
    os << label << " residual " << fmt(c.residual, 3) << " (tol " << fmt(c.tolerance, 2) << ")";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
    if (!c.pass)
      for (const auto& [k, v] : c.values) os << "          " << k << " = " << fmt(v, 10) << "\n";
  }
  os << (r.pass() ? "overall: pass" : "overall: FAIL (" + std::to_string(r.failures()) + " failed)") << "\n";
  return os.str();
}

namespace {

json analysis(const AlgebraStructure& s) {
  json j;
  j["schema"] = "lieharm-analysis/1";
  j["algebra_id"] = s.spec.id;
  j["family"] = std::string(to_string(s.spec.family));
  j["params"] = s.spec.params;
  j["form_scale"] = s.spec.form_scale.to_string();
  j["dim"] = s.algebra.dim();
  j["dim_k"] = s.cartan.dim_k();
  j["dim_p"] = s.cartan.dim_p();
  j["dim_n"] = s.group.dim_n();
  j["rank"] = s.roots.rank;
  json roots = json::array();
  for (std::size_t i = 0; i < s.roots.num_positive; ++i) {
    const auto& r = s.roots.roots[i];
    roots.push_back({{"index", i},
                     {"simple_coeffs", r.simple_coeffs},
                     {"height", r.height},
                     {"multiplicity", r.multiplicity},
                     {"norm2", s.roots.ip(i, i)}});
  }
  j["positive_roots"] = std::move(roots);
  j["simple_roots"] = s.roots.simples;
  json betas = json::array();
  for (std::size_t b = 0; b < s.roots.simples.size(); ++b) {
    const auto r = build_rank_one(s.algebra, s.cartan, s.roots, s.roots.simples[b]);
    betas.push_back({{"beta_index", b},
                     {"root_index", r.beta},
                     {"beta_norm2", r.beta_norm2},
                     {"m_beta", r.m_beta},
                     {"m_2beta", r.m_2beta},
                     {"dim_M_beta", r.dim_m_beta},
                     {"hyperbolic_type", to_string(r.type)}});
  }
  j["rank_one"] = std::move(betas);
  return j;
}

}  // namespace

std::string analysis_json(const AlgebraStructure& s) { return analysis(s).dump(2) + "\n"; }

std::string analysis_text(const AlgebraStructure& s) {
  const json j = analysis(s);
  std::ostringstream os;
  os << s.spec.id << ": " << j["family"].get<std::string>() << " " << j["params"].dump() << ", dim "
     << s.algebra.dim() << " (k " << s.cartan.dim_k() << ", p " << s.cartan.dim_p() << "), n " << s.group.dim_n()
     << "\n";
  os << "rank " << s.roots.rank << ", " << s.roots.num_positive << " positive roots\n";
  for (const auto& r : j["positive_roots"])
    os << "  root " << coeff_label(r["simple_coeffs"].get<std::vector<int>>()) << "  m=" << r["multiplicity"].get<int>()
       << "  <a,a>=" << fmt(r["norm2"].get<double>(), 10) << "\n";
  for (const auto& b : j["rank_one"])
    os << "beta " << b["beta_index"].get<int>() << ": <b,b>=" << fmt(b["beta_norm2"].get<double>(), 10)
       << "  m_beta=" << b["m_beta"].get<int>() << "  m_2beta=" << b["m_2beta"].get<int>()
       << "  dim M_beta=" << b["dim_M_beta"].get<int>() << "  " << b["hyperbolic_type"].get<std::string>()
       << " hyperbolic\n";
  return os.str();
}

GroupPoint parse_point(const NAGroup& group, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("point is not valid JSON: ") + e.what());
  }
  auto read = [&](const char* upper, const char* lower, int size) {
    const json* v = j.contains(upper) ? &j[upper] : (j.contains(lower) ? &j[lower] : nullptr);
    Vec out = Vec::Zero(size);
    if (!v) {
      if (size == 0) return out;
      throw Error(ErrorCode::MalformedInput, std::string("point is missing '") + upper + "'");
    }
    if (!v->is_array() || static_cast<int>(v->size()) != size)
      throw Error(ErrorCode::MalformedInput,
                  std::string("'") + upper + "' must be an array of " + std::to_string(size) + " numbers");
    for (int i = 0; i < size; ++i) {
      if (!(*v)[static_cast<std::size_t>(i)].is_number())
        throw Error(ErrorCode::MalformedInput, std::string("'") + upper + "' entries must be numbers");
      out(i) = (*v)[static_cast<std::size_t>(i)].get<double>();
    }
    return out;
  };
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "point must be a JSON object");
  return group.make_point(read("X", "x", group.dim_n()), read("H", "h", group.rank()));
}

std::complex<double> evaluate_map(const AlgebraStructure& s, const BetaContext& ctx, std::string_view map,
                                  const GroupPoint& p) {
  const Vec beta_a = s.group.split(ctx.rankone.h_beta).first.H;
  const double m = ctx.rankone.m_beta + 2 * ctx.rankone.m_2beta;
  const GroupPoint q = project_point(ctx.projection, p);
  const double t = beta_a.dot(q.H);
  std::string_view name = map;
  if (map != "phi") {
    if (map.substr(0, 9) != "pullback:") throw Error(ErrorCode::MalformedInput, "unknown map '" + std::string(map) + "'");
    name = map.substr(9);
  }
  if (name == "phi") return build_phi(s.group, ctx.rankone)(q);
  if (name == "t") return t;
  if (name == "t2") return t * t;
  if (name == "exp_half") return std::exp(0.5 * t);
  if (name == "eigen") return std::exp(m * t);
  throw Error(ErrorCode::MalformedInput, "unknown pullback function '" + std::string(name) + "'");
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag());
  return buf;
}

}  // namespace lieharm
