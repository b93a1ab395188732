#include "lieharm/catalog.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lieharm/error.hpp"
#include "lieharm/octonion.hpp"

namespace lieharm {
namespace {

using Unknowns = std::function<Mat(const std::vector<double>&)>;

struct LinearModel {
  std::size_t unknowns = 0;
  std::vector<RationalRow> constraints;
  Unknowns to_matrix;  // linear map from the unknown vector to a realized matrix
  std::vector<Mat> hint;
};

std::vector<Mat> solve_model(const LinearModel& model) {
  const auto kernel = rational_kernel(model.constraints, model.unknowns);
  std::vector<Mat> basis;
  basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    std::vector<double> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i].to_double();
    basis.push_back(model.to_matrix(x));
  }
  return basis;
}

Mat square_from(const std::vector<double>& x, int n, std::size_t offset = 0) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = x[offset + static_cast<std::size_t>(i * n + j)];
  return m;
}

// Rows of X^T S + s_sign * S X = 0 on the n*n block starting at `offset`.
void add_form_constraints(std::vector<RationalRow>& rows, std::size_t total, std::size_t offset,
                          const std::vector<std::vector<int>>& s, int transpose_sign) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RationalRow row(total, Rational(0));
      for (int k = 0; k < n; ++k) {
        if (s[k][j] != 0) row[offset + static_cast<std::size_t>(k * n + i)] += Rational(transpose_sign * s[k][j]);
        if (s[i][k] != 0) row[offset + static_cast<std::size_t>(k * n + j)] += Rational(s[i][k]);
      }
      rows.push_back(std::move(row));
    }
  }
}

void add_trace_constraint(std::vector<RationalRow>& rows, std::size_t total, std::size_t offset, int n) {
  RationalRow row(total, Rational(0));
  for (int i = 0; i < n; ++i) row[offset + static_cast<std::size_t>(i * n + i)] = Rational(1);
  rows.push_back(std::move(row));
}

std::vector<std::vector<int>> signature(int p, int q) {
  const int n = p + q;
  std::vector<std::vector<int>> j(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) j[i][i] = i < p ? 1 : -1;
  return j;
}

Mat boost(int p, int n, int i) {
  Mat m = Mat::Zero(n, n);
  m(i, p + i) = 1.0;
  m(p + i, i) = 1.0;
  return m;
}

LinearModel sl_model(int n) {
  LinearModel m;
  m.unknowns = static_cast<std::size_t>(n * n);
  add_trace_constraint(m.constraints, m.unknowns, 0, n);
  m.to_matrix = [n](const std::vector<double>& x) { return square_from(x, n); };
  // a_k = (n-k) E_kk - sum_{j>k} E_jj: mutually orthogonal, and lexicographic
  // positivity on them orders e_1 > e_2 > ... > e_n.
  for (int k = 0; k + 1 < n; ++k) {
    Mat h = Mat::Zero(n, n);
    h(k, k) = n - k - 1;
    for (int j = k + 1; j < n; ++j) h(j, j) = -1.0;
    m.hint.push_back(h);
  }
  return m;
}

LinearModel so_model(int p, int q) {
  const int n = p + q;
  LinearModel m;
  m.unknowns = static_cast<std::size_t>(n * n);
  add_form_constraints(m.constraints, m.unknowns, 0, signature(p, q), 1);
  m.to_matrix = [n](const std::vector<double>& x) { return square_from(x, n); };
  for (int i = 0; i < p; ++i) m.hint.push_back(boost(p, n, i));
  return m;
}

// X = A + iB complex (p+q)x(p+q), X^* J + J X = 0, tr X = 0, realized as [[A,-B],[B,A]].
LinearModel su_model(int p, int q) {
  const int n = p + q;
  const auto nn = static_cast<std::size_t>(n * n);
  LinearModel m;
  m.unknowns = 2 * nn;
  const auto j = signature(p, q);
  add_form_constraints(m.constraints, m.unknowns, 0, j, 1);
  add_form_constraints(m.constraints, m.unknowns, nn, j, -1);
  add_trace_constraint(m.constraints, m.unknowns, 0, n);
  add_trace_constraint(m.constraints, m.unknowns, nn, n);
  m.to_matrix = [n, nn](const std::vector<double>& x) {
    const Mat a = square_from(x, n), b = square_from(x, n, nn);
    Mat r(2 * n, 2 * n);
    r << a, -b, b, a;
    return r;
  };
  for (int i = 0; i < p; ++i) {
    const Mat a = boost(p, n, i);
    Mat r = Mat::Zero(2 * n, 2 * n);
    r.topLeftCorner(n, n) = a;
    r.bottomRightCorner(n, n) = a;
    m.hint.push_back(r);
  }
  return m;
}

LinearModel sp_model(int half) {
  const int n = 2 * half;
  LinearModel m;
  m.unknowns = static_cast<std::size_t>(n * n);
  std::vector<std::vector<int>> omega(n, std::vector<int>(n, 0));
  for (int i = 0; i < half; ++i) {
    omega[i][half + i] = 1;
    omega[half + i][i] = -1;
  }
  add_form_constraints(m.constraints, m.unknowns, 0, omega, 1);
  m.to_matrix = [n](const std::vector<double>& x) { return square_from(x, n); };
  for (int i = 0; i < half; ++i) {
    Mat h = Mat::Zero(n, n);
    h(i, i) = 1.0;
    h(half + i, half + i) = -1.0;
    m.hint.push_back(h);
  }
  return m;
}

// Derivations D of the split octonions: D(e_a e_b) = D(e_a) e_b + e_a D(e_b).
// Unknown D_pc is stored at index p*8 + c (D e_c = sum_p D_pc e_p).
LinearModel g2_model() {
  const auto& mt = split_octonion_table();
  LinearModel m;
  m.unknowns = 64;
  auto idx = [](int row, int col) { return static_cast<std::size_t>(row * 8 + col); };
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      for (int q = 0; q < 8; ++q) {
        RationalRow row(64, Rational(0));
        bool any = false;
        for (int c = 0; c < 8; ++c) {
          if (mt[a][b][c] != 0) {
            row[idx(q, c)] += Rational(mt[a][b][c]);
            any = true;
          }
        }
        for (int p = 0; p < 8; ++p) {
          if (mt[p][b][q] != 0) {
            row[idx(p, a)] -= Rational(mt[p][b][q]);
            any = true;
          }
          if (mt[a][p][q] != 0) {
            row[idx(p, b)] -= Rational(mt[a][p][q]);
            any = true;
          }
        }
        if (any) m.constraints.push_back(std::move(row));
      }
    }
  }
  m.to_matrix = [](const std::vector<double>& x) { return square_from(x, 8); };
  return m;
}

void require(bool ok, const AlgebraSpec& spec, const std::string& why) {
  if (!ok) throw Error(ErrorCode::InvalidParams, spec.id + ": " + why);
}

AlgebraSpec make(std::string id, Family f, std::vector<int> params) {
  AlgebraSpec s;
  s.id = std::move(id);
  s.family = f;
  s.params = std::move(params);
  return s;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SlReal: return "sl_real";
    case Family::SuPq: return "su_pq";
    case Family::SoPq: return "so_pq";
    case Family::SpReal: return "sp_real";
    case Family::G2Split: return "g2_split";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::SlReal, Family::SuPq, Family::SoPq, Family::SpReal, Family::G2Split})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

void validate(const AlgebraSpec& spec) {
  require(spec.form_scale.num() > 0, spec, "form_scale must be positive");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::SlReal:
      require(p.size() == 1 && p[0] >= 2, spec, "sl_real needs params [n] with n >= 2");
      require(p[0] <= 12, spec, "sl_real limited to n <= 12");
      break;
    case Family::SuPq:
      require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, spec, "su_pq needs params [p, q] with p, q >= 1");
      require(p[0] <= p[1], spec, "su_pq expects p <= q");
      require(p[0] + p[1] <= 8, spec, "su_pq limited to p + q <= 8");
      break;
    case Family::SoPq:
      require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, spec, "so_pq needs params [p, q] with p, q >= 1");
      require(p[0] <= p[1], spec, "so_pq expects p <= q");
      require(p[0] + p[1] >= 3, spec, "so_pq needs p + q >= 3");
      require(p[0] + p[1] <= 12, spec, "so_pq limited to p + q <= 12");
      break;
    case Family::SpReal:
      require(p.size() == 1 && p[0] >= 1, spec, "sp_real needs params [n] with n >= 1");
      require(p[0] <= 6, spec, "sp_real limited to n <= 6");
      break;
    case Family::G2Split:
      require(p.empty(), spec, "g2_split takes no params");
      break;
  }
}

LieAlgebra realize(const AlgebraSpec& spec) {
  validate(spec);
  LinearModel model;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::SlReal: model = sl_model(p[0]); break;
    case Family::SuPq: model = su_model(p[0], p[1]); break;
    case Family::SoPq: model = so_model(p[0], p[1]); break;
    case Family::SpReal: model = sp_model(p[0]); break;
    case Family::G2Split: model = g2_model(); break;
    default: throw Error(ErrorCode::UnsupportedFamily, spec.id);
  }
  return LieAlgebra(spec.id, solve_model(model), model.hint, spec.form_scale.to_double());
}

const std::vector<AlgebraSpec>& builtin_catalog() {
  static const std::vector<AlgebraSpec> catalog = {
      make("sl2", Family::SlReal, {2}),   make("sl3", Family::SlReal, {3}),
      make("sl4", Family::SlReal, {4}),   make("su12", Family::SuPq, {1, 2}),
      make("so13", Family::SoPq, {1, 3}), make("so23", Family::SoPq, {2, 3}),
      make("sp4", Family::SpReal, {2}),   make("g2split", Family::G2Split, {}),
  };
  return catalog;
}

std::vector<AlgebraSpec> parse_catalog_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "catalog must be a JSON array");

  std::vector<AlgebraSpec> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("id") || !item.contains("family") ||
        !item["id"].is_string() || !item["family"].is_string())
      throw Error(ErrorCode::MalformedInput, "catalog entries need string \"id\" and \"family\"");
    AlgebraSpec spec;
    spec.id = item["id"].get<std::string>();
    const auto fam = item["family"].get<std::string>();
    auto f = family_from_string(fam);
    if (!f) throw Error(ErrorCode::UnsupportedFamily, spec.id + ": family '" + fam + "'");
    spec.family = *f;
    if (item.contains("params")) {
      if (!item["params"].is_array()) throw Error(ErrorCode::MalformedInput, spec.id + ": params must be an array");
      for (const auto& v : item["params"]) {
        if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, spec.id + ": params must be integers");
        spec.params.push_back(v.get<int>());
      }
    }
    if (item.contains("form_scale")) {
      const auto& fs = item["form_scale"];
      std::optional<Rational> r;
      if (fs.is_string()) r = Rational::parse(fs.get<std::string>());
      else if (fs.is_number_integer()) r = Rational(fs.get<std::int64_t>());
      if (!r) throw Error(ErrorCode::MalformedInput, spec.id + ": form_scale must be a rational \"p/q\"");
      spec.form_scale = *r;
    }
    validate(spec);
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<AlgebraSpec> load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open catalog " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog_json(ss.str());
}

AlgebraSpec resolve_algebra(std::string_view id, const std::vector<AlgebraSpec>& extra) {
  for (const auto& s : extra)
    if (s.id == id) return s;
  for (const auto& s : builtin_catalog())
    if (s.id == id) return s;
  throw Error(ErrorCode::UnknownAlgebra, std::string(id));
}

}  // namespace lieharm
