#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieharm/pipeline.hpp"

namespace lieharm {

inline constexpr const char* kReportSchema = "lieharm-report/1";
const char* tool_version() noexcept;

struct CheckResult {
  std::string name;
  std::optional<std::size_t> beta;  // simple-root index, none for algebra-wide checks
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> values;
  std::string note;
};

enum class Suite { Structure, Lemma1, Submersion, Morphism, Functions };

/// "all" or one of structure, lemma1, submersion, morphism, functions.
/// Throws MalformedInput otherwise.
std::vector<Suite> parse_suites(std::string_view selector);
const char* to_string(Suite s);

struct VerifyOptions {
  std::string checks = "all";
  std::size_t samples = 100;
  double step = 1e-3;
  double tol = 1e-5;
  std::uint64_t seed = 42;
  std::vector<std::size_t> betas{0};
  bool all_betas = false;
};

struct VerificationReport {
  std::string algebra_id;
  std::vector<std::size_t> betas;
  VerifyOptions options;
  std::vector<CheckResult> sections;
  std::string started, finished;  // UTC, ISO 8601

  bool pass() const;
  std::size_t failures() const;
};

VerificationReport run_verification(const AlgebraStructure& s, const VerifyOptions& opts);

/// Pretty-printed JSON; the timestamps object is the only non-deterministic field.
std::string to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

std::string analysis_json(const AlgebraStructure& s);
std::string analysis_text(const AlgebraStructure& s);

/// {"X": [...], "H": [...]} with the NA coordinate sizes. Throws MalformedInput.
GroupPoint parse_point(const NAGroup& group, std::string_view json);

/// Maps understood by evaluate_map: "phi" (the harmonic morphism on NA,
/// i.e. phi o pi) and "pullback:<f>" for f in {t, t2, exp_half, eigen, phi}.
/// Throws MalformedInput for other names.
std::complex<double> evaluate_map(const AlgebraStructure& s, const BetaContext& ctx, std::string_view map,
                                  const GroupPoint& p);

/// "%.15g" real and imaginary parts, e.g. "0+1i".
std::string format_complex(std::complex<double> z);

}  // namespace lieharm
