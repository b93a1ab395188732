#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieharm/algebra.hpp"
#include "lieharm/rational.hpp"

namespace lieharm {

enum class Family { SlReal, SuPq, SoPq, SpReal, G2Split };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Machine-readable description of a supported real form.
///
/// params: sl_real {n}, n >= 2 (sl(n,R)); su_pq / so_pq {p, q}, 1 <= p <= q
/// (so_pq additionally p + q >= 3); sp_real {n}, n >= 1 (sp(2n,R));
/// g2_split {} (the split real form of g2).
struct AlgebraSpec {
  std::string id;
  Family family = Family::SlReal;
  std::vector<int> params;
  Rational form_scale{1};
};

/// Throws InvalidParams when the parameters do not describe a noncompact
/// simple (or, for so(2,2), semisimple) algebra of the family.
void validate(const AlgebraSpec& spec);

LieAlgebra realize(const AlgebraSpec& spec);

/// sl2, sl3, sl4, su12, so13, so23, sp4, g2split.
const std::vector<AlgebraSpec>& builtin_catalog();

/// Parses a JSON array of {"id", "family", "params", "form_scale"} objects.
/// Unknown family names raise UnsupportedFamily, malformed documents
/// MalformedInput, bad parameters InvalidParams.
std::vector<AlgebraSpec> parse_catalog_json(std::string_view text);
std::vector<AlgebraSpec> load_catalog_file(const std::filesystem::path& path);

/// Looks `id` up in `extra` first, then in the built-in catalog.
AlgebraSpec resolve_algebra(std::string_view id, const std::vector<AlgebraSpec>& extra = {});

}  // namespace lieharm
