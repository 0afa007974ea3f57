#ifndef MAPCENSUS_ORACLE_HPP
#define MAPCENSUS_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/cayley.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/tutte_map.hpp"

namespace mapcensus {

/// raw: distinct P.  sigma: P modulo side swaps; orientable classes also
/// carry one of their two orientations, so they match rotation systems.
/// dart: P modulo single dart-end exchanges; every class counts as
/// orientable because each contains an orientable member.
enum class Semantics { raw, sigma, dart };

Semantics parse_semantics(const std::string& s);
std::string semantics_name(Semantics s);

inline constexpr std::uint64_t kDefaultGroundCap = std::uint64_t{1} << 22;

struct GroundSet {
  Semantics semantics = Semantics::sigma;
  Surface surface = Surface::L;
  std::shared_ptr<const FlagSpace> space;
  std::vector<Perm> representatives;    // canonical, sorted
  std::vector<std::uint8_t> orientable;  // per representative

  std::size_t size() const noexcept { return representatives.size(); }
  /// Index of the class with this canonical key, if present.
  std::optional<std::size_t> find(const Perm& key) const;

  std::unordered_map<Perm, std::uint32_t, PermHash> index;
};

/// Number of candidates the enumeration will visit.
mpz_class enumeration_size(const FlagSpace& f, Semantics semantics);

/// Canonical key of the class of P. For sigma orientable classes the
/// orientation is the <P, αβ> orbit of `marker`.
Perm class_key(const FlagSpace& f, Semantics semantics, const Perm& p, bool orientable, std::uint32_t marker = 0);

GroundSet enumerate_embeddings(std::shared_ptr<const FlagSpace> f, Semantics semantics, Surface surface,
                               std::uint64_t cap = kDefaultGroundCap, unsigned workers = 1);

/// Index of the class that ξ (a flag map) sends representative i to.
std::size_t act_on_class(const GroundSet& gs, const Perm& xi, std::size_t i);

std::uint64_t fixed_count(const Perm& xi, const GroundSet& gs, unsigned workers = 1);

/// Which representatives ξ fixes.
std::vector<std::uint8_t> fixed_members(const Perm& xi, const GroundSet& gs, unsigned workers = 1);

struct OrbitSummary {
  std::size_t representative = 0;  // index into the ground set
  std::size_t size = 0;
  std::int64_t euler_characteristic = 0;
  bool orientable = false;
  std::int64_t genus = 0;
};

struct OrbitCensus {
  std::size_t acting_order = 0;
  std::vector<std::uint64_t> fixed_counts;  // per acting element
  std::uint64_t fixed_sum = 0;
  std::uint64_t burnside_count = 0;
  std::uint64_t union_find_count = 0;
  std::vector<OrbitSummary> orbits;
};

/// Burnside count plus an independent union-find partition of the ground
/// set; both must agree.
OrbitCensus burnside_count(const std::vector<Perm>& acting, const GroundSet& gs, unsigned workers = 1);

enum class ActingChoice { rg, rgxh, full };
ActingChoice parse_acting(const std::string& s);
std::string acting_name(ActingChoice a);

struct ActingSelection {
  std::vector<GraphAutomorphism> vertex_maps;
  std::vector<Perm> flag_maps;
  std::vector<GraphAutomorphism> h;  // complement used (identity only for rg)
  AutDecomposition decomposition;
};

/// Vertex and flag maps of the chosen acting group. rgxh falls back to R(G)
/// when no direct-product complement exists.
ActingSelection select_acting_group(const CayleyInstance& inst, ActingChoice choice,
                                    const std::optional<std::vector<GraphAutomorphism>>& h_override = std::nullopt);

struct ComparisonLine {
  std::size_t class_size = 0;
  std::uint64_t order = 1;
  std::uint64_t l_value = 0;
  Branch branch = Branch::Theta;
  std::uint64_t alpha_exponent = 0;
  std::uint64_t oracle_fixed = 0;
  mpz_class formula_fixed;
  bool ratio_defined = false;
  mpq_class ratio;  // oracle / formula
};

struct ComparisonReport {
  Surface surface = Surface::L;
  Semantics semantics = Semantics::sigma;
  std::size_t acting_order = 0;
  std::vector<ComparisonLine> lines;
  std::uint64_t oracle_total = 0;
  mpq_class formula_total;
  bool total_ratio_defined = false;
  mpq_class total_ratio;
  std::uint64_t oracle_O = 0, oracle_N = 0, oracle_L = 0;  // additivity
};

/// Oracle fixed counts per class of R(G) x H against the formula, plus the
/// totals and their ratios.
ComparisonReport compare_with_formula(const CayleyInstance& inst, const std::vector<GraphAutomorphism>& h,
                                      Surface surface, Semantics semantics, std::uint64_t cap = kDefaultGroundCap,
                                      unsigned workers = 1);

}  // namespace mapcensus

#endif  // MAPCENSUS_ORACLE_HPP
