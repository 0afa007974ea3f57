#ifndef MAPCENSUS_AUTOMORPHISM_HPP
#define MAPCENSUS_AUTOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mapcensus/cayley.hpp"
#include "mapcensus/group.hpp"
#include "mapcensus/permutation.hpp"
#include "mapcensus/tutte_map.hpp"

namespace mapcensus {

/// A graph automorphism as its vertex images.
using GraphAutomorphism = Perm;

inline constexpr std::size_t kDefaultAutCap = 1u << 20;

/// Full automorphism group by backtracking in BFS order; identity first.
std::vector<GraphAutomorphism> graph_automorphism_group(const Graph& g, std::size_t cap = kDefaultAutCap);

/// R(h): t -> t h, indexed by h.
std::vector<GraphAutomorphism> right_regular(const FiniteGroup& g);

struct AutDecomposition {
  std::vector<GraphAutomorphism> full_group;
  std::vector<GraphAutomorphism> regular_part;
  std::vector<GraphAutomorphism> centralizer;  // of R(G) in the full group
  std::vector<GraphAutomorphism> complement;   // H, when a direct product
  bool is_direct_product = false;
  bool is_grr = false;
};

AutDecomposition decompose(const std::vector<GraphAutomorphism>& full, const FiniteGroup& g);

/// (g,s,σ) -> (θ(g), θ(sg) θ(g)^-1, σ).
Perm extend_to_flags(const GraphAutomorphism& theta, const FlagSpace& f);

bool is_semi_regular(const GraphAutomorphism& theta);

/// Orbit lengths of θ on vertices, sorted.
std::vector<std::size_t> orbit_lengths(const GraphAutomorphism& theta);

enum class StableVariant { general, orientable };

/// A map fixed by a lift of θ: rotations chosen at one vertex per θ-cycle and
/// transported along the cycle. `base` supplies the rotations at the
/// representatives (its vertex cycles through each (g, S[0], +) or its
/// partner); otherwise S is taken in sorted order with all signs +.
/// The general variant uses lift = ext(θ); without `base`, an orientable
/// result whose orientation ext(θ) reverses is replaced by the orientable
/// variant. The orientable variant solves for
/// dart signs and a vertex side swap τ so that lift = τ∘ext(θ) fixes P and
/// preserves each orientation sheet.
struct StableWitness {
  MapPermutation map;
  Perm lift;
};

StableWitness construct_stable_witness(const GraphAutomorphism& theta, std::shared_ptr<const FlagSpace> f,
                                       const std::optional<Perm>& base = std::nullopt,
                                       StableVariant variant = StableVariant::general);

MapPermutation construct_stable_map(const GraphAutomorphism& theta, std::shared_ptr<const FlagSpace> f,
                                    const std::optional<Perm>& base = std::nullopt,
                                    StableVariant variant = StableVariant::general);

/// Vertex images of a flag map that commutes with alpha and beta.
GraphAutomorphism project_to_vertices(const Perm& flag_map, const FlagSpace& f);

}  // namespace mapcensus

#endif  // MAPCENSUS_AUTOMORPHISM_HPP
