#ifndef MAPCENSUS_CENSUS_HPP
#define MAPCENSUS_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/bigcount.hpp"
#include "mapcensus/cayley.hpp"
#include "mapcensus/group.hpp"

namespace mapcensus {

enum class Surface { O, N, L };

Surface parse_surface(const std::string& s);
std::string surface_name(Surface s);

enum class Branch { Theta, Delta };

/// R(G) x H as vertex permutations; element i*|H| + j is R(g_i) h_j.
struct ActingGroup {
  std::vector<GraphAutomorphism> elements;
  std::size_t g_order = 0;
  std::size_t h_order = 1;
};

/// H must commute elementwise with R(G) and meet it trivially.
ActingGroup make_acting_group(const FiniteGroup& g, const std::vector<GraphAutomorphism>& h);

struct ActingClass {
  std::size_t representative = 0;  // index into ActingGroup::elements
  std::vector<std::size_t> members;
};

/// Conjugacy classes of an automorphism group given as a list of vertex
/// permutations; representatives are the least index in each class.
std::vector<ActingClass> automorphism_classes(const std::vector<GraphAutomorphism>& elems);

struct ClassStats {
  GraphAutomorphism representative;
  std::size_t class_size = 1;
  std::uint64_t order = 1;
  bool semi_regular = true;
  std::uint64_t l_value = 0;
  Branch branch = Branch::Theta;
  std::uint64_t edge_orbits = 0;
  std::uint64_t alpha_exponent = 0;
};

/// Edges {t, u} with η(t) = u and η(u) = t, where η = ξ^(o/2); 0 for odd o.
std::uint64_t inverted_edges(const Graph& gr, const GraphAutomorphism& xi);

ClassStats class_stats(const Graph& gr, const GraphAutomorphism& xi, std::size_t class_size = 1);

/// O: K^(ν/o); L: 2^α K^(ν/o); N: (2^α - 1) K^(ν/o), K = (k-1)!.
MonomialSum phi_terms(const ClassStats& st, Surface surface, std::size_t k, std::size_t vertex_count);
CountReport phi_formula(const ClassStats& st, Surface surface, std::size_t k, std::size_t vertex_count,
                        const ModeSpec& mode = {});

struct CensusRow {
  ClassStats stats;
  CountReport phi;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  CountReport total;
  std::size_t acting_order = 0;
  MonomialSum sum;  // total as a monomial sum (already divided)
};

/// Class sum over R(G) x H divided by |G||H|.
CensusResult census(const CayleyInstance& inst, const std::vector<GraphAutomorphism>& h, Surface surface,
                    const ModeSpec& mode = {});

struct GrrRow {
  Element representative = 0;
  std::size_t class_size = 1;
  std::uint32_t order = 1;
  std::uint64_t l_value = 0;
  std::uint64_t l_conjugation = 0;  // #{t : t g^(o/2) t^-1 ∈ S} / 2
  Branch branch = Branch::Theta;
  std::uint64_t alpha_exponent = 0;
  CountReport phi;
};

struct GrrCensusResult {
  std::vector<GrrRow> rows;
  CountReport total;
  bool odd_order_shortcut_used = false;
  MonomialSum sum;
};

/// H = 1 census indexed by the conjugacy classes of G. For groups of odd
/// order the single-branch form is also evaluated and must agree.
GrrCensusResult grr_census(const CayleyInstance& inst, Surface surface, const ModeSpec& mode = {});

std::string branch_name(Branch b);

}  // namespace mapcensus

#endif  // MAPCENSUS_CENSUS_HPP
