#ifndef MAPCENSUS_TUTTE_MAP_HPP
#define MAPCENSUS_TUTTE_MAP_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mapcensus/cayley.hpp"
#include "mapcensus/permutation.hpp"

namespace mapcensus {

using Cycle = std::vector<std::uint32_t>;

/// A permutation P on a flag space that satisfies the three map axioms.
class MapPermutation {
 public:
  MapPermutation(std::shared_ptr<const FlagSpace> space, Perm p);  // validates

  const FlagSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const FlagSpace>& space_ptr() const noexcept { return space_; }
  const Perm& P() const noexcept { return p_; }

 private:
  std::shared_ptr<const FlagSpace> space_;
  Perm p_;
};

struct AxiomViolation {
  int axiom = 0;  // 1, 2 or 3
  std::uint32_t witness = 0;
  std::string message;
};

/// First violated axiom, if any.
std::optional<AxiomViolation> check_map_axioms(const FlagSpace& f, const Perm& p);

MapPermutation validate_map(std::shared_ptr<const FlagSpace> f, Perm p);

struct CyclePair {
  Cycle first;   // contains the least flag of the pair
  Cycle second;
};

struct MapInventory {
  std::vector<CyclePair> vertices;
  std::size_t edge_count = 0;
  std::vector<CyclePair> faces;
  std::int64_t euler_characteristic = 0;
  bool orientable = false;
  std::int64_t genus = 0;  // orientable genus or crosscap number

  std::vector<std::size_t> face_lengths() const;  // sorted
};

/// x -> P(αβ(x)).
Perm face_permutation(const FlagSpace& f, const Perm& p);

MapInventory inventory(const MapPermutation& m);

/// Orbit labels of <P, αβ>; flag 0 is in orbit 0.
std::vector<std::uint8_t> orientation_orbits(const FlagSpace& f, const Perm& p, std::size_t* orbit_count = nullptr);

bool is_orientable(const MapPermutation& m);

std::vector<Perm> map_automorphisms(const MapPermutation& m);

/// Automorphisms preserving the two <P, αβ> orbits; all of AutM when the
/// map is non-orientable.
std::vector<Perm> orientation_preserving_automorphisms(const MapPermutation& m);

std::optional<Perm> is_isomorphic(const MapPermutation& m1, const MapPermutation& m2);

/// σ_e = (x, αx)(βx, αβx), one per quadricell.
std::vector<Perm> side_swap_generators(const FlagSpace& f);

inline constexpr std::size_t kDefaultTieCap = 1u << 16;

/// Blocks are unions of alpha-pairs; τ_W applies alpha on the blocks in W.
/// Returns the lexicographically least τ_W P τ_W. With `forced`, the bit of
/// block_of[0] is fixed to *forced. Throws CapExceeded if more than
/// `tie_cap` partial assignments tie.
Perm canonical_block_swap(const FlagSpace& f, const Perm& p, const std::vector<std::uint32_t>& block_of,
                          std::size_t block_count, std::optional<bool> forced = std::nullopt,
                          std::size_t tie_cap = kDefaultTieCap);

/// Least representative of P under side-swap conjugation.
Perm canonical_side_class(const MapPermutation& m, std::size_t tie_cap = kDefaultTieCap);

/// Least representative over side swaps that carry `marker`'s <P,αβ> orbit
/// onto the orbit containing flag 0 (orientable maps only).
Perm canonical_oriented_side_class(const FlagSpace& f, const Perm& p, std::uint32_t marker,
                                   std::size_t tie_cap = kDefaultTieCap);

/// Exhaustive version of canonical_side_class over all 2^ε swaps.
Perm brute_force_side_class(const MapPermutation& m, std::size_t cap = 1u << 20);

// Map text format: "map <n>", a line of n images of P, and for generic
// flag spaces two more lines with the images of alpha and beta.
struct MapFile {
  Perm p;
  std::optional<Perm> alpha;
  std::optional<Perm> beta;
};
MapFile read_map_file(std::istream& in);
MapFile load_map_file(const std::string& path);
void write_map(std::ostream& out, const MapPermutation& m, bool with_involutions);

/// K4 on the torus: quadricells x,y,z,u,v,w with flag id 4e + j for
/// j = 0 (e), 1 (αe), 2 (βe), 3 (αβe).
MapPermutation fig1_map();

}  // namespace mapcensus

#endif  // MAPCENSUS_TUTTE_MAP_HPP
