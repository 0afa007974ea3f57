#ifndef MAPCENSUS_PERMUTATION_HPP
#define MAPCENSUS_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mapcensus {

/// A permutation of {0..n-1} in image form: perm[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);

bool is_permutation(std::span<const std::uint32_t> p);

/// (a ∘ b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);

Perm inverse(const Perm& p);

/// p^e for e >= 0.
Perm power(const Perm& p, std::uint64_t e);

/// τ p τ^-1.
Perm conjugate(const Perm& p, const Perm& tau);

std::vector<std::vector<std::uint32_t>> cycles(const Perm& p);

/// Cycle lengths, sorted ascending.
std::vector<std::size_t> cycle_type(const Perm& p);

std::uint64_t perm_order(const Perm& p);

bool is_identity(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Parse 1-based cycle notation such as "(1 2)(3 4 5)" or "(1,2)" into a
/// permutation of the given degree. An empty string gives the identity.
Perm parse_cycles(std::string_view text, std::size_t degree);

}  // namespace mapcensus

#endif  // MAPCENSUS_PERMUTATION_HPP
