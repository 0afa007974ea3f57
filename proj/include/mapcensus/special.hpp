#ifndef MAPCENSUS_SPECIAL_HPP
#define MAPCENSUS_SPECIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mapcensus/bigcount.hpp"
#include "mapcensus/cayley.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/group.hpp"

namespace mapcensus {

/// Multiplicities k[1..n] (index 0 unused) with Σ i k_i = n.
struct Partition {
  std::vector<std::uint32_t> k;

  std::uint32_t n() const;
  std::vector<std::uint32_t> parts() const;  // descending
  std::string to_string() const;             // e.g. [1^3 2^5]
  bool operator==(const Partition&) const = default;
};

Partition partition_from_parts(std::uint32_t n, const std::vector<std::uint32_t>& parts);
Partition partition_of_cycle_type(const std::vector<std::size_t>& type);

/// All partitions of n, largest part first, in reverse lexicographic order
/// of the part lists. CapExceeded above n = 60.
std::vector<Partition> partitions(std::uint32_t n);

mpz_class class_size(const Partition& p);
/// ∏ i^{k_i} k_i!, the centralizer order.
mpz_class centralizer_order(const Partition& p);
std::uint64_t lcm_of(const Partition& p);
/// Cycle type of g^j for g of type p.
Partition power_type(const Partition& p, std::uint64_t j);

enum class Bucket { A, B };

struct SymClassInfo {
  Partition partition;
  mpz_class class_size;
  std::uint64_t order = 1;
  bool has_half_power = false;
  Partition half_power_type;
  Bucket bucket = Bucket::A;
};

struct SymCensusResult {
  std::vector<SymClassInfo> classes;
  MonomialSum sum;
  CountReport total;
  bool formula_value_only = true;  // no GRR claim below n = 19
};

SymCensusResult sym_orientable_census(std::uint32_t n, const ModeSpec& mode = {});

struct SymLRow {
  Partition involution_type;
  mpz_class closed_form;    // double-factorial closed form
  mpz_class centralizer;    // a! 2^b b!
  mpz_class brute_force;    // #{t : t z t^-1 = x}, n <= 8; 0 otherwise
  bool brute_forced = false;
  bool discrepancy = false;  // closed form != centralizer count
};

/// l-values for the two special involution classes at n = 6m + 1.
std::vector<SymLRow> sym_l_table(std::uint32_t n);

/// n = 6m + 1; bucket B holds the classes whose half power has type
/// [1^3 2^(3m-1)] (m odd) or [1^5 2^(3m-2)] (m even). Surface O defers to
/// sym_orientable_census.
SymCensusResult sym_locally_census(std::uint32_t n, Surface surface = Surface::L, const ModeSpec& mode = {});

/// The two involutions for n = 6m + 1, m >= 2, as 0-based permutations.
std::pair<Perm, Perm> build_b1_b2(std::uint32_t n);

struct ThreeInvolutionRow {
  Element representative = 0;
  std::size_t class_size = 0;
  std::uint32_t order = 1;
  std::uint64_t generic_l = 0;
  bool o_term_matches = true;
};

struct ThreeInvolutionResult {
  std::vector<ThreeInvolutionRow> rows;
  CountReport L, O, N;
  bool L_available = true, N_available = true;  // exponents integral
  std::string exponent_issue;
  bool hypothesis_holds = true;
  std::vector<std::pair<Element, Element>> violations;  // (t, x) with tx = xt, t ∉ {1, x}
  bool o_matches_generic = true;
  CountReport generic_O;
};

ThreeInvolutionResult three_involution_census(const FiniteGroup& g, const std::vector<Element>& s,
                                              const ModeSpec& mode = {});

struct ElemAbelianResult {
  std::uint32_t n = 0;
  std::size_t k = 0;
  bool grr_range = false;  // n = 1 or n >= 5
  MonomialSum sum;
  CountReport total;
};

/// Closed forms for (Z_2)^n with |S| = k. N is evaluated as L - O.
ElemAbelianResult elementary_abelian_census(std::uint32_t n, std::size_t k, Surface surface,
                                            const ModeSpec& mode = {});

}  // namespace mapcensus

#endif  // MAPCENSUS_SPECIAL_HPP
