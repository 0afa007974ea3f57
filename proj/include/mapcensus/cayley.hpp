#ifndef MAPCENSUS_CAYLEY_HPP
#define MAPCENSUS_CAYLEY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mapcensus/error.hpp"
#include "mapcensus/group.hpp"
#include "mapcensus/permutation.hpp"

namespace mapcensus {

/// Inverse-closed, identity-free generating set, sorted by element index.
struct CayleySet {
  std::vector<Element> members;
  std::vector<std::int32_t> rank;  // rank[g] = position of g in members, or -1

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element g) const noexcept { return g < rank.size() && rank[g] >= 0; }
};

struct CayleyIssue {
  Reason reason;
  std::string message;
};

/// Every problem with S, in a fixed order; empty means S is valid.
std::vector<CayleyIssue> check_cayley_set(const FiniteGroup& g, std::span<const Element> s);

/// Throws Error with the first issue's reason; the message lists all of them.
CayleySet validate_cayley_set(const FiniteGroup& g, std::span<const Element> s);

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted

  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;  // u < v, sorted
  std::size_t edge_count() const;
};

Graph build_cayley_graph(const FiniteGroup& g, const CayleySet& s);

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

struct Flag {
  Element g = 0;
  Element s = 0;
  Sign sign = Sign::plus;
  bool operator==(const Flag&) const = default;
};

struct CayleyLabeling {
  std::shared_ptr<const FiniteGroup> group;
  CayleySet set;
};

/// Flags with the two fixed involutions. Quadricells are the orbits of
/// <alpha, beta>; dart-ends are the orbits of alpha.
class FlagSpace {
 public:
  /// Generic space; validates the involutions.
  FlagSpace(Perm alpha, Perm beta);

  std::size_t flag_count() const noexcept { return alpha_.size(); }
  const Perm& alpha() const noexcept { return alpha_; }
  const Perm& beta() const noexcept { return beta_; }
  std::uint32_t alpha(std::uint32_t x) const noexcept { return alpha_[x]; }
  std::uint32_t beta(std::uint32_t x) const noexcept { return beta_[x]; }

  std::size_t quadricell_count() const noexcept { return quads_.size(); }
  /// Quadricell e as (x, αx, βx, αβx) with x its least flag.
  const std::array<std::uint32_t, 4>& quadricell(std::size_t e) const { return quads_[e]; }
  std::uint32_t quadricell_of(std::uint32_t x) const noexcept { return quad_of_[x]; }

  std::size_t dart_count() const noexcept { return alpha_.size() / 2; }
  std::uint32_t dart_of(std::uint32_t x) const noexcept { return dart_of_[x]; }

  bool is_cayley() const noexcept { return labeling_.has_value(); }
  const std::optional<CayleyLabeling>& labeling() const noexcept { return labeling_; }

  /// Vertex (group element) carrying flag x; Cayley spaces only.
  Element vertex_of(std::uint32_t x) const;

 private:
  friend FlagSpace build_flag_space(std::shared_ptr<const FiniteGroup>, const CayleySet&);
  void index();

  Perm alpha_, beta_;
  std::vector<std::array<std::uint32_t, 4>> quads_;
  std::vector<std::uint32_t> quad_of_;
  std::vector<std::uint32_t> dart_of_;
  std::optional<CayleyLabeling> labeling_;
};

/// Flag id = 2 * (g * |S| + rank(s)) + (sign == minus).
/// alpha: (g,s,σ) -> (g,s,-σ); beta: (g,s,σ) -> (sg, s^-1, σ).
FlagSpace build_flag_space(std::shared_ptr<const FiniteGroup> g, const CayleySet& s);

std::uint32_t flag_id(const FlagSpace& f, Element g, Element s, Sign sign);
Flag flag_decode(const FlagSpace& f, std::uint32_t id);

/// Group, set, graph and flag space bundled together.
struct CayleyInstance {
  std::shared_ptr<const FiniteGroup> group;
  CayleySet set;
  Graph graph;
  std::shared_ptr<const FlagSpace> flags;
};

CayleyInstance make_cayley_instance(FiniteGroup g, std::span<const Element> s);

// Cayley set file: "cayset <k>" then k element indices.
std::vector<Element> read_cayset(std::istream& in);
std::vector<Element> load_cayset(const std::string& path);
void write_cayset(std::ostream& out, std::span<const Element> s);

}  // namespace mapcensus

#endif  // MAPCENSUS_CAYLEY_HPP
