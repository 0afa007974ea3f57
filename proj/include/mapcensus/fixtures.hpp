#ifndef MAPCENSUS_FIXTURES_HPP
#define MAPCENSUS_FIXTURES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mapcensus/cayley.hpp"
#include "mapcensus/tutte_map.hpp"

namespace mapcensus {

enum class FixtureKind { cayley, map };

struct FixtureInfo {
  std::string name;
  FixtureKind kind = FixtureKind::cayley;
  std::string description;
  // documented inventory
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t aut_order = 0;           // cayley
  std::uint64_t orientable_census = 0;  // cayley, acting group R(G)
  std::size_t faces = 0;               // map
  std::vector<std::size_t> face_lengths;
  std::int64_t euler_characteristic = 0;
  bool orientable = true;
};

/// K3, C4, C5, CUBE, FIG1 in that order.
const std::vector<FixtureInfo>& fixture_list();
const FixtureInfo& fixture_info(const std::string& name);  // BadParameter if unknown
bool is_fixture(const std::string& name);

FiniteGroup fixture_group(const std::string& name);
std::vector<Element> fixture_cayset(const std::string& name);
CayleyInstance fixture_instance(const std::string& name);
MapPermutation fixture_map(const std::string& name);

struct FixtureCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;  // one per checked quantity
};

/// Loads the fixture, validates it, and compares it with its documented
/// inventory. Cayley fixtures also run the orientable formula and oracle.
FixtureCheck run_fixture_check(const std::string& name, unsigned workers = 1);

/// Writes the fixture files: <name>.group and <name>.cayset, or <name>.map.
std::vector<std::string> dump_fixture(const std::string& name, const std::string& dir);

}  // namespace mapcensus

#endif  // MAPCENSUS_FIXTURES_HPP
