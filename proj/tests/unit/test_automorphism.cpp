#include <doctest.h>

#include <set>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/fixtures.hpp"
#include "mapcensus/oracle.hpp"
#include "test_util.hpp"

using namespace mapcensus;

TEST_SUITE("aut-action") {
  TEST_CASE("automorphism group orders of the fixtures") {
    CHECK(graph_automorphism_group(fixture_instance("K3").graph).size() == 6);
    CHECK(graph_automorphism_group(fixture_instance("C4").graph).size() == 8);
    CHECK(graph_automorphism_group(fixture_instance("C5").graph).size() == 10);
    CHECK(graph_automorphism_group(fixture_instance("CUBE").graph).size() == 48);
  }

  TEST_CASE("automorphisms preserve adjacency, identity first") {
    auto inst = fixture_instance("CUBE");
    auto aut = graph_automorphism_group(inst.graph);
    CHECK(aut.front() == identity_perm(8));
    for (const auto& a : aut)
      for (auto [u, v] : inst.graph.edges()) CHECK(inst.graph.adjacent(a[u], a[v]));
    CHECK_THROWS_AS(graph_automorphism_group(inst.graph, 10), Error);
  }

  TEST_CASE("right regular action") {
    auto g = named_group(GroupFamily::dihedral, 4);
    auto r = right_regular(g);
    for (Element h = 0; h < g.order(); ++h) {
      CHECK(is_semi_regular(r[h]));
      for (Element t = 0; t < g.order(); ++t) CHECK(r[h][t] == g.mul(t, h));
    }
  }

  TEST_CASE("decomposition of the fixtures") {
    for (std::string name : {"K3", "C4", "C5", "CUBE"}) {
      auto inst = fixture_instance(name);
      auto d = decompose(graph_automorphism_group(inst.graph), *inst.group);
      CHECK_FALSE(d.is_grr);
      CHECK_FALSE(d.is_direct_product);
      CHECK(d.regular_part.size() == inst.group->order());
    }
  }

  TEST_CASE("complete graph K6 as Cay(Z_6 : all)") {
    std::vector<Element> s = {1, 2, 3, 4, 5};
    auto inst = make_cayley_instance(named_group(GroupFamily::cyclic, 6), s);
    auto d = decompose(graph_automorphism_group(inst.graph), *inst.group);
    CHECK(d.full_group.size() == 720);
    CHECK_FALSE(d.is_grr);
  }

  TEST_CASE("extended automorphisms commute with alpha and beta, homomorphically") {
    for (std::string name : {"K3", "C4", "C5", "CUBE"}) {
      auto inst = fixture_instance(name);
      const auto& f = *inst.flags;
      auto aut = graph_automorphism_group(inst.graph);
      for (const auto& a : aut) {
        auto x = extend_to_flags(a, f);
        CHECK(compose(x, f.alpha()) == compose(f.alpha(), x));
        CHECK(compose(x, f.beta()) == compose(f.beta(), x));
        CHECK(project_to_vertices(x, f) == a);
      }
      for (std::size_t i = 0; i < aut.size(); i += 3)
        for (std::size_t j = 0; j < aut.size(); j += 5)
          CHECK(extend_to_flags(compose(aut[i], aut[j]), f) == compose(extend_to_flags(aut[i], f), extend_to_flags(aut[j], f)));
    }
  }

  TEST_CASE("orbit lengths") {
    CHECK(orbit_lengths(Perm{1, 0, 2}) == std::vector<std::size_t>{1, 2});
    CHECK_FALSE(is_semi_regular(Perm{1, 0, 2}));
    CHECK(is_semi_regular(Perm{1, 0, 3, 2}));
  }

  TEST_CASE("stable maps are fixed by the automorphism") {
    for (std::string name : {"K3", "C4", "C5", "CUBE"}) {
      auto inst = fixture_instance(name);
      for (const auto& r : right_regular(*inst.group)) {
        auto x = extend_to_flags(r, *inst.flags);
        auto g = construct_stable_witness(r, inst.flags);
        CHECK(conjugate(g.map.P(), g.lift) == g.map.P());
        CHECK(project_to_vertices(g.lift, *inst.flags) == r);
        auto lit = construct_stable_map(r, inst.flags, testutil::all_plus(*inst.flags));
        CHECK(conjugate(lit.P(), x) == lit.P());
        auto w = construct_stable_witness(r, inst.flags, std::nullopt, StableVariant::orientable);
        CHECK(conjugate(w.map.P(), w.lift) == w.map.P());
        CHECK(project_to_vertices(w.lift, *inst.flags) == r);
        CHECK(is_orientable(w.map));
        auto sheet = orientation_orbits(*inst.flags, w.map.P());
        for (std::uint32_t f = 0; f < w.lift.size(); ++f) CHECK(sheet[w.lift[f]] == sheet[f]);
      }
    }
  }

  TEST_CASE("stable maps need semi-regular automorphisms") {
    auto inst = fixture_instance("C4");
    Perm reflection = {0, 3, 2, 1};
    CHECK_THROWS_AS(construct_stable_map(reflection, inst.flags), Error);
  }
}
