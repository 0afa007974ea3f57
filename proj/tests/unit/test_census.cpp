#include <doctest.h>

#include <cmath>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/fixtures.hpp"

using namespace mapcensus;

namespace {

mpz_class total(const std::string& name, Surface s) { return census(fixture_instance(name), {}, s).total.exact_value; }

}  // namespace

TEST_SUITE("census-formulas") {
  TEST_CASE("surface names") {
    CHECK(parse_surface("O") == Surface::O);
    CHECK(surface_name(Surface::N) == "N");
    CHECK_THROWS_AS(parse_surface("X"), Error);
  }

  TEST_CASE("CUBE class statistics") {
    auto inst = fixture_instance("CUBE");
    auto rg = right_regular(*inst.group);
    for (Element g = 1; g < 8; ++g) {
      auto st = class_stats(inst.graph, rg[g]);
      CHECK(st.order == 2);
      if (inst.set.contains(g)) {
        CHECK(st.l_value == 4);
        CHECK(st.branch == Branch::Delta);
        CHECK(st.alpha_exponent == 4);
        CHECK(phi_formula(st, Surface::L, 3, 8).exact_value == 256);
      } else {
        CHECK(st.l_value == 0);
        CHECK(st.branch == Branch::Theta);
        CHECK(st.alpha_exponent == 2);
        CHECK(phi_formula(st, Surface::L, 3, 8).exact_value == 64);
      }
      CHECK(phi_formula(st, Surface::O, 3, 8).exact_value == 16);
    }
    auto id = class_stats(inst.graph, rg[0]);
    CHECK(id.alpha_exponent == 4);
    CHECK(phi_formula(id, Surface::L, 3, 8).exact_value == 4096);
  }

  TEST_CASE("fixture totals") {
    CHECK(total("CUBE", Surface::O) == 46);
    CHECK(total("CUBE", Surface::L) == 640);
    CHECK(total("CUBE", Surface::N) == 594);
    for (std::string n : {"K3", "C4", "C5"}) {
      CHECK(total(n, Surface::O) == 1);
      CHECK(total(n, Surface::L) == 1);
      CHECK(total(n, Surface::N) == 0);
    }
  }

  TEST_CASE("additivity on every fixture") {
    for (std::string n : {"K3", "C4", "C5", "CUBE"})
      CHECK(total(n, Surface::O) + total(n, Surface::N) == total(n, Surface::L));
  }

  TEST_CASE("non-semi-regular automorphisms are refused") {
    auto inst = fixture_instance("C4");
    CHECK_THROWS_AS(class_stats(inst.graph, Perm{0, 3, 2, 1}), Error);
  }

  TEST_CASE("H must commute with R(G)") {
    auto inst = fixture_instance("C4");
    std::vector<GraphAutomorphism> h = {identity_perm(4), Perm{0, 3, 2, 1}};
    CHECK_THROWS_AS(census(inst, h, Surface::O), Error);
  }

  TEST_CASE("K4 as Cay(Z_2^2 : all)") {
    // (2^4 + 3 * 2^2) / 4
    std::vector<Element> s = {1, 2, 3};
    auto inst = make_cayley_instance(named_group(GroupFamily::elementary_abelian_2, 2), s);
    auto r = census(inst, {}, Surface::O);
    CHECK(r.acting_order == 4);
    CHECK(r.total.exact_value == 7);
  }

  TEST_CASE("grr_census matches census on abelian groups") {
    for (std::string n : {"K3", "C4", "C5", "CUBE"})
      for (auto s : {Surface::O, Surface::N, Surface::L}) {
        auto inst = fixture_instance(n);
        CHECK(grr_census(inst, s).total.exact_value == census(inst, {}, s).total.exact_value);
      }
  }

  TEST_CASE("odd order shortcut") {
    auto r = grr_census(fixture_instance("C5"), Surface::L);
    CHECK(r.odd_order_shortcut_used);
    auto r2 = grr_census(fixture_instance("C4"), Surface::L);
    CHECK_FALSE(r2.odd_order_shortcut_used);
  }

  TEST_CASE("log2 and mod p agree with exact") {
    auto inst = fixture_instance("CUBE");
    auto e = census(inst, {}, Surface::L).total.exact_value;
    auto l = census(inst, {}, Surface::L, parse_mode("log2")).total.log2_value;
    CHECK(l == doctest::Approx(std::log2(e.get_d())).epsilon(1e-12));
    auto m = census(inst, {}, Surface::L, parse_mode("modp:101")).total.residue;
    CHECK(m == mpz_class(e % 101).get_ui());
  }

  TEST_CASE("D6 with three reflections: R(G)xH has a non-semi-regular element") {
    auto d = named_group(GroupFamily::dihedral, 6);
    std::vector<Element> s = {6, 7, 8};
    auto inst = make_cayley_instance(d, s);
    auto dec = decompose(graph_automorphism_group(inst.graph), d);
    CHECK(dec.is_direct_product);
    CHECK(dec.complement.size() == 2);
    std::size_t bad = 0;
    for (const auto& r : right_regular(d))
      for (const auto& h : dec.complement) bad += !is_semi_regular(compose(r, h));
    CHECK(bad > 0);
    try {
      census(inst, dec.complement, Surface::O);
      FAIL("expected NotSemiRegular");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::NotSemiRegular);
    }
    CHECK(census(inst, {}, Surface::O).total.exact_value == 382);
  }
}
