#include <doctest.h>

#include "mapcensus/error.hpp"
#include "mapcensus/fixtures.hpp"
#include "mapcensus/oracle.hpp"

using namespace mapcensus;

namespace {

std::vector<Perm> rg_flags(const CayleyInstance& inst) {
  std::vector<Perm> out;
  for (const auto& r : right_regular(*inst.group)) out.push_back(extend_to_flags(r, *inst.flags));
  return out;
}

}  // namespace

TEST_SUITE("burnside-oracle") {
  TEST_CASE("semantics names") {
    CHECK(parse_semantics("raw") == Semantics::raw);
    CHECK(semantics_name(Semantics::dart) == "dart");
    CHECK_THROWS_AS(parse_semantics("x"), Error);
    CHECK(parse_acting("rgxh") == ActingChoice::rgxh);
  }

  TEST_CASE("enumeration sizes") {
    CHECK(enumeration_size(*fixture_instance("K3").flags, Semantics::raw) == 8);
    CHECK(enumeration_size(*fixture_instance("CUBE").flags, Semantics::raw) == 16777216);
  }

  TEST_CASE("ground sets of the small fixtures") {
    for (std::string n : {"K3", "C4", "C5"}) {
      auto inst = fixture_instance(n);
      auto sigma = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::L);
      CHECK(sigma.size() == 2);
      auto dart = enumerate_embeddings(inst.flags, Semantics::dart, Surface::L);
      CHECK(dart.size() == 1);
      auto raw = enumerate_embeddings(inst.flags, Semantics::raw, Surface::L);
      CHECK(raw.size() == std::size_t{1} << inst.group->order());
    }
  }

  TEST_CASE("CUBE sigma census") {
    auto inst = fixture_instance("CUBE");
    auto gs = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::L, kDefaultGroundCap, 2);
    CHECK(gs.size() == 4224);
    auto oc = burnside_count(rg_flags(inst), gs, 2);
    CHECK(oc.burnside_count == 656);
    CHECK(oc.union_find_count == 656);
    CHECK(oc.fixed_counts.front() == 4224);
    auto go = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::O);
    CHECK(go.size() == 256);
    CHECK(burnside_count(rg_flags(inst), go).burnside_count == 46);
  }

  TEST_CASE("RAW on CUBE exceeds the ground cap") {
    auto inst = fixture_instance("CUBE");
    try {
      enumerate_embeddings(inst.flags, Semantics::raw, Surface::L);
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::CapExceeded);
    }
  }

  TEST_CASE("representatives are canonical and the action is a permutation") {
    auto inst = fixture_instance("C4");
    auto gs = enumerate_embeddings(inst.flags, Semantics::raw, Surface::L);
    for (const auto& x : rg_flags(inst)) {
      std::vector<int> hit(gs.size(), 0);
      for (std::size_t i = 0; i < gs.size(); ++i) hit[act_on_class(gs, x, i)]++;
      for (auto h : hit) CHECK(h == 1);
    }
  }

  TEST_CASE("worker count does not change results") {
    auto inst = fixture_instance("CUBE");
    auto a = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::N, kDefaultGroundCap, 1);
    auto b = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::N, kDefaultGroundCap, 4);
    CHECK(a.representatives == b.representatives);
    CHECK(burnside_count(rg_flags(inst), a, 1).fixed_counts == burnside_count(rg_flags(inst), b, 3).fixed_counts);
  }

  TEST_CASE("comparison report on CUBE") {
    auto inst = fixture_instance("CUBE");
    auto o = compare_with_formula(inst, {}, Surface::O, Semantics::sigma);
    CHECK(o.oracle_total == 46);
    CHECK(o.formula_total == 46);
    CHECK(o.total_ratio == 1);
    auto l = compare_with_formula(inst, {}, Surface::L, Semantics::sigma);
    CHECK(l.oracle_total == 656);
    CHECK(l.formula_total == 640);
    CHECK(l.lines.front().ratio == mpq_class(33, 32));
    CHECK(l.oracle_O + l.oracle_N == l.oracle_L);
  }

  TEST_CASE("acting group selection") {
    auto inst = fixture_instance("CUBE");
    CHECK(select_acting_group(inst, ActingChoice::rg).flag_maps.size() == 8);
    CHECK(select_acting_group(inst, ActingChoice::full).flag_maps.size() == 48);
    CHECK(select_acting_group(inst, ActingChoice::rgxh).flag_maps.size() == 8);
  }
}
