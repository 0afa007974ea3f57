#include <doctest.h>

#include <sstream>

#include "mapcensus/cayley.hpp"
#include "mapcensus/error.hpp"

using namespace mapcensus;

TEST_SUITE("cayley-flags") {
  TEST_CASE("issues come in a fixed order") {
    auto z6 = named_group(GroupFamily::cyclic, 6);
    std::vector<Element> s = {0, 1, 9};
    auto issues = check_cayley_set(z6, s);
    REQUIRE(!issues.empty());
    CHECK(issues.front().reason == Reason::OutOfRange);
    s = {0, 1, 5};
    CHECK(check_cayley_set(z6, s).front().reason == Reason::ContainsIdentity);
    s = {1, 2};
    CHECK(check_cayley_set(z6, s).front().reason == Reason::NotInverseClosed);
    s = {3};
    CHECK(check_cayley_set(z6, s).front().reason == Reason::TooSmall);
    s = {2, 4};
    CHECK(check_cayley_set(z6, s).front().reason == Reason::NotGenerating);
    s = {1, 5};
    CHECK(check_cayley_set(z6, s).empty());
  }

  TEST_CASE("validate throws the first reason") {
    auto z6 = named_group(GroupFamily::cyclic, 6);
    std::vector<Element> s = {2, 4};
    try {
      validate_cayley_set(z6, s);
      FAIL("expected NotGenerating");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::NotGenerating);
    }
  }

  TEST_CASE("Cayley graph of the cube") {
    std::vector<Element> s = {1, 2, 4};
    auto inst = make_cayley_instance(named_group(GroupFamily::elementary_abelian_2, 3), s);
    CHECK(inst.graph.vertex_count == 8);
    CHECK(inst.graph.edge_count() == 12);
    for (const auto& adj : inst.graph.adjacency) CHECK(adj.size() == 3);
    CHECK(inst.graph.adjacent(0, 1));
    CHECK_FALSE(inst.graph.adjacent(0, 3));
  }

  TEST_CASE("flag id convention") {
    std::vector<Element> s = {1, 4};
    auto inst = make_cayley_instance(named_group(GroupFamily::cyclic, 5), s);
    const auto& f = *inst.flags;
    CHECK(f.flag_count() == 20);
    CHECK(flag_id(f, 2, 4, Sign::minus) == 2 * (2 * 2 + 1) + 1);
    for (std::uint32_t x = 0; x < f.flag_count(); ++x) {
      auto d = flag_decode(f, x);
      CHECK(flag_id(f, d.g, d.s, d.sign) == x);
      CHECK(f.alpha(x) == (x ^ 1u));
      auto b = flag_decode(f, f.beta(x));
      const auto& g = *inst.group;
      CHECK(b.g == g.mul(d.s, d.g));
      CHECK(b.s == g.inverse(d.s));
      CHECK(b.sign == d.sign);
      CHECK(f.vertex_of(x) == d.g);
    }
  }

  TEST_CASE("quadricells and darts") {
    std::vector<Element> s = {1, 2};
    auto inst = make_cayley_instance(named_group(GroupFamily::cyclic, 3), s);
    const auto& f = *inst.flags;
    CHECK(f.quadricell_count() == inst.graph.edge_count());
    CHECK(f.dart_count() == 2 * inst.graph.edge_count());
    for (std::size_t e = 0; e < f.quadricell_count(); ++e) {
      auto q = f.quadricell(e);
      CHECK(q[1] == f.alpha(q[0]));
      CHECK(q[2] == f.beta(q[0]));
      CHECK(q[3] == f.alpha(f.beta(q[0])));
      for (auto x : q) CHECK(f.quadricell_of(x) == e);
    }
  }

  TEST_CASE("generic flag space rejects bad involutions") {
    Perm a = {1, 0, 3, 2}, b = {2, 3, 0, 1};
    CHECK_NOTHROW(FlagSpace(a, b));
    Perm bad = {1, 2, 0, 3};
    CHECK_THROWS_AS(FlagSpace(bad, b), Error);
  }

  TEST_CASE("cayset round trip and parse errors") {
    std::vector<Element> s = {1, 3, 5};
    std::ostringstream out;
    write_cayset(out, s);
    std::istringstream in(out.str());
    CHECK(read_cayset(in) == s);
    std::istringstream bad("cayset 3\n1 2\n");
    CHECK_THROWS_AS(read_cayset(bad), Error);
  }
}
