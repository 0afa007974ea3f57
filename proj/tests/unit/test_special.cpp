#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mapcensus/error.hpp"
#include "mapcensus/special.hpp"

using namespace mapcensus;

TEST_SUITE("special-census") {
  TEST_CASE("partition counts") {
    const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (std::uint32_t n = 1; n <= 20; ++n) CHECK(partitions(n).size() == p[n]);
    CHECK_THROWS_AS(partitions(61), Error);
  }

  TEST_CASE("class sizes sum to n!") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
      mpz_class s = 0;
      for (const auto& q : partitions(n)) s += class_size(q);
      CHECK(s == factorial(n));
    }
  }

  TEST_CASE("power rule matches direct powering") {
    for (std::uint32_t n = 1; n <= 7; ++n) {
      Perm p = identity_perm(n);
      do {
        auto type = partition_of_cycle_type(cycle_type(p));
        for (std::uint64_t j = 1; j <= 6; ++j)
          CHECK(power_type(type, j) == partition_of_cycle_type(cycle_type(power(p, j))));
        CHECK(lcm_of(type) == perm_order(p));
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }

  TEST_CASE("half power of an n-cycle") {
    for (std::uint32_t n = 2; n <= 12; n += 2) {
      auto t = power_type(partition_from_parts(n, {n}), n / 2);
      CHECK(t.k[2] == n / 2);
    }
  }

  TEST_CASE("orientable sum for n = 3") {
    // 2^6/6 + 2^3/2 + 2^2/3
    CHECK(sym_orientable_census(3).total.exact_value == 16);
    auto r = sym_orientable_census(3);
    CHECK(r.formula_value_only);
    CHECK(r.classes.size() == 3);
  }

  TEST_CASE("exact and log2 agree for n <= 8") {
    for (std::uint32_t n = 2; n <= 8; ++n) {
      auto e = sym_orientable_census(n).total.exact_value;
      auto l = sym_orientable_census(n, parse_mode("log2")).total.log2_value;
      CHECK(std::fabs(static_cast<double>(l - log2_mpz(e))) <= 1e-9 * static_cast<double>(l));
    }
  }

  TEST_CASE("exact mode is capped") {
    CHECK_THROWS_AS(sym_orientable_census(11), Error);
    CHECK(sym_orientable_census(19, parse_mode("log2")).total.log2_value > 1e17L);
  }

  TEST_CASE("b1 and b2") {
    for (std::uint32_t n = 13; n <= 43; n += 6) {
      auto [b1, b2] = build_b1_b2(n);
      CHECK(is_identity(compose(b1, b1)));
      CHECK(is_identity(compose(b2, b2)));
      const std::uint32_t m = (n - 1) / 6;
      auto t1 = partition_of_cycle_type(cycle_type(b1));
      auto t2 = partition_of_cycle_type(cycle_type(b2));
      CHECK(t1.k[1] == 3);
      CHECK(t1.k[2] == 3 * m - 1);
      CHECK(t2.k[1] == 5);
      CHECK(t2.k[2] == 3 * m - 2);
    }
    CHECK_THROWS_AS(build_b1_b2(7), Error);
    CHECK_THROWS_AS(build_b1_b2(14), Error);
  }

  TEST_CASE("l table recomputation") {
    auto rows = sym_l_table(7);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].brute_forced);
    CHECK(rows[0].brute_force == rows[0].centralizer);
    CHECK_FALSE(rows[0].discrepancy);
    CHECK(rows[1].brute_force == rows[1].centralizer);
    CHECK(rows[1].closed_form == 1800);
    CHECK(rows[1].centralizer == 240);
    CHECK(rows[1].discrepancy);
  }

  TEST_CASE("bucket classification") {
    auto r = sym_locally_census(7, Surface::L);
    for (const auto& c : r.classes) {
      if (c.order % 2 == 1) CHECK(c.bucket == Bucket::A);
      if (c.bucket == Bucket::B) CHECK(c.half_power_type == partition_from_parts(7, {2, 2, 1, 1, 1}));
    }
    auto o = sym_locally_census(7, Surface::O).total.exact_value;
    auto n = sym_locally_census(7, Surface::N).total.exact_value;
    CHECK(o + n == r.total.exact_value);
  }

  TEST_CASE("three involutions on D6") {
    auto d6 = named_group(GroupFamily::dihedral, 6);
    auto r = three_involution_census(d6, {6, 7, 8});
    CHECK_FALSE(r.hypothesis_holds);
    CHECK(std::any_of(r.violations.begin(), r.violations.end(), [](auto v) { return v.first == 3; }));
    CHECK(r.o_matches_generic);
    CHECK(r.O.exact_value == r.generic_O.exact_value);
    REQUIRE(r.L_available);
    CHECK(r.O.exact_value + r.N.exact_value == r.L.exact_value);
  }

  TEST_CASE("three involutions: errors and non-integral exponents") {
    auto d6 = named_group(GroupFamily::dihedral, 6);
    CHECK_THROWS_AS(three_involution_census(d6, {1, 6, 7}), Error);
    CHECK_THROWS_AS(three_involution_census(d6, {6, 8, 10}), Error);
    auto d5 = named_group(GroupFamily::dihedral, 5);
    auto r = three_involution_census(d5, {5, 6, 7});
    CHECK_FALSE(r.L_available);
    CHECK(r.o_matches_generic);
  }

  TEST_CASE("elementary abelian orientable closed form") {
    CHECK(elementary_abelian_census(3, 3, Surface::O).total.exact_value == 46);
    mpz_class k = 24;  // (5-1)!
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), k.get_mpz_t(), 32);
    mpz_pow_ui(b.get_mpz_t(), k.get_mpz_t(), 16);
    CHECK(elementary_abelian_census(5, 5, Surface::O).total.exact_value == (a + 31 * b) / 32);
    CHECK_THROWS_AS(elementary_abelian_census(3, 2, Surface::O), Error);
    CHECK_FALSE(elementary_abelian_census(3, 3, Surface::O).grr_range);
    CHECK(elementary_abelian_census(5, 5, Surface::O).grr_range);
  }
}
