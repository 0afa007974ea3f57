#include <doctest.h>

#include <cmath>

#include "mapcensus/bigcount.hpp"
#include "mapcensus/error.hpp"

using namespace mapcensus;

TEST_SUITE("census-formulas") {
  TEST_CASE("mode parsing") {
    CHECK(parse_mode("exact").mode == CountMode::exact);
    CHECK(parse_mode("log2").mode == CountMode::log2);
    auto m = parse_mode("modp:1000003");
    CHECK(m.mode == CountMode::mod_p);
    CHECK(m.prime == 1000003);
    CHECK_THROWS_AS(parse_mode("modp:1000"), Error);
    CHECK_THROWS_AS(parse_mode("modp:x"), Error);
    CHECK_THROWS_AS(parse_mode("fast"), Error);
    CHECK(mode_name(m) == "modp:1000003");
  }

  TEST_CASE("like terms merge and powers of two fold") {
    MonomialSum s(4);
    s.add(1, 1, 1);  // 2 * 4 = 8
    s.add(1, 3, 0);  // 8
    CHECK(s.terms().size() == 1);
    CHECK(s.exact() == 16);
    s.add(-2, 3, 0);
    CHECK(s.terms().empty());
  }

  TEST_CASE("exact, log2 and mod p agree") {
    MonomialSum s(6);
    s.add(mpq_class(1, 8), 0, 10);
    s.add(mpq_class(7, 8), 0, 5);
    mpq_class v = s.exact();
    REQUIRE(v.get_den() == 1);
    long double lg = s.log2();
    CHECK(std::fabs(lg - log2_mpz(v.get_num())) < 1e-9L * lg);
    const std::uint64_t p = 1000003;
    mpz_class r = v.get_num() % static_cast<unsigned long>(p);
    CHECK(s.mod(p) == r.get_ui());
  }

  TEST_CASE("non-integral sums are refused in exact mode") {
    MonomialSum s(2);
    s.add(mpq_class(1, 3), 0, 1);
    try {
      s.evaluate(ModeSpec{});
      FAIL("expected NonIntegralSum");
    } catch (const Error& e) {
      CHECK(e.reason() == Reason::NonIntegralSum);
    }
  }

  TEST_CASE("exact size cap") {
    MonomialSum s(2);
    s.add(1, mpz_class(1) << 40, 0);
    CHECK_THROWS_AS(s.exact(), Error);
    CHECK(s.log2() == doctest::Approx(std::ldexp(1.0, 40)));
  }

  TEST_CASE("report strings") {
    MonomialSum s(2);
    s.add(1, 10, 0);
    CHECK(s.evaluate(ModeSpec{}).to_string() == "1024");
    CHECK(s.evaluate(parse_mode("modp:7")).to_string().find("mod 7") != std::string::npos);
    CHECK(s.evaluate(parse_mode("log2")).to_string().rfind("2^", 0) == 0);
  }

  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
  }
}
