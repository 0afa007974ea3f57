#ifndef MAPCENSUS_BIGCOUNT_HPP
#define MAPCENSUS_BIGCOUNT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mapcensus {

enum class CountMode { exact, log2, mod_p };

struct ModeSpec {
  CountMode mode = CountMode::exact;
  std::uint64_t prime = 0;  // mod_p only
};

/// Parses "exact", "log2" or "modp:<p>".
ModeSpec parse_mode(const std::string& text);
std::string mode_name(const ModeSpec& m);

struct CountReport {
  CountMode mode = CountMode::exact;
  mpz_class exact_value;          // exact
  long double log2_value = 0;     // log2
  std::uint64_t residue = 0;      // mod_p
  std::uint64_t prime = 0;        // mod_p
  bool is_zero = false;           // log2 mode: the value is 0

  std::string to_string() const;
};

/// coeff * 2^e2 * base^eb.
struct Monomial {
  mpq_class coeff;
  mpz_class e2;
  mpz_class eb;
};

/// A sum of monomials over one fixed base; like exponents merge exactly.
class MonomialSum {
 public:
  explicit MonomialSum(std::uint64_t base = 2) : base_(base) {}

  std::uint64_t base() const noexcept { return base_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }

  void add(const mpq_class& coeff, const mpz_class& e2, const mpz_class& eb);
  void add(const MonomialSum& other, const mpq_class& scale = 1);
  void scale(const mpq_class& factor);

  /// Exact rational value; CapExceeded if a term would need more than
  /// `max_bits` bits.
  mpq_class exact(std::uint64_t max_bits = std::uint64_t{1} << 28) const;
  /// log2 of the value; BadParameter if the value is not positive.
  long double log2(bool* is_zero = nullptr) const;
  /// Value mod p; BadParameter if a denominator vanishes mod p.
  std::uint64_t mod(std::uint64_t p) const;

  /// Evaluates in the requested mode. Exact mode requires an integer and
  /// throws NonIntegralSum otherwise.
  CountReport evaluate(const ModeSpec& mode, const std::string& context = "") const;

 private:
  std::uint64_t base_;
  std::vector<Monomial> terms_;
};

/// log2 of a positive integer to long double precision.
long double log2_mpz(const mpz_class& v);

mpz_class factorial(std::uint64_t n);

}  // namespace mapcensus

#endif  // MAPCENSUS_BIGCOUNT_HPP
