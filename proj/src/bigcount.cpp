#include "mapcensus/bigcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "mapcensus/error.hpp"

namespace mapcensus {

ModeSpec parse_mode(const std::string& text) {
  if (text == "exact") return {CountMode::exact, 0};
  if (text == "log2") return {CountMode::log2, 0};
  if (text.rfind("modp:", 0) == 0) {
    std::string num = text.substr(5);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Reason::BadParameter, "bad modulus in '" + text + "'");
    mpz_class p(num);
    if (p < 2 || !mpz_fits_ulong_p(p.get_mpz_t()) || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw Error(Reason::BadParameter, "modulus " + num + " is not a prime below 2^64");
    return {CountMode::mod_p, p.get_ui()};
  }
  throw Error(Reason::BadParameter, "unknown mode '" + text + "' (expected exact, log2 or modp:<p>)");
}

std::string mode_name(const ModeSpec& m) {
  switch (m.mode) {
    case CountMode::exact: return "exact";
    case CountMode::log2: return "log2";
    case CountMode::mod_p: return "modp:" + std::to_string(m.prime);
  }
  return "?";
}

std::string CountReport::to_string() const {
  switch (mode) {
    case CountMode::exact: return exact_value.get_str();
    case CountMode::log2: {
      if (is_zero) return "0";
      char buf[64];
      std::snprintf(buf, sizeof buf, "2^%.15Lg", log2_value);
      return buf;
    }
    case CountMode::mod_p: return std::to_string(residue) + " (mod " + std::to_string(prime) + ")";
  }
  return "?";
}

void MonomialSum::add(const mpq_class& coeff, const mpz_class& e2, const mpz_class& eb) {
  if (coeff == 0) return;
  mpz_class a = e2, b = eb;
  if (base_ == 1) b = 0;
  // Fold powers of two into e2.
  if (base_ > 1 && (base_ & (base_ - 1)) == 0) {
    a += b * static_cast<unsigned long>(__builtin_ctzll(base_));
    b = 0;
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->e2 == a && it->eb == b) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coeff, a, b});
}

void MonomialSum::add(const MonomialSum& other, const mpq_class& scale) {
  if (other.base_ != base_ && !other.terms_.empty())
    throw Error(Reason::InternalInconsistency, "adding monomial sums over different bases");
  for (const auto& t : other.terms_) add(t.coeff * scale, t.e2, t.eb);
}

void MonomialSum::scale(const mpq_class& factor) {
  if (factor == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coeff *= factor;
}

mpq_class MonomialSum::exact(std::uint64_t max_bits) const {
  mpq_class sum = 0;
  const long double lb = base_ > 1 ? std::log2(static_cast<long double>(base_)) : 0.0L;
  for (const auto& t : terms_) {
    if (t.e2 < 0 || t.eb < 0) throw Error(Reason::InternalInconsistency, "negative exponent in exact evaluation");
    if (t.e2 > max_bits || t.eb.get_d() * static_cast<double>(lb) > static_cast<double>(max_bits))
      throw Error(Reason::CapExceeded, "exact value needs more than " + std::to_string(max_bits) +
                                           " bits; use log2 or modp mode");
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), t.e2.get_ui());
    if (t.eb > 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), base_, t.eb.get_ui());
      v *= p;
    }
    sum += t.coeff * mpq_class(v);
  }
  sum.canonicalize();
  return sum;
}

long double log2_mpz(const mpz_class& v) {
  if (v <= 0) throw Error(Reason::BadParameter, "log2 of a non-positive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  // refine with more bits when available
  std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (bits > 64) {
    mpz_class top = v >> static_cast<unsigned long>(bits - 64);
    long double m = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
    return std::log2(m) + static_cast<long double>(bits - 64);
  }
  return std::log2(static_cast<long double>(mant)) + static_cast<long double>(exp);
}

namespace {

long double log2_abs_q(const mpq_class& q) {
  mpz_class num = abs(q.get_num());
  return log2_mpz(num) - log2_mpz(q.get_den());
}

long double mpz_to_ld(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<long double>(v.get_si());
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace

long double MonomialSum::log2(bool* is_zero) const {
  if (is_zero) *is_zero = false;
  if (terms_.empty()) {
    if (is_zero) {
      *is_zero = true;
      return 0;
    }
    throw Error(Reason::BadParameter, "log2 of zero");
  }
  const long double lb = base_ > 1 ? std::log2(static_cast<long double>(base_)) : 0.0L;
  bool mixed = std::any_of(terms_.begin(), terms_.end(), [](const Monomial& t) { return t.eb != 0; });
  // Pivot exponent: exact maximum of e2 for pure powers of two, else the
  // largest approximate log2 magnitude.
  std::size_t pivot = 0;
  std::vector<long double> approx(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    approx[i] = mpz_to_ld(terms_[i].e2) + mpz_to_ld(terms_[i].eb) * lb;
    bool better = mixed ? approx[i] > approx[pivot] : terms_[i].e2 > terms_[pivot].e2;
    if (better) pivot = i;
  }
  const Monomial& pt = terms_[pivot];
  std::vector<long double> t(terms_.size());
  long double m = -INFINITY;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    long double diff;
    if (!mixed) {
      mpz_class d = terms_[i].e2 - pt.e2;  // exact
      diff = mpz_to_ld(d);
    } else {
      mpz_class d2 = terms_[i].e2 - pt.e2, db = terms_[i].eb - pt.eb;
      diff = mpz_to_ld(d2) + mpz_to_ld(db) * lb;
    }
    t[i] = diff + log2_abs_q(terms_[i].coeff);
    m = std::max(m, t[i]);
  }
  long double s = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    long double d = t[i] - m;
    if (d < -20000) continue;
    long double v = std::exp2(d);
    s += terms_[i].coeff < 0 ? -v : v;
  }
  if (s <= 0) {
    if (s == 0 && is_zero) {
      *is_zero = true;
      return 0;
    }
    throw Error(Reason::BadParameter, "log2 of a non-positive sum");
  }
  long double base_log = mixed ? approx[pivot] : mpz_to_ld(pt.e2);
  return base_log + m + std::log2(s);
}

std::uint64_t MonomialSum::mod(std::uint64_t p) const {
  mpz_class P(static_cast<unsigned long>(p));
  mpz_class acc = 0;
  for (const auto& t : terms_) {
    mpz_class num = t.coeff.get_num() % P;
    mpz_class den = t.coeff.get_den() % P;
    if (den == 0) throw Error(Reason::BadParameter, "denominator divisible by the modulus " + std::to_string(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    mpz_class two = 2, b = static_cast<unsigned long>(base_), x, y;
    mpz_powm(x.get_mpz_t(), two.get_mpz_t(), t.e2.get_mpz_t(), P.get_mpz_t());
    mpz_powm(y.get_mpz_t(), b.get_mpz_t(), t.eb.get_mpz_t(), P.get_mpz_t());
    acc = (acc + num * inv % P * x % P * y) % P;
  }
  if (acc < 0) acc += P;
  return acc.get_ui();
}

CountReport MonomialSum::evaluate(const ModeSpec& mode, const std::string& context) const {
  CountReport r;
  r.mode = mode.mode;
  switch (mode.mode) {
    case CountMode::exact: {
      mpq_class v = exact();
      if (v.get_den() != 1)
        throw Error(Reason::NonIntegralSum, "sum " + v.get_str() + " is not an integer" +
                                                (context.empty() ? "" : "\n" + context));
      r.exact_value = v.get_num();
      break;
    }
    case CountMode::log2: r.log2_value = log2(&r.is_zero); break;
    case CountMode::mod_p:
      r.prime = mode.prime;
      r.residue = mod(mode.prime);
      break;
  }
  return r;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace mapcensus
