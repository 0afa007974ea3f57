#include "mapcensus/special.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mapcensus/error.hpp"

namespace mapcensus {

std::uint32_t Partition::n() const {
  std::uint32_t s = 0;
  for (std::size_t i = 1; i < k.size(); ++i) s += static_cast<std::uint32_t>(i) * k[i];
  return s;
}

std::vector<std::uint32_t> Partition::parts() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = k.size(); i-- > 1;)
    for (std::uint32_t j = 0; j < k[i]; ++j) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << i << '^' << k[i];
  }
  os << ']';
  return os.str();
}

Partition partition_from_parts(std::uint32_t n, const std::vector<std::uint32_t>& parts) {
  Partition p;
  p.k.assign(n + 1, 0);
  for (auto x : parts) {
    if (x == 0 || x > n) throw Error(Reason::BadParameter, "part " + std::to_string(x) + " out of range");
    ++p.k[x];
  }
  if (p.n() != n) throw Error(Reason::BadParameter, "parts do not sum to " + std::to_string(n));
  return p;
}

Partition partition_of_cycle_type(const std::vector<std::size_t>& type) {
  std::uint32_t n = 0;
  for (auto x : type) n += static_cast<std::uint32_t>(x);
  std::vector<std::uint32_t> parts(type.begin(), type.end());
  return partition_from_parts(n, parts);
}

namespace {

constexpr std::uint32_t kMaxPartitionN = 60;
constexpr std::uint32_t kMaxStoredN = 20;
constexpr std::uint32_t kMaxExactSymN = 10;

void check_partition_n(std::uint32_t n) {
  if (n == 0) throw Error(Reason::BadParameter, "n must be positive");
  if (n > kMaxPartitionN)
    throw Error(Reason::CapExceeded, "n = " + std::to_string(n) + " exceeds the partition cap " +
                                         std::to_string(kMaxPartitionN));
}

// Visits every partition of n, largest part first, without storing them.
void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& fn) {
  Partition p;
  p.k.assign(n + 1, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t max_part) {
    if (rest == 0) {
      fn(p);
      return;
    }
    for (std::uint32_t part = std::min(rest, max_part); part >= 1; --part) {
      ++p.k[part];
      rec(rest - part, part);
      --p.k[part];
    }
  };
  rec(n, n);
}

mpz_class double_factorial(long n) {
  mpz_class r = 1;
  for (long i = n; i > 1; i -= 2) r *= static_cast<unsigned long>(i);
  return r;
}

mpz_class pow2(const mpz_class& e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e.get_ui());
  return r;
}

void check_sym_mode(std::uint32_t n, const ModeSpec& mode) {
  if (mode.mode == CountMode::exact && n > kMaxExactSymN)
    throw Error(Reason::CapExceeded, "exact evaluation is limited to n <= " + std::to_string(kMaxExactSymN) +
                                         "; use log2 or modp");
}

SymClassInfo class_info(const Partition& p) {
  SymClassInfo c;
  c.partition = p;
  c.class_size = class_size(p);
  c.order = lcm_of(p);
  if (c.order % 2 == 0) {
    c.has_half_power = true;
    c.half_power_type = power_type(p, c.order / 2);
  }
  return c;
}

Partition involution_type(std::uint32_t n, std::uint32_t fixed) {
  std::vector<std::uint32_t> parts((n - fixed) / 2, 2);
  parts.insert(parts.end(), fixed, 1);
  return partition_from_parts(n, parts);
}

std::uint32_t sym_m(std::uint32_t n) {
  if (n < 7 || n % 6 != 1) throw Error(Reason::BadParameter, "n = " + std::to_string(n) + " is not of the form 6m + 1");
  return (n - 1) / 6;
}

}  // namespace

std::vector<Partition> partitions(std::uint32_t n) {
  check_partition_n(n);
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

mpz_class centralizer_order(const Partition& p) {
  mpz_class r = 1;
  for (std::size_t i = 1; i < p.k.size(); ++i) {
    if (p.k[i] == 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(i), p.k[i]);
    r *= t * factorial(p.k[i]);
  }
  return r;
}

mpz_class class_size(const Partition& p) { return factorial(p.n()) / centralizer_order(p); }

std::uint64_t lcm_of(const Partition& p) {
  std::uint64_t l = 1;
  for (std::size_t i = 1; i < p.k.size(); ++i)
    if (p.k[i] > 0) l = std::lcm(l, static_cast<std::uint64_t>(i));
  return l;
}

Partition power_type(const Partition& p, std::uint64_t j) {
  Partition r;
  r.k.assign(p.k.size(), 0);
  for (std::size_t i = 1; i < p.k.size(); ++i) {
    if (p.k[i] == 0) continue;
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(i), j);
    r.k[i / g] += static_cast<std::uint32_t>(p.k[i] * g);
  }
  return r;
}

SymCensusResult sym_orientable_census(std::uint32_t n, const ModeSpec& mode) {
  check_partition_n(n);
  check_sym_mode(n, mode);
  const mpz_class nf = factorial(n);
  SymCensusResult res;
  res.formula_value_only = n < 19;
  std::map<std::uint64_t, mpq_class> by_lcm;
  for_each_partition(n, [&](const Partition& p) {
    std::uint64_t l = lcm_of(p);
    by_lcm[l] += mpq_class(1, 1) / mpq_class(centralizer_order(p));
    if (n <= kMaxStoredN) res.classes.push_back(class_info(p));
  });
  res.sum = MonomialSum(2);
  for (auto& [l, c] : by_lcm) {
    c.canonicalize();
    res.sum.add(c, nf / static_cast<unsigned long>(l), 0);
  }
  res.total = res.sum.evaluate(mode, "symmetric-group orientable census, n = " + std::to_string(n));
  return res;
}

std::vector<SymLRow> sym_l_table(std::uint32_t n) {
  const std::uint32_t m = sym_m(n);
  std::vector<SymLRow> rows(2);
  rows[0].involution_type = involution_type(n, 3);
  rows[0].closed_form = mpz_class(6) * double_factorial(static_cast<long>(n) - 3);
  rows[1].involution_type = involution_type(n, 5);
  rows[1].closed_form = mpz_class(120) * double_factorial(static_cast<long>(n) - 2);
  (void)m;
  for (auto& r : rows) {
    r.centralizer = centralizer_order(r.involution_type);
    r.discrepancy = r.closed_form != r.centralizer;
    if (n <= 8) {
      // count t with t x t^-1 = x for x of the given type
      auto parts = r.involution_type.parts();
      Perm x = identity_perm(n);
      std::uint32_t pos = 0;
      for (auto part : parts) {
        if (part == 2) std::swap(x[pos], x[pos + 1]);
        pos += part;
      }
      Perm t = identity_perm(n);
      std::uint64_t cnt = 0;
      do {
        if (conjugate(x, t) == x) ++cnt;
      } while (std::next_permutation(t.begin(), t.end()));
      r.brute_force = static_cast<unsigned long>(cnt);
      r.brute_forced = true;
    }
  }
  return rows;
}

SymCensusResult sym_locally_census(std::uint32_t n, Surface surface, const ModeSpec& mode) {
  if (surface == Surface::O) return sym_orientable_census(n, mode);
  check_partition_n(n);
  const std::uint32_t m = sym_m(n);
  check_sym_mode(n, mode);
  const mpz_class nf = factorial(n);
  const Partition target = m % 2 == 1 ? involution_type(n, 3) : involution_type(n, 5);
  const mpz_class b_extra = m % 2 == 1 ? mpz_class(12) * double_factorial(static_cast<long>(n) - 3)
                                       : mpz_class(240) * double_factorial(static_cast<long>(n) - 5);
  SymCensusResult res;
  res.formula_value_only = n < 19;
  std::map<std::pair<std::uint64_t, int>, mpq_class> buckets;
  for_each_partition(n, [&](const Partition& p) {
    SymClassInfo c = class_info(p);
    if (c.has_half_power && c.half_power_type == target) c.bucket = Bucket::B;
    buckets[{c.order, c.bucket == Bucket::B ? 1 : 0}] += mpq_class(1, 1) / mpq_class(centralizer_order(p));
    if (n <= kMaxStoredN) res.classes.push_back(std::move(c));
  });
  res.sum = MonomialSum(2);
  for (auto& [key, c] : buckets) {
    c.canonicalize();
    const auto [l, is_b] = key;
    mpz_class num = nf + (is_b ? b_extra : mpz_class(0));
    const mpz_class den = mpz_class(2) * static_cast<unsigned long>(l);
    if (num % den != 0)
      throw Error(Reason::NonIntegralExponent, "twist exponent for lcm " + std::to_string(l) + " is not integral");
    const mpz_class a1 = num / den;
    const mpz_class base = nf / static_cast<unsigned long>(l);
    res.sum.add(c, a1 + base, 0);
    if (surface == Surface::N) res.sum.add(-c, base, 0);
  }
  res.total = res.sum.evaluate(mode, "symmetric-group census, n = " + std::to_string(n));
  return res;
}

std::pair<Perm, Perm> build_b1_b2(std::uint32_t n) {
  const std::uint32_t m = sym_m(n);
  if (m < 2) throw Error(Reason::BadParameter, "b1 and b2 need m >= 2 (n >= 13)");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tr = {
      {1, 4}, {2, n}, {3, n - 1}, {n - 6, n - 3}, {n - 5, n - 2}};
  for (std::uint32_t r = 1; r + 2 <= m; ++r) {
    tr.push_back({6 * r, 6 * r + 3});
    tr.push_back({6 * r + 1, 6 * r + 4});
    tr.push_back({6 * r + 2, 6 * r + 5});
  }
  auto transposition = [n](std::uint32_t a, std::uint32_t b) {
    Perm p = identity_perm(n);
    std::swap(p[a - 1], p[b - 1]);
    return p;
  };
  Perm b1 = identity_perm(n);
  for (auto [a, b] : tr) b1 = compose(b1, transposition(a, b));
  Perm b2 = compose(b1, transposition(n - 12, n - 9));
  if (partition_of_cycle_type(cycle_type(b1)) != involution_type(n, 3) ||
      partition_of_cycle_type(cycle_type(b2)) != involution_type(n, 5))
    throw Error(Reason::InternalInconsistency, "b1/b2 do not have the expected cycle types");
  return {b1, b2};
}

ThreeInvolutionResult three_involution_census(const FiniteGroup& g, const std::vector<Element>& s,
                                              const ModeSpec& mode) {
  if (s.size() != 3) throw Error(Reason::BadParameter, "expected exactly three involutions");
  for (auto x : s) {
    if (x >= g.order()) throw Error(Reason::OutOfRange, "element " + std::to_string(x) + " out of range");
    if (g.element_order(x) != 2) throw Error(Reason::NotInvolutions, "element " + g.name(x) + " is not an involution");
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw Error(Reason::BadParameter, "the involutions must be distinct");
  if (generated_subgroup(g, s).size() != g.order())
    throw Error(Reason::NotGenerating, "the three involutions do not generate the group");

  ThreeInvolutionResult res;
  for (auto x : s)
    for (Element t = 1; t < g.order(); ++t)
      if (t != x && g.mul(t, x) == g.mul(x, t)) res.violations.push_back({t, x});
  res.hypothesis_holds = res.violations.empty();

  const std::uint64_t n = g.order();
  MonomialSum o_sum(2), l_sum(2), n_sum(2);
  const mpq_class inv(1, static_cast<unsigned long>(n));
  auto classes = conjugacy_classes(g);
  for (const auto& c : classes) {
    const std::uint64_t o = c.element_order;
    const mpq_class w = mpq_class(static_cast<unsigned long>(c.members.size())) * inv;
    const mpz_class base = static_cast<unsigned long>(n / o);
    o_sum.add(w, base, 0);
    const std::uint64_t mult = o % 2 == 1 ? 3 : 5;
    if ((mult * n) % (2 * o) != 0) {
      res.L_available = res.N_available = false;
      res.exponent_issue = std::to_string(mult) + "n/(2o) is not integral for n = " + std::to_string(n) +
                           ", o = " + std::to_string(o);
      continue;
    }
    const mpz_class le = static_cast<unsigned long>(mult * n / (2 * o));
    l_sum.add(w, le, 0);
    n_sum.add(w, le, 0);
    n_sum.add(-w, base, 0);
  }
  res.O = o_sum.evaluate(mode, "three-involution census (O)");
  if (res.L_available) {
    res.L = l_sum.evaluate(mode, "three-involution census (L)");
    res.N = n_sum.evaluate(mode, "three-involution census (N)");
  }

  auto inst = make_cayley_instance(g, s);
  auto generic = grr_census(inst, Surface::O, ModeSpec{});
  res.generic_O = mode.mode == CountMode::exact ? generic.total : generic.sum.evaluate(mode);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    const auto& gr = generic.rows.at(i);
    ThreeInvolutionRow row;
    row.representative = c.representative;
    row.class_size = c.members.size();
    row.order = c.element_order;
    row.generic_l = gr.l_value;
    row.o_term_matches = gr.representative == c.representative && gr.order == c.element_order &&
                         gr.phi.exact_value == pow2(static_cast<unsigned long>(n / c.element_order));
    res.o_matches_generic = res.o_matches_generic && row.o_term_matches;
    res.rows.push_back(row);
  }
  MonomialSum diff = o_sum;
  diff.add(generic.sum, -1);
  if (!diff.terms().empty()) res.o_matches_generic = false;
  return res;
}

ElemAbelianResult elementary_abelian_census(std::uint32_t n, std::size_t k, Surface surface,
                                            const ModeSpec& mode) {
  if (n < 2 || n > 24) throw Error(Reason::BadParameter, "n must lie in [2, 24]");
  const std::uint64_t nu = std::uint64_t{1} << n;
  if (k < n || k >= nu) throw Error(Reason::BadParameter, "|S| must lie in [n, 2^n - 1] for a generating set");
  if (k - 1 > 20) throw Error(Reason::BadParameter, "|S| - 1 is too large (max 20)");
  std::uint64_t kf = 1;
  for (std::size_t i = 2; i < k; ++i) kf *= i;
  ElemAbelianResult res;
  res.n = n;
  res.k = k;
  res.grr_range = n >= 5;
  res.sum = MonomialSum(kf);
  const mpq_class inv(1, static_cast<unsigned long>(nu));
  const mpz_class full = static_cast<unsigned long>(nu), half = static_cast<unsigned long>(nu / 2);
  const mpz_class quarter = static_cast<unsigned long>(nu / 4);
  const mpz_class kk = static_cast<unsigned long>(k);
  MonomialSum o(kf), l(kf);
  o.add(inv, 0, full);
  o.add(mpq_class(static_cast<unsigned long>(nu - 1)) * inv, 0, half);
  l.add(mpq_class(static_cast<unsigned long>(k)) * inv, kk * quarter, half);
  l.add(mpq_class(static_cast<long>(nu) - static_cast<long>(k) - 1) * inv, (kk - 2) * quarter, half);
  l.add(inv, (kk - 2) * quarter, full);
  switch (surface) {
    case Surface::O: res.sum = o; break;
    case Surface::L: res.sum = l; break;
    case Surface::N:
      res.sum = l;
      res.sum.add(o, -1);
      break;
  }
  res.total = res.sum.evaluate(mode, "elementary abelian census (" + surface_name(surface) + ")");
  return res;
}

}  // namespace mapcensus
