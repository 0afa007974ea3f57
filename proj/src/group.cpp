#include "mapcensus/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

[[noreturn]] void not_a_group(const std::string& msg) { throw Error(Reason::NotAGroup, msg); }

// Greedy generating set: add the first element not yet reached, and keep
// the reached set closed under the product.
std::vector<Element> magma_generators(std::size_t n, const std::vector<Element>& t) {
  std::vector<Element> gens;
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  std::size_t processed = 0;
  auto add = [&](Element c) {
    if (!in[c]) {
      in[c] = true;
      members.push_back(c);
    }
  };
  for (Element cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    add(cand);
    for (; processed < members.size(); ++processed) {
      Element a = members[processed];
      for (std::size_t j = 0; j <= processed; ++j) {
        Element b = members[j];
        add(t[a * n + b]);
        add(t[b * n + a]);
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names,
                         std::size_t order_cap)
    : n_(table.size()), names_(std::move(names)) {
  if (n_ == 0) not_a_group("empty table");
  if (n_ > order_cap)
    throw Error(Reason::CapExceeded, "group order " + std::to_string(n_) + " exceeds cap " + std::to_string(order_cap));
  table_.resize(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r) {
    if (table[r].size() != n_)
      not_a_group("row " + std::to_string(r) + " has " + std::to_string(table[r].size()) + " entries, expected " +
                  std::to_string(n_));
    for (std::size_t c = 0; c < n_; ++c) {
      if (table[r][c] >= n_)
        not_a_group("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + std::to_string(table[r][c]) +
                    " out of range");
      table_[r * n_ + c] = table[r][c];
    }
  }
  for (std::size_t g = 0; g < n_; ++g) {
    if (table_[g] != g || table_[g * n_] != g)
      not_a_group("element 0 is not the identity (fails at element " + std::to_string(g) + ")");
  }
  std::vector<bool> seen(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < n_; ++c) {
      Element v = table_[r * n_ + c];
      if (seen[v]) not_a_group("row " + std::to_string(r) + " repeats " + std::to_string(v) + " (not a Latin square)");
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n_; ++r) {
      Element v = table_[r * n_ + c];
      if (seen[v])
        not_a_group("column " + std::to_string(c) + " repeats " + std::to_string(v) + " (not a Latin square)");
      seen[v] = true;
    }
  }
  // Light's test against a generating set.
  for (Element a : magma_generators(n_, table_)) {
    for (std::size_t x = 0; x < n_; ++x) {
      Element xa = table_[x * n_ + a];
      for (std::size_t y = 0; y < n_; ++y) {
        if (table_[xa * n_ + y] != table_[x * n_ + table_[a * n_ + y]])
          not_a_group("associativity fails at triple (" + std::to_string(x) + "," + std::to_string(a) + "," +
                      std::to_string(y) + ")");
      }
    }
  }
  inverses_.assign(n_, 0);
  for (std::size_t g = 0; g < n_; ++g) {
    Element inv = 0;
    bool found = false;
    for (std::size_t h = 0; h < n_; ++h) {
      if (table_[g * n_ + h] == 0) {
        inv = static_cast<Element>(h);
        found = true;
        break;
      }
    }
    if (!found || table_[inv * n_ + g] != 0) not_a_group("element " + std::to_string(g) + " has no two-sided inverse");
    inverses_[g] = inv;
  }
  orders_.assign(n_, 1);
  for (std::size_t g = 0; g < n_; ++g) {
    Element x = static_cast<Element>(g);
    std::uint32_t k = 1;
    while (x != 0) {
      x = table_[x * n_ + g];
      ++k;
    }
    orders_[g] = k;
  }
  if (!names_.empty() && names_.size() != n_)
    throw Error(Reason::ParseError,
                "names line has " + std::to_string(names_.size()) + " labels, expected " + std::to_string(n_));
}

Element FiniteGroup::power(Element g, std::uint64_t e) const noexcept {
  Element result = 0, base = g;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::string FiniteGroup::name(Element g) const {
  if (!names_.empty()) return names_[g];
  return std::to_string(g);
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[r][c] = table_[r * n_ + c];
  return out;
}

FiniteGroup build_group_from_table(std::vector<std::vector<Element>> table, std::vector<std::string> names,
                                   std::size_t order_cap) {
  return FiniteGroup(std::move(table), std::move(names), order_cap);
}

PermutationGroup permutation_group_closure(std::span<const Perm> generators, std::size_t cap) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(Reason::BadParameter, "generators have different degrees");
    if (!is_permutation(g)) throw Error(Reason::BadParameter, "generator is not a permutation");
  }
  std::vector<Perm> elems{identity_perm(degree)};
  std::unordered_map<Perm, Element, PermHash> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Perm next = compose(elems[i], g);
      if (index.find(next) != index.end()) continue;
      if (elems.size() >= cap)
        throw Error(Reason::CapExceeded, "permutation closure exceeds cap " + std::to_string(cap));
      index.emplace(next, static_cast<Element>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return PermutationGroup{FiniteGroup(std::move(table), {}, cap), std::move(elems)};
}

FiniteGroup build_group_from_permutation_generators(std::span<const Perm> generators, std::size_t cap) {
  return permutation_group_closure(generators, cap).group;
}

namespace {

FiniteGroup cyclic(std::uint32_t n, std::size_t cap) {
  if (n == 0) throw Error(Reason::BadParameter, "cyclic group needs n >= 1");
  if (n > cap) throw Error(Reason::CapExceeded, "order " + std::to_string(n) + " exceeds cap");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), {}, cap);
}

FiniteGroup dihedral(std::uint32_t n, std::size_t cap) {
  if (n < 1) throw Error(Reason::BadParameter, "dihedral group needs n >= 1");
  std::size_t order = 2ull * n;
  if (order > cap) throw Error(Reason::CapExceeded, "order " + std::to_string(order) + " exceeds cap");
  // r^i s^j at i + n*j; s r = r^-1 s.
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::uint32_t i1 = 0; i1 < n; ++i1)
    for (std::uint32_t j1 = 0; j1 < 2; ++j1)
      for (std::uint32_t i2 = 0; i2 < n; ++i2)
        for (std::uint32_t j2 = 0; j2 < 2; ++j2) {
          std::uint32_t i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
          std::uint32_t j = j1 ^ j2;
          t[i1 + n * j1][i2 + n * j2] = i + n * j;
        }
  std::vector<std::string> names;
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::uint32_t i = 0; i < n; ++i) {
      std::string s;
      if (i == 0 && j == 0) s = "e";
      if (i > 0) s += i == 1 ? "r" : "r^" + std::to_string(i);
      if (j == 1) s += "s";
      names.push_back(s);
    }
  return FiniteGroup(std::move(t), std::move(names), cap);
}

FiniteGroup symmetric(std::uint32_t n, std::size_t cap) {
  if (n < 1) throw Error(Reason::BadParameter, "symmetric group needs n >= 1");
  std::size_t order = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    order *= i;
    if (order > cap) throw Error(Reason::CapExceeded, "symmetric group of degree " + std::to_string(n) + " exceeds cap");
  }
  std::vector<Perm> elems;
  Perm p = identity_perm(n);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::unordered_map<Perm, Element, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(t), {}, cap);
}

FiniteGroup elementary_abelian_2(std::uint32_t n, std::size_t cap) {
  if (n < 1 || n > 20) throw Error(Reason::BadParameter, "elementary_abelian_2 needs 1 <= n <= 20");
  std::size_t order = std::size_t{1} << n;
  if (order > cap) throw Error(Reason::CapExceeded, "order " + std::to_string(order) + " exceeds cap");
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = static_cast<Element>(a ^ b);
  return FiniteGroup(std::move(t), {}, cap);
}

}  // namespace

FiniteGroup named_group(GroupFamily family, std::uint32_t param, std::size_t order_cap) {
  switch (family) {
    case GroupFamily::cyclic: return cyclic(param, order_cap);
    case GroupFamily::dihedral: return dihedral(param, order_cap);
    case GroupFamily::symmetric: return symmetric(param, order_cap);
    case GroupFamily::elementary_abelian_2: return elementary_abelian_2(param, order_cap);
    case GroupFamily::direct_product: break;
  }
  throw Error(Reason::BadParameter, "direct_product takes two groups; use direct_product(a, b)");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t order_cap) {
  std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > order_cap) throw Error(Reason::CapExceeded, "order " + std::to_string(n) + " exceeds cap");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element pa = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      Element pb = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x][y] = static_cast<Element>(pa * nb + pb);
    }
  return FiniteGroup(std::move(t), {}, order_cap);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<ConjugacyClass> out;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    ConjugacyClass cls;
    cls.representative = x;
    cls.element_order = g.element_order(x);
    for (Element t = 0; t < n; ++t) {
      Element y = g.mul(g.mul(t, x), g.inverse(t));
      if (!done[y]) {
        done[y] = true;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::uint32_t element_order(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw Error(Reason::OutOfRange, "element " + std::to_string(x) + " out of range");
  return g.element_order(x);
}

std::vector<Element> centralizer(const FiniteGroup& g, std::span<const Element> subset) {
  for (Element s : subset)
    if (s >= g.order()) throw Error(Reason::OutOfRange, "element " + std::to_string(s) + " out of range");
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = std::all_of(subset.begin(), subset.end(), [&](Element s) { return g.mul(x, s) == g.mul(s, x); });
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteGroup read_group(std::istream& in, std::size_t order_cap) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto pos = out.find_first_not_of(" \t\r");
      if (pos != std::string::npos && out[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(Reason::ParseError, "empty group file");
  std::istringstream header(line);
  std::string tag;
  long long order = 0;
  if (!(header >> tag >> order) || tag != "group" || order <= 0)
    throw Error(Reason::ParseError, "expected header 'group <order>'");
  if (static_cast<std::size_t>(order) > order_cap)
    throw Error(Reason::CapExceeded, "group order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  std::vector<std::vector<Element>> table(static_cast<std::size_t>(order));
  for (auto& row : table) {
    if (!next_line(line)) throw Error(Reason::ParseError, "table truncated");
    std::istringstream rs(line);
    long long v;
    while (rs >> v) {
      if (v < 0) throw Error(Reason::ParseError, "negative table entry");
      row.push_back(static_cast<Element>(v));
    }
    if (!rs.eof()) throw Error(Reason::ParseError, "non-numeric table entry in line: " + line);
  }
  std::vector<std::string> names;
  if (next_line(line)) {
    std::istringstream ns(line);
    std::string kw;
    ns >> kw;
    if (kw != "names") throw Error(Reason::ParseError, "unexpected trailing line: " + line);
    std::string label;
    while (ns >> label) names.push_back(label);
    if (next_line(line)) throw Error(Reason::ParseError, "unexpected trailing line: " + line);
  }
  return FiniteGroup(std::move(table), std::move(names), order_cap);
}

FiniteGroup load_group(const std::string& path, std::size_t order_cap) {
  std::ifstream f(path);
  if (!f) throw Error(Reason::ParseError, "cannot open group file " + path);
  return read_group(f, order_cap);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  if (!g.names().empty()) {
    out << "names";
    for (const auto& s : g.names()) out << ' ' << s;
    out << '\n';
  }
}

}  // namespace mapcensus
