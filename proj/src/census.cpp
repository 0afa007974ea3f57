#include "mapcensus/census.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mapcensus/error.hpp"

namespace mapcensus {

Surface parse_surface(const std::string& s) {
  if (s == "O" || s == "o") return Surface::O;
  if (s == "N" || s == "n") return Surface::N;
  if (s == "L" || s == "l") return Surface::L;
  throw Error(Reason::BadParameter, "unknown surface '" + s + "' (expected O, N or L)");
}

std::string surface_name(Surface s) {
  switch (s) {
    case Surface::O: return "O";
    case Surface::N: return "N";
    case Surface::L: return "L";
  }
  return "?";
}

std::string branch_name(Branch b) { return b == Branch::Theta ? "Theta" : "Delta"; }

ActingGroup make_acting_group(const FiniteGroup& g, const std::vector<GraphAutomorphism>& h) {
  ActingGroup a;
  a.g_order = g.order();
  std::vector<GraphAutomorphism> hs = h;
  Perm id = identity_perm(g.order());
  if (hs.empty()) hs.push_back(id);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  if (hs.front() != id) throw Error(Reason::BadParameter, "H does not contain the identity");
  a.h_order = hs.size();
  auto rg = right_regular(g);
  std::unordered_set<Perm, PermHash> rset(rg.begin(), rg.end());
  std::unordered_set<Perm, PermHash> hset(hs.begin(), hs.end());
  for (const auto& x : hs) {
    if (x.size() != g.order()) throw Error(Reason::BadParameter, "H element has the wrong degree");
    if (x != id && rset.count(x)) throw Error(Reason::BadParameter, "H meets R(G) nontrivially");
    for (const auto& y : hs)
      if (!hset.count(compose(x, y))) throw Error(Reason::BadParameter, "H is not closed under composition");
    for (const auto& r : rg)
      if (compose(x, r) != compose(r, x)) throw Error(Reason::BadParameter, "H does not commute with R(G)");
  }
  for (const auto& r : rg)
    for (const auto& x : hs) a.elements.push_back(compose(r, x));
  return a;
}

std::vector<ActingClass> automorphism_classes(const std::vector<GraphAutomorphism>& elems) {
  std::unordered_map<Perm, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> done(elems.size(), false);
  std::vector<ActingClass> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    ActingClass c;
    c.representative = i;
    for (const auto& t : elems) {
      auto it = index.find(conjugate(elems[i], t));
      if (it == index.end()) throw Error(Reason::BadParameter, "automorphism list is not closed under conjugation");
      if (!done[it->second]) {
        done[it->second] = true;
        c.members.push_back(it->second);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t inverted_edges(const Graph& gr, const GraphAutomorphism& xi) {
  std::uint64_t o = perm_order(xi);
  if (o % 2 != 0) return 0;
  Perm eta = power(xi, o / 2);
  std::uint64_t count = 0;
  for (std::uint32_t t = 0; t < gr.vertex_count; ++t)
    if (eta[t] != t && eta[eta[t]] == t && gr.adjacent(t, eta[t])) ++count;
  return count / 2;
}

ClassStats class_stats(const Graph& gr, const GraphAutomorphism& xi, std::size_t class_size) {
  ClassStats st;
  st.representative = xi;
  st.class_size = class_size;
  st.order = perm_order(xi);
  st.semi_regular = is_semi_regular(xi);
  if (!st.semi_regular) {
    std::ostringstream os;
    os << "automorphism with orbit lengths";
    for (auto l : orbit_lengths(xi)) os << ' ' << l;
    os << " is not semi-regular";
    throw Error(Reason::NotSemiRegular, os.str());
  }
  const std::uint64_t nu = gr.vertex_count, eps = gr.edge_count(), o = st.order;
  st.l_value = inverted_edges(gr, xi);
  st.branch = (o % 2 == 0 && st.l_value > 0) ? Branch::Delta : Branch::Theta;
  if (st.branch == Branch::Delta && st.l_value % (o / 2) != 0)
    throw Error(Reason::InternalInconsistency, "l = " + std::to_string(st.l_value) + " is not a multiple of o/2 = " +
                                                   std::to_string(o / 2));
  // edge orbits of <xi>, counted directly
  auto edges = gr.edges();
  std::unordered_map<std::uint64_t, std::size_t> eidx;
  auto key = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) eidx.emplace(key(edges[i].first, edges[i].second), i);
  std::vector<bool> seen(edges.size(), false);
  std::uint64_t orbits = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    auto [a, b] = edges[i];
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      a = xi[a];
      b = xi[b];
      auto it = eidx.find(key(a, b));
      if (it == eidx.end()) throw Error(Reason::InternalInconsistency, "automorphism does not preserve edges");
      j = it->second;
    }
  }
  st.edge_orbits = orbits;
  if ((eps + st.l_value) % o != 0 || (eps + st.l_value) / o != orbits)
    throw Error(Reason::InternalInconsistency, "edge orbit count " + std::to_string(orbits) + " differs from (ε + l)/o");
  if (eps + st.l_value < nu || (eps + st.l_value - nu) % o != 0)
    throw Error(Reason::NonIntegralExponent, "twist exponent (ε + l − ν)/o is not a non-negative integer for o = " +
                                                 std::to_string(o) + ", l = " + std::to_string(st.l_value));
  st.alpha_exponent = (eps + st.l_value - nu) / o;
  return st;
}

namespace {

std::uint64_t factorial_u64(std::size_t n) {
  if (n > 20) throw Error(Reason::BadParameter, "|S| - 1 = " + std::to_string(n) + " is too large (max 20)");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string stats_table(const std::vector<ClassStats>& rows) {
  std::ostringstream os;
  os << "class_size order l branch alpha\n";
  for (const auto& r : rows)
    os << r.class_size << ' ' << r.order << ' ' << r.l_value << ' ' << branch_name(r.branch) << ' '
       << r.alpha_exponent << '\n';
  return os.str();
}

}  // namespace

MonomialSum phi_terms(const ClassStats& st, Surface surface, std::size_t k, std::size_t vertex_count) {
  MonomialSum m(factorial_u64(k - 1));
  mpz_class e = static_cast<unsigned long>(vertex_count / st.order);
  mpz_class a = static_cast<unsigned long>(st.alpha_exponent);
  switch (surface) {
    case Surface::O: m.add(1, 0, e); break;
    case Surface::L: m.add(1, a, e); break;
    case Surface::N:
      m.add(1, a, e);
      m.add(-1, 0, e);
      break;
  }
  return m;
}

CountReport phi_formula(const ClassStats& st, Surface surface, std::size_t k, std::size_t vertex_count,
                        const ModeSpec& mode) {
  return phi_terms(st, surface, k, vertex_count).evaluate(mode);
}

CensusResult census(const CayleyInstance& inst, const std::vector<GraphAutomorphism>& h, Surface surface,
                    const ModeSpec& mode) {
  const auto& G = *inst.group;
  const std::size_t k = inst.set.size();
  auto acting = make_acting_group(G, h);
  auto classes = automorphism_classes(acting.elements);
  CensusResult res;
  res.acting_order = acting.elements.size();
  res.sum = MonomialSum(factorial_u64(k - 1));
  std::vector<ClassStats> all;
  mpq_class inv_order(1, static_cast<unsigned long>(acting.elements.size()));
  for (const auto& c : classes) {
    ClassStats st = class_stats(inst.graph, acting.elements[c.representative], c.members.size());
    for (auto m : c.members) {
      std::uint64_t l = inverted_edges(inst.graph, acting.elements[m]);
      if (l != st.l_value)
        throw Error(Reason::InternalInconsistency, "l is not constant on the class of element " +
                                                       std::to_string(c.representative));
    }
    auto phi = phi_terms(st, surface, k, G.order());
    res.sum.add(phi, mpq_class(static_cast<unsigned long>(c.members.size())) * inv_order);
    all.push_back(st);
    res.rows.push_back({st, phi.evaluate(mode)});
  }
  res.total = res.sum.evaluate(mode, stats_table(all));
  return res;
}

GrrCensusResult grr_census(const CayleyInstance& inst, Surface surface, const ModeSpec& mode) {
  const auto& G = *inst.group;
  const auto& S = inst.set;
  const std::size_t k = S.size();
  const std::uint64_t nu = G.order(), eps = inst.graph.edge_count();
  auto rg = right_regular(G);
  GrrCensusResult res;
  res.sum = MonomialSum(factorial_u64(k - 1));
  mpq_class inv_order(1, static_cast<unsigned long>(G.order()));
  std::vector<ClassStats> all;
  for (const auto& c : conjugacy_classes(G)) {
    GrrRow row;
    row.representative = c.representative;
    row.class_size = c.members.size();
    row.order = c.element_order;
    ClassStats st = class_stats(inst.graph, rg[c.representative], c.members.size());
    if (st.order != row.order) throw Error(Reason::InternalInconsistency, "R(g) has a different order than g");
    row.l_value = st.l_value;
    if (row.order % 2 == 0) {
      Element z = G.power(c.representative, row.order / 2);
      std::uint64_t cnt = 0;
      for (Element t = 0; t < G.order(); ++t)
        if (S.contains(G.mul(G.mul(t, z), G.inverse(t)))) ++cnt;
      row.l_conjugation = cnt / 2;
    }
    if (row.l_conjugation != row.l_value)
      throw Error(Reason::InternalInconsistency, "inverted-edge count " + std::to_string(row.l_value) +
                                                     " differs from the conjugation count " +
                                                     std::to_string(row.l_conjugation) + " for element " +
                                                     std::to_string(c.representative));
    row.branch = st.branch;
    row.alpha_exponent = st.alpha_exponent;
    auto phi = phi_terms(st, surface, k, G.order());
    res.sum.add(phi, mpq_class(static_cast<unsigned long>(row.class_size)) * inv_order);
    row.phi = phi.evaluate(mode);
    all.push_back(st);
    res.rows.push_back(std::move(row));
  }
  if (G.order() % 2 == 1) {
    // Odd order: no element has even order, so every class is Theta with
    // α = (ε − ν)/o.
    MonomialSum shortcut(factorial_u64(k - 1));
    for (const auto& c : conjugacy_classes(G)) {
      std::uint64_t o = c.element_order;
      if ((eps - nu) % o != 0) throw Error(Reason::NonIntegralExponent, "(ε − ν)/o is not integral");
      mpz_class a = static_cast<unsigned long>((eps - nu) / o);
      mpz_class e = static_cast<unsigned long>(nu / o);
      mpq_class w = mpq_class(static_cast<unsigned long>(c.members.size())) * inv_order;
      if (surface != Surface::O) shortcut.add(w, a, e);
      if (surface == Surface::O) shortcut.add(w, 0, e);
      if (surface == Surface::N) shortcut.add(-w, 0, e);
    }
    MonomialSum diff = res.sum;
    diff.add(shortcut, -1);
    if (!diff.terms().empty())
      throw Error(Reason::InternalInconsistency, "odd-order shortcut disagrees with the general class sum");
    res.odd_order_shortcut_used = true;
  }
  res.total = res.sum.evaluate(mode, stats_table(all));
  return res;
}

}  // namespace mapcensus
