#include "mapcensus/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "mapcensus/error.hpp"

namespace mapcensus {

Semantics parse_semantics(const std::string& s) {
  if (s == "raw" || s == "RAW") return Semantics::raw;
  if (s == "sigma" || s == "SIGMA") return Semantics::sigma;
  if (s == "dart" || s == "DART") return Semantics::dart;
  throw Error(Reason::BadParameter, "unknown semantics '" + s + "' (expected raw, sigma or dart)");
}

std::string semantics_name(Semantics s) {
  switch (s) {
    case Semantics::raw: return "raw";
    case Semantics::sigma: return "sigma";
    case Semantics::dart: return "dart";
  }
  return "?";
}

ActingChoice parse_acting(const std::string& s) {
  if (s == "rg") return ActingChoice::rg;
  if (s == "rgxh") return ActingChoice::rgxh;
  if (s == "full") return ActingChoice::full;
  throw Error(Reason::BadParameter, "unknown acting group '" + s + "' (expected rg, rgxh or full)");
}

std::string acting_name(ActingChoice a) {
  switch (a) {
    case ActingChoice::rg: return "rg";
    case ActingChoice::rgxh: return "rgxh";
    case ActingChoice::full: return "full";
  }
  return "?";
}

std::optional<std::size_t> GroundSet::find(const Perm& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr err;
  std::mutex m;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

struct Layout {
  std::size_t nv = 0, k = 0;
  std::uint64_t orders_per_vertex = 1;  // (k-1)!
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // dart pairs, low dart first
  std::vector<std::size_t> free_edges;                         // cotree edges
};

Layout make_layout(const FlagSpace& f) {
  const auto& lab = f.labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "enumeration needs a Cayley flag space");
  Layout L;
  L.nv = lab->group->order();
  L.k = lab->set.size();
  for (std::size_t i = 2; i < L.k; ++i) L.orders_per_vertex *= i;
  for (std::uint32_t d = 0; d < f.dart_count(); ++d) {
    std::uint32_t d2 = f.beta(2 * d) / 2;
    if (d < d2) L.edges.emplace_back(d, d2);
  }
  // BFS spanning tree from vertex 0
  std::vector<bool> seen(L.nv, false);
  std::vector<bool> tree(L.edges.size(), false);
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(L.nv);
  for (std::size_t e = 0; e < L.edges.size(); ++e) {
    auto u = static_cast<std::uint32_t>(L.edges[e].first / L.k), v = static_cast<std::uint32_t>(L.edges[e].second / L.k);
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto [w, e] : adj[queue[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t e = 0; e < L.edges.size(); ++e)
    if (!tree[e]) L.free_edges.push_back(e);
  return L;
}

// The idx-th cyclic order of ranks 0..k-1 with rank 0 first.
std::vector<std::uint32_t> cyclic_order(std::size_t k, std::uint64_t idx) {
  std::vector<std::uint32_t> rest;
  for (std::uint32_t r = 1; r < k; ++r) rest.push_back(r);
  std::vector<std::uint32_t> out{0};
  for (std::size_t m = rest.size(); m > 0; --m) {
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i < m; ++i) fact *= i;
    std::size_t pos = static_cast<std::size_t>(idx / fact);
    idx %= fact;
    out.push_back(rest[pos]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return out;
}

void place_rotation(const FlagSpace& f, Perm& p, const std::vector<std::uint32_t>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t a = c[i], b = c[(i + 1) % c.size()];
    p[a] = b;
    p[f.alpha(b)] = f.alpha(a);
  }
}

std::vector<std::uint32_t> quad_blocks(const FlagSpace& f) {
  std::vector<std::uint32_t> b(f.flag_count());
  for (std::uint32_t x = 0; x < f.flag_count(); ++x) b[x] = f.quadricell_of(x);
  return b;
}

std::vector<std::uint32_t> dart_blocks(const FlagSpace& f) {
  std::vector<std::uint32_t> b(f.flag_count());
  for (std::uint32_t x = 0; x < f.flag_count(); ++x) b[x] = f.dart_of(x);
  return b;
}

bool surface_accepts(Surface s, bool orientable) {
  return s == Surface::L || (s == Surface::O) == orientable;
}

}  // namespace

mpz_class enumeration_size(const FlagSpace& f, Semantics semantics) {
  Layout L = make_layout(f);
  mpz_class per = static_cast<unsigned long>(L.orders_per_vertex);
  if (semantics == Semantics::raw) per <<= static_cast<unsigned long>(L.k - 1);
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), per.get_mpz_t(), L.nv);
  if (semantics == Semantics::sigma) total <<= static_cast<unsigned long>(L.free_edges.size());
  return total;
}

Perm class_key(const FlagSpace& f, Semantics semantics, const Perm& p, bool orientable, std::uint32_t marker) {
  switch (semantics) {
    case Semantics::raw: return p;
    case Semantics::dart: return canonical_block_swap(f, p, dart_blocks(f), f.dart_count());
    case Semantics::sigma:
      if (orientable) return canonical_oriented_side_class(f, p, marker);
      return canonical_block_swap(f, p, quad_blocks(f), f.quadricell_count());
  }
  return p;
}

GroundSet enumerate_embeddings(std::shared_ptr<const FlagSpace> fp, Semantics semantics, Surface surface,
                               std::uint64_t cap, unsigned workers) {
  const FlagSpace& f = *fp;
  mpz_class est = enumeration_size(f, semantics);
  if (est > mpz_class(static_cast<unsigned long>(cap)))
    throw Error(Reason::CapExceeded, "enumeration needs " + est.get_str() + " candidates, cap is " + std::to_string(cap));
  const std::uint64_t total = est.get_ui();
  Layout L = make_layout(f);
  const auto qblocks = quad_blocks(f);
  const auto dblocks = dart_blocks(f);
  const std::uint64_t per_vertex = semantics == Semantics::raw ? L.orders_per_vertex << (L.k - 1) : L.orders_per_vertex;
  std::uint64_t rot_total = 1;
  for (std::size_t v = 0; v < L.nv; ++v) rot_total *= per_vertex;

  std::vector<std::vector<std::uint32_t>> orders(L.orders_per_vertex);
  for (std::uint64_t i = 0; i < L.orders_per_vertex; ++i) orders[i] = cyclic_order(L.k, i);

  workers = std::max(1u, workers);
  std::vector<std::unordered_map<Perm, std::uint8_t, PermHash>> local(workers);
  parallel_for(total, workers, [&](std::size_t idx, unsigned w) {
    std::uint64_t rot = idx % rot_total;
    std::uint64_t tw = idx / rot_total;
    std::vector<std::uint8_t> sign(f.dart_count(), 0);
    if (semantics == Semantics::sigma) {
      std::vector<std::uint8_t> twist(L.edges.size(), 0);
      for (std::size_t j = 0; j < L.free_edges.size(); ++j) twist[L.free_edges[j]] = (tw >> j) & 1u;
      for (std::size_t e = 0; e < L.edges.size(); ++e) sign[L.edges[e].second] = twist[e] ? 0 : 1;
    }
    Perm p(f.flag_count());
    std::vector<std::uint32_t> c(L.k);
    bool orientable_candidate = true;
    for (std::size_t v = 0; v < L.nv; ++v) {
      std::uint64_t choice = rot % per_vertex;
      rot /= per_vertex;
      const auto& ord = orders[choice % L.orders_per_vertex];
      std::uint64_t sbits = choice / L.orders_per_vertex;  // raw only
      for (std::size_t i = 0; i < L.k; ++i) {
        std::uint32_t dart = static_cast<std::uint32_t>(v * L.k + ord[i]);
        std::uint32_t sg = semantics == Semantics::raw ? (i == 0 ? 0u : static_cast<std::uint32_t>((sbits >> (i - 1)) & 1u))
                                                       : sign[dart];
        c[i] = 2 * dart + sg;
      }
      place_rotation(f, p, c);
    }
    std::size_t orbits = 0;
    orientation_orbits(f, p, &orbits);
    bool orientable = orbits == 2;
    Perm key;
    switch (semantics) {
      case Semantics::raw: key = std::move(p); break;
      case Semantics::dart:
        orientable = true;
        key = canonical_block_swap(f, p, dblocks, f.dart_count());
        break;
      case Semantics::sigma:
        orientable_candidate = tw == 0;
        if (orientable != orientable_candidate)
          throw Error(Reason::InternalInconsistency, "twist vector and orientability disagree");
        key = orientable ? canonical_oriented_side_class(f, p, 0) : canonical_block_swap(f, p, qblocks, f.quadricell_count());
        break;
    }
    if (!surface_accepts(surface, orientable)) return;
    local[w].emplace(std::move(key), static_cast<std::uint8_t>(orientable));
  });

  std::unordered_map<Perm, std::uint8_t, PermHash> merged;
  for (auto& m : local) {
    for (auto& [k, o] : m) merged.emplace(k, o);
    m.clear();
  }
  GroundSet gs;
  gs.semantics = semantics;
  gs.surface = surface;
  gs.space = fp;
  std::vector<std::pair<Perm, std::uint8_t>> items(merged.begin(), merged.end());
  std::sort(items.begin(), items.end());
  for (auto& [k, o] : items) {
    gs.index.emplace(k, static_cast<std::uint32_t>(gs.representatives.size()));
    gs.representatives.push_back(std::move(k));
    gs.orientable.push_back(o);
  }
  return gs;
}

std::size_t act_on_class(const GroundSet& gs, const Perm& xi, std::size_t i) {
  const FlagSpace& f = *gs.space;
  Perm q = conjugate(gs.representatives[i], xi);
  Perm key = class_key(f, gs.semantics, q, gs.orientable[i] != 0, xi[0]);
  auto j = gs.find(key);
  if (!j) throw Error(Reason::InternalInconsistency, "ground set is not closed under the acting group");
  return *j;
}

std::vector<std::uint8_t> fixed_members(const Perm& xi, const GroundSet& gs, unsigned workers) {
  std::vector<std::uint8_t> out(gs.size(), 0);
  parallel_for(gs.size(), workers, [&](std::size_t i, unsigned) { out[i] = act_on_class(gs, xi, i) == i; });
  return out;
}

std::uint64_t fixed_count(const Perm& xi, const GroundSet& gs, unsigned workers) {
  auto m = fixed_members(xi, gs, workers);
  return static_cast<std::uint64_t>(std::count(m.begin(), m.end(), std::uint8_t{1}));
}

OrbitCensus burnside_count(const std::vector<Perm>& acting, const GroundSet& gs, unsigned workers) {
  OrbitCensus oc;
  oc.acting_order = acting.size();
  const std::size_t n = gs.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint32_t> img(n);
  for (const auto& xi : acting) {
    parallel_for(n, workers, [&](std::size_t i, unsigned) { img[i] = static_cast<std::uint32_t>(act_on_class(gs, xi, i)); });
    std::uint64_t fixed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (img[i] == i) ++fixed;
      auto a = root(static_cast<std::uint32_t>(i)), b = root(img[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    oc.fixed_counts.push_back(fixed);
    oc.fixed_sum += fixed;
  }
  if (acting.empty()) throw Error(Reason::BadParameter, "empty acting group");
  if (oc.fixed_sum % acting.size() != 0)
    throw Error(Reason::NonIntegralBurnside, "fixed-point sum " + std::to_string(oc.fixed_sum) +
                                                 " is not divisible by the group order " + std::to_string(acting.size()));
  oc.burnside_count = oc.fixed_sum / acting.size();
  std::vector<std::size_t> size(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++size[root(static_cast<std::uint32_t>(i))];
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = root(static_cast<std::uint32_t>(i));
    if (r != i) continue;
    MapPermutation m(gs.space, gs.representatives[i]);
    auto inv = inventory(m);
    slot[i] = oc.orbits.size();
    oc.orbits.push_back({i, size[i], inv.euler_characteristic, inv.orientable, inv.genus});
  }
  oc.union_find_count = oc.orbits.size();
  // inventory is constant along each orbit
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = oc.orbits[slot[root(static_cast<std::uint32_t>(i))]];
    if (o.representative == i) continue;
    MapPermutation m(gs.space, gs.representatives[i]);
    auto inv = inventory(m);
    if (inv.euler_characteristic != o.euler_characteristic || inv.orientable != o.orientable)
      throw Error(Reason::InternalInconsistency, "map inventory changes along an orbit");
  }
  if (oc.union_find_count != oc.burnside_count)
    throw Error(Reason::InternalInconsistency, "Burnside count " + std::to_string(oc.burnside_count) +
                                                   " differs from the union-find orbit count " +
                                                   std::to_string(oc.union_find_count));
  return oc;
}

ActingSelection select_acting_group(const CayleyInstance& inst, ActingChoice choice,
                                    const std::optional<std::vector<GraphAutomorphism>>& h_override) {
  ActingSelection sel;
  const auto& G = *inst.group;
  Perm id = identity_perm(G.order());
  if (choice != ActingChoice::rg || !h_override) {
    sel.decomposition = decompose(graph_automorphism_group(inst.graph), G);
  }
  switch (choice) {
    case ActingChoice::rg:
      sel.h = {id};
      sel.vertex_maps = right_regular(G);
      break;
    case ActingChoice::rgxh:
      if (h_override)
        sel.h = *h_override;
      else if (sel.decomposition.is_direct_product)
        sel.h = sel.decomposition.complement;
      else
        sel.h = {id};
      sel.vertex_maps = make_acting_group(G, sel.h).elements;
      break;
    case ActingChoice::full:
      sel.h = {};
      sel.vertex_maps = sel.decomposition.full_group;
      break;
  }
  for (const auto& v : sel.vertex_maps) sel.flag_maps.push_back(extend_to_flags(v, *inst.flags));
  return sel;
}

ComparisonReport compare_with_formula(const CayleyInstance& inst, const std::vector<GraphAutomorphism>& h,
                                      Surface surface, Semantics semantics, std::uint64_t cap, unsigned workers) {
  ComparisonReport rep;
  rep.surface = surface;
  rep.semantics = semantics;
  const auto& G = *inst.group;
  const std::size_t k = inst.set.size();
  auto acting = make_acting_group(G, h);
  rep.acting_order = acting.elements.size();
  auto gs = enumerate_embeddings(inst.flags, semantics, Surface::L, cap, workers);

  // per-element fixed counts split by orientability
  std::vector<std::uint64_t> fo(acting.elements.size()), fn(acting.elements.size());
  for (std::size_t a = 0; a < acting.elements.size(); ++a) {
    auto fm = fixed_members(extend_to_flags(acting.elements[a], *inst.flags), gs, workers);
    for (std::size_t i = 0; i < gs.size(); ++i)
      if (fm[i]) (gs.orientable[i] ? fo[a] : fn[a])++;
  }
  auto pick = [&](std::size_t a) {
    switch (surface) {
      case Surface::O: return fo[a];
      case Surface::N: return fn[a];
      case Surface::L: return fo[a] + fn[a];
    }
    return std::uint64_t{0};
  };
  std::uint64_t so = 0, sn = 0;
  for (std::size_t a = 0; a < acting.elements.size(); ++a) {
    so += fo[a];
    sn += fn[a];
  }
  const std::uint64_t order = acting.elements.size();
  if (so % order || sn % order)
    throw Error(Reason::NonIntegralBurnside, "oracle fixed-point sums are not divisible by the group order");
  rep.oracle_O = so / order;
  rep.oracle_N = sn / order;
  rep.oracle_L = (so + sn) / order;
  rep.oracle_total = surface == Surface::O ? rep.oracle_O : surface == Surface::N ? rep.oracle_N : rep.oracle_L;

  mpq_class formula_sum = 0;
  for (const auto& c : automorphism_classes(acting.elements)) {
    for (auto m : c.members)
      if (pick(m) != pick(c.representative))
        throw Error(Reason::InternalInconsistency, "oracle fixed count is not a class function");
    auto st = class_stats(inst.graph, acting.elements[c.representative], c.members.size());
    ComparisonLine line;
    line.class_size = c.members.size();
    line.order = st.order;
    line.l_value = st.l_value;
    line.branch = st.branch;
    line.alpha_exponent = st.alpha_exponent;
    line.oracle_fixed = pick(c.representative);
    line.formula_fixed = phi_formula(st, surface, k, G.order()).exact_value;
    if (line.formula_fixed != 0) {
      line.ratio_defined = true;
      line.ratio = mpq_class(mpz_class(static_cast<unsigned long>(line.oracle_fixed)), line.formula_fixed);
      line.ratio.canonicalize();
    }
    formula_sum += mpq_class(line.formula_fixed) * static_cast<unsigned long>(line.class_size);
    rep.lines.push_back(std::move(line));
  }
  rep.formula_total = formula_sum / mpq_class(static_cast<unsigned long>(order));
  rep.formula_total.canonicalize();
  if (rep.formula_total != 0) {
    rep.total_ratio_defined = true;
    rep.total_ratio = mpq_class(mpz_class(static_cast<unsigned long>(rep.oracle_total))) / rep.formula_total;
    rep.total_ratio.canonicalize();
  }
  return rep;
}

}  // namespace mapcensus
