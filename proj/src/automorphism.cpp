#include "mapcensus/automorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

struct AutSearch {
  const Graph& g;
  std::size_t cap;
  std::vector<std::uint32_t> order, parent;
  std::vector<std::uint32_t> img;
  std::vector<bool> used;
  std::vector<GraphAutomorphism> out;

  bool consistent(std::uint32_t v, std::uint32_t w) const {
    if (g.adjacency[v].size() != g.adjacency[w].size()) return false;
    for (auto u : g.adjacency[v])
      if (img[u] != UINT32_MAX && !g.adjacent(img[u], w)) return false;
    return true;
  }

  void run(std::size_t i) {
    if (i == order.size()) {
      if (out.size() >= cap)
        throw Error(Reason::CapExceeded, "automorphism group exceeds cap " + std::to_string(cap));
      out.push_back(img);
      return;
    }
    std::uint32_t v = order[i];
    auto try_image = [&](std::uint32_t w) {
      if (used[w] || !consistent(v, w)) return;
      img[v] = w;
      used[w] = true;
      run(i + 1);
      used[w] = false;
      img[v] = UINT32_MAX;
    };
    if (parent[v] == UINT32_MAX) {
      for (std::uint32_t w = 0; w < g.vertex_count; ++w) try_image(w);
    } else {
      for (auto w : g.adjacency[img[parent[v]]]) try_image(w);
    }
  }
};

std::unordered_set<Perm, PermHash> closure(std::vector<Perm> gens, const Perm& id) {
  std::unordered_set<Perm, PermHash> set{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      Perm n = compose(queue[i], s);
      if (set.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return set;
}

bool find_complement(const std::vector<Perm>& cands, std::size_t start, std::vector<Perm>& gens,
                     std::unordered_set<Perm, PermHash>& current, std::size_t target,
                     const std::unordered_set<Perm, PermHash>& regular, const Perm& id) {
  if (current.size() == target) return true;
  for (std::size_t i = start; i < cands.size(); ++i) {
    if (current.count(cands[i])) continue;
    gens.push_back(cands[i]);
    auto next = closure(gens, id);
    bool ok = next.size() <= target && target % next.size() == 0;
    if (ok)
      for (const auto& x : next)
        if (x != id && regular.count(x)) {
          ok = false;
          break;
        }
    if (ok) {
      auto saved = std::move(current);
      current = std::move(next);
      if (find_complement(cands, i + 1, gens, current, target, regular, id)) return true;
      current = std::move(saved);
    }
    gens.pop_back();
  }
  return false;
}

// Gaussian elimination over GF(2); rows hold the right-hand side in bit
// `vars`. Returns a solution or nothing.
std::optional<std::vector<std::uint8_t>> solve_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t vars) {
  auto get = [](const std::vector<std::uint64_t>& r, std::size_t b) { return (r[b / 64] >> (b % 64)) & 1u; };
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < vars && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !get(rows[piv], c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && get(rows[r], c))
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (get(rows[r], vars)) return std::nullopt;
  std::vector<std::uint8_t> x(vars, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = static_cast<std::uint8_t>(get(rows[r], vars));
  return x;
}

}  // namespace

std::vector<GraphAutomorphism> graph_automorphism_group(const Graph& g, std::size_t cap) {
  std::size_t n = g.vertex_count;
  AutSearch s{g, cap, {}, std::vector<std::uint32_t>(n, UINT32_MAX), std::vector<std::uint32_t>(n, UINT32_MAX),
              std::vector<bool>(n, false), {}};
  std::vector<bool> seen(n, false);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = s.order.size();
    s.order.push_back(root);
    for (; head < s.order.size(); ++head) {
      for (auto w : g.adjacency[s.order[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          s.parent[w] = s.order[head];
          s.order.push_back(w);
        }
      }
    }
  }
  if (n > 0) s.run(0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

std::vector<GraphAutomorphism> right_regular(const FiniteGroup& g) {
  std::vector<GraphAutomorphism> out;
  for (Element h = 0; h < g.order(); ++h) {
    Perm p(g.order());
    for (Element t = 0; t < g.order(); ++t) p[t] = g.mul(t, h);
    out.push_back(std::move(p));
  }
  return out;
}

AutDecomposition decompose(const std::vector<GraphAutomorphism>& full, const FiniteGroup& g) {
  AutDecomposition d;
  d.full_group = full;
  d.regular_part = right_regular(g);
  std::unordered_set<Perm, PermHash> regular(d.regular_part.begin(), d.regular_part.end());
  d.is_grr = full.size() == g.order();
  for (const auto& c : full) {
    bool commutes = std::all_of(d.regular_part.begin(), d.regular_part.end(),
                                [&](const Perm& r) { return compose(c, r) == compose(r, c); });
    if (commutes) d.centralizer.push_back(c);
  }
  Perm id = identity_perm(g.order());
  if (full.size() % g.order() != 0) return d;
  std::size_t h = full.size() / g.order();
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  std::size_t center = centralizer(g, all).size();
  if (d.centralizer.size() != center * h) return d;
  std::vector<Perm> cands;
  for (const auto& c : d.centralizer)
    if (!regular.count(c)) cands.push_back(c);
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> current{id};
  if (find_complement(cands, 0, gens, current, h, regular, id)) {
    d.complement.assign(current.begin(), current.end());
    std::sort(d.complement.begin(), d.complement.end());
    d.is_direct_product = true;
  }
  return d;
}

Perm extend_to_flags(const GraphAutomorphism& theta, const FlagSpace& f) {
  const auto& lab = f.labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "extension needs a Cayley flag space");
  const auto& G = *lab->group;
  const auto& S = lab->set;
  if (theta.size() != G.order()) throw Error(Reason::BadParameter, "automorphism degree does not match |G|");
  std::size_t k = S.size();
  Perm out(f.flag_count());
  for (std::uint32_t x = 0; x < f.flag_count(); ++x) {
    Element g = static_cast<Element>(x / (2 * k));
    Element s = S.members[(x / 2) % k];
    Element tg = theta[g];
    Element sp = G.mul(theta[G.mul(s, g)], G.inverse(tg));
    if (!S.contains(sp))
      throw Error(Reason::InternalInconsistency, "vertex map is not a graph automorphism: edge {" + std::to_string(g) +
                                                     "," + std::to_string(G.mul(s, g)) + "} is not preserved");
    out[x] = static_cast<std::uint32_t>(2 * (tg * k + static_cast<std::size_t>(S.rank[sp])) + (x & 1u));
  }
  return out;
}

std::vector<std::size_t> orbit_lengths(const GraphAutomorphism& theta) { return cycle_type(theta); }

bool is_semi_regular(const GraphAutomorphism& theta) {
  auto t = cycle_type(theta);
  return t.empty() || t.front() == t.back();
}

GraphAutomorphism project_to_vertices(const Perm& flag_map, const FlagSpace& f) {
  const auto& lab = f.labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "projection needs a Cayley flag space");
  std::size_t k = lab->set.size();
  GraphAutomorphism out(lab->group->order());
  for (std::uint32_t g = 0; g < out.size(); ++g)
    out[g] = static_cast<std::uint32_t>(flag_map[static_cast<std::uint32_t>(2 * g * k)] / (2 * k));
  return out;
}

StableWitness construct_stable_witness(const GraphAutomorphism& theta, std::shared_ptr<const FlagSpace> f,
                                       const std::optional<Perm>& base, StableVariant variant) {
  if (!is_semi_regular(theta)) throw Error(Reason::NotSemiRegular, "automorphism is not semi-regular");
  const auto& lab = f->labeling();
  if (!lab) throw Error(Reason::NotCayleyLabeled, "stable maps need a Cayley flag space");
  const std::size_t nv = lab->group->order();
  const std::size_t k = lab->set.size();
  const Perm ext = extend_to_flags(theta, *f);

  // Dart order at each representative (as ranks) and its signs.
  auto dart_order_at = [&](std::uint32_t r) {
    std::vector<std::uint32_t> ranks(k);
    std::vector<std::uint8_t> signs(k, 0);
    if (base) {
      if (base->size() != f->flag_count()) throw Error(Reason::BadParameter, "base map has the wrong size");
      std::uint32_t start = static_cast<std::uint32_t>(2 * r * k);
      std::uint32_t x = start;
      for (std::size_t i = 0; i < k; ++i) {
        if (x / (2 * k) != r) throw Error(Reason::BadParameter, "base map rotation leaves vertex " + std::to_string(r));
        ranks[i] = static_cast<std::uint32_t>((x / 2) % k);
        signs[i] = static_cast<std::uint8_t>(x & 1u);
        x = (*base)[x];
      }
      if (x != start) throw Error(Reason::BadParameter, "base map rotation at vertex " + std::to_string(r) + " is not a k-cycle");
    } else {
      std::iota(ranks.begin(), ranks.end(), 0u);
    }
    return std::make_pair(ranks, signs);
  };

  // Orientable variant: unknowns are dart signs x_d, a sheet bit w per
  // theta-orbit of vertices and a side swap t_v composed into the lift.
  // Edge {d, d'}: x_d + x_d' + w_u + w_v = 1.  Transport: x_ext(d) = x_d + t_v
  // where v is the vertex of ext(d).
  std::vector<std::uint8_t> dart_sign;
  std::vector<std::uint8_t> swap(nv, 0);
  if (variant == StableVariant::orientable) {
    const std::size_t nd = f->dart_count();
    std::vector<std::uint32_t> vorbit(nv, UINT32_MAX);
    std::uint32_t nvorb = 0;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (vorbit[v] != UINT32_MAX) continue;
      for (std::uint32_t u = v; vorbit[u] == UINT32_MAX; u = theta[u]) vorbit[u] = nvorb;
      ++nvorb;
    }
    const std::size_t w0 = nd, t0 = nd + nvorb, vars = t0 + nv;
    const std::size_t words = (vars + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    auto new_row = [&] { return std::vector<std::uint64_t>(words, 0); };
    auto flip = [](std::vector<std::uint64_t>& row, std::size_t b) { row[b / 64] ^= std::uint64_t{1} << (b % 64); };
    for (std::uint32_t d = 0; d < nd; ++d) {
      std::uint32_t d2 = f->beta(2 * d) / 2;
      if (d2 >= d) {
        auto row = new_row();
        flip(row, d);
        flip(row, d2);
        flip(row, w0 + vorbit[d / k]);
        flip(row, w0 + vorbit[d2 / k]);
        flip(row, vars);
        rows.push_back(std::move(row));
      }
      std::uint32_t e = ext[2 * d] / 2;
      auto row = new_row();
      flip(row, d);
      flip(row, e);
      flip(row, t0 + e / k);
      rows.push_back(std::move(row));
    }
    auto sol = solve_gf2(std::move(rows), vars);
    if (!sol) throw Error(Reason::NoOrientableStableMap, "no dart signs give an orientable map preserved by a lift of theta");
    dart_sign.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nd));
    for (std::uint32_t v = 0; v < nv; ++v) swap[v] = (*sol)[t0 + v];
  }
  Perm lift(ext.size());
  for (std::uint32_t x = 0; x < ext.size(); ++x) lift[x] = ext[x] ^ swap[ext[x] / (2 * k)];

  Perm p(f->flag_count(), UINT32_MAX);
  std::vector<bool> visited(nv, false);
  for (std::uint32_t r = 0; r < nv; ++r) {
    if (visited[r]) continue;
    auto [ranks, signs] = dart_order_at(r);
    std::vector<std::uint32_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t dart = static_cast<std::uint32_t>(r * k + ranks[i]);
      std::uint8_t sg = variant == StableVariant::orientable ? dart_sign[dart] : signs[i];
      c[i] = 2 * dart + sg;
    }
    std::uint32_t v = r;
    while (!visited[v]) {
      visited[v] = true;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t a = c[i], b = c[(i + 1) % k];
        if (p[a] != UINT32_MAX || p[f->alpha(b)] != UINT32_MAX)
          throw Error(Reason::InternalInconsistency, "stable map construction revisits a flag");
        p[a] = b;
        p[f->alpha(b)] = f->alpha(a);
      }
      for (auto& x : c) x = lift[x];
      v = theta[v];
    }
  }
  MapPermutation m(f, std::move(p));
  if (conjugate(m.P(), lift) != m.P())
    throw Error(Reason::InternalInconsistency, "constructed map is not fixed by the lifted automorphism");
  if (variant == StableVariant::general && !base && is_orientable(m)) {
    auto sheet = orientation_orbits(*f, m.P());
    if (sheet[lift[0]] != sheet[0]) return construct_stable_witness(theta, f, std::nullopt, StableVariant::orientable);
  }
  if (variant == StableVariant::orientable) {
    if (!is_orientable(m))
      throw Error(Reason::InternalInconsistency, "orientable stable map construction produced a non-orientable map");
    auto sheet = orientation_orbits(*f, m.P());
    for (std::uint32_t x = 0; x < lift.size(); ++x)
      if (sheet[lift[x]] != sheet[x])
        throw Error(Reason::InternalInconsistency, "lifted automorphism reverses the orientation of the stable map");
  }
  return StableWitness{std::move(m), std::move(lift)};
}

MapPermutation construct_stable_map(const GraphAutomorphism& theta, std::shared_ptr<const FlagSpace> f,
                                    const std::optional<Perm>& base, StableVariant variant) {
  return construct_stable_witness(theta, std::move(f), base, variant).map;
}

}  // namespace mapcensus
