#include "mapcensus/tutte_map.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

std::vector<std::uint32_t> cycle_ids(const Perm& p, std::size_t* count = nullptr) {
  std::vector<std::uint32_t> id(p.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (id[s] != UINT32_MAX) continue;
    for (std::uint32_t x = s; id[x] == UINT32_MAX; x = p[x]) id[x] = next;
    ++next;
  }
  if (count) *count = next;
  return id;
}

Cycle cycle_from(const Perm& p, std::uint32_t start) {
  Cycle c{start};
  for (std::uint32_t x = p[start]; x != start; x = p[x]) c.push_back(x);
  return c;
}

// Pairs each cycle of p with the cycle through partner(x); first is the
// cycle holding the smaller flag.
std::vector<CyclePair> pair_cycles(const Perm& p, const Perm& partner, const Perm& expected_inverse_map,
                                   const char* what) {
  std::vector<CyclePair> out;
  std::vector<bool> done(p.size(), false);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (done[s]) continue;
    Cycle a = cycle_from(p, s);
    std::uint32_t t = partner[s];
    if (done[t] || std::find(a.begin(), a.end(), t) != a.end())
      throw Error(Reason::InternalInconsistency, std::string(what) + " cycle through flag " + std::to_string(s) +
                                                     " is self-conjugate");
    Cycle b = cycle_from(p, t);
    if (b.size() != a.size())
      throw Error(Reason::InternalInconsistency, std::string(what) + " cycles are not conjugate at flag " +
                                                     std::to_string(s));
    // b must read partner(a) backwards
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] != expected_inverse_map[a[(a.size() - i) % a.size()]])
        throw Error(Reason::InternalInconsistency, std::string(what) + " cycles are not conjugate at flag " +
                                                       std::to_string(s));
    }
    for (auto x : a) done[x] = true;
    for (auto x : b) done[x] = true;
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

struct Generators {
  const Perm* a;
  const Perm* b;
  const Perm* p;
};

// Extends x0 -> y0 to a flag bijection commuting with alpha, beta and P.
std::optional<Perm> propagate(const Generators& src, const Generators& dst, std::uint32_t x0, std::uint32_t y0) {
  std::size_t n = src.p->size();
  Perm tau(n, UINT32_MAX);
  std::vector<bool> used(n, false);
  std::vector<std::uint32_t> queue{x0};
  tau[x0] = y0;
  used[y0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t x = queue[qi];
    std::uint32_t y = tau[x];
    const std::pair<const Perm*, const Perm*> pairs[3] = {{src.a, dst.a}, {src.b, dst.b}, {src.p, dst.p}};
    for (const auto& [g1, g2] : pairs) {
      std::uint32_t xx = (*g1)[x], yy = (*g2)[y];
      if (tau[xx] == UINT32_MAX) {
        if (used[yy]) return std::nullopt;
        tau[xx] = yy;
        used[yy] = true;
        queue.push_back(xx);
      } else if (tau[xx] != yy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return tau;
}

}  // namespace

std::optional<AxiomViolation> check_map_axioms(const FlagSpace& f, const Perm& p) {
  std::size_t n = f.flag_count();
  if (p.size() != n || !is_permutation(p))
    throw Error(Reason::BadParameter, "P is not a permutation of the " + std::to_string(n) + " flags");
  auto cyc = cycle_ids(p);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cyc[x] == cyc[f.alpha(x)])
      return AxiomViolation{1, x, "axiom (i): flag " + std::to_string(x) + " and alpha of it share a P-cycle"};
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (p[f.alpha(p[f.alpha(x)])] != x)
      return AxiomViolation{2, x, "axiom (ii): alpha P alpha != P^-1 at flag " + std::to_string(x)};
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : {f.alpha(x), f.beta(x), p[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) {
    std::uint32_t w = 0;
    while (seen[w]) ++w;
    return AxiomViolation{3, w, "axiom (iii): <alpha, beta, P> is not transitive (flag " + std::to_string(w) +
                                    " unreachable from flag 0)"};
  }
  return std::nullopt;
}

MapPermutation::MapPermutation(std::shared_ptr<const FlagSpace> space, Perm p)
    : space_(std::move(space)), p_(std::move(p)) {
  if (auto v = check_map_axioms(*space_, p_)) throw Error(Reason::AxiomViolation, v->message);
}

MapPermutation validate_map(std::shared_ptr<const FlagSpace> f, Perm p) { return MapPermutation(std::move(f), std::move(p)); }

std::vector<std::size_t> MapInventory::face_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& f : faces) out.push_back(f.first.size());
  std::sort(out.begin(), out.end());
  return out;
}

Perm face_permutation(const FlagSpace& f, const Perm& p) {
  Perm out(p.size());
  for (std::uint32_t x = 0; x < p.size(); ++x) out[x] = p[f.alpha(f.beta(x))];
  return out;
}

std::vector<std::uint8_t> orientation_orbits(const FlagSpace& f, const Perm& p, std::size_t* orbit_count) {
  std::size_t n = p.size();
  std::vector<std::uint8_t> label(n, 0xFF);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (label[s] != 0xFF) continue;
    auto l = static_cast<std::uint8_t>(std::min<std::size_t>(count, 0xFE));
    std::vector<std::uint32_t> stack{s};
    label[s] = l;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : {p[x], f.alpha(f.beta(x))}) {
        if (label[y] == 0xFF) {
          label[y] = l;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  if (orbit_count) *orbit_count = count;
  return label;
}

bool is_orientable(const MapPermutation& m) {
  std::size_t count = 0;
  orientation_orbits(m.space(), m.P(), &count);
  return count == 2;
}

MapInventory inventory(const MapPermutation& m) {
  const auto& f = m.space();
  MapInventory inv;
  inv.vertices = pair_cycles(m.P(), f.alpha(), f.alpha(), "vertex");
  inv.edge_count = f.quadricell_count();
  inv.faces = pair_cycles(face_permutation(f, m.P()), f.beta(), f.beta(), "face");
  inv.euler_characteristic = static_cast<std::int64_t>(inv.vertices.size()) -
                             static_cast<std::int64_t>(inv.edge_count) + static_cast<std::int64_t>(inv.faces.size());
  inv.orientable = is_orientable(m);
  if (inv.orientable) {
    if (inv.euler_characteristic % 2 != 0)
      throw Error(Reason::InternalInconsistency, "orientable map with odd Euler characteristic");
    inv.genus = (2 - inv.euler_characteristic) / 2;
  } else {
    inv.genus = 2 - inv.euler_characteristic;
  }
  return inv;
}

std::vector<Perm> map_automorphisms(const MapPermutation& m) {
  const auto& f = m.space();
  Generators g{&f.alpha(), &f.beta(), &m.P()};
  std::vector<Perm> out;
  for (std::uint32_t y = 0; y < f.flag_count(); ++y) {
    if (auto tau = propagate(g, g, 0, y)) out.push_back(std::move(*tau));
  }
  return out;
}

std::vector<Perm> orientation_preserving_automorphisms(const MapPermutation& m) {
  auto all = map_automorphisms(m);
  std::size_t count = 0;
  auto label = orientation_orbits(m.space(), m.P(), &count);
  if (count != 2) return all;
  std::vector<Perm> out;
  for (auto& t : all)
    if (label[t[0]] == label[0]) out.push_back(std::move(t));
  return out;
}

std::optional<Perm> is_isomorphic(const MapPermutation& m1, const MapPermutation& m2) {
  const auto& f1 = m1.space();
  const auto& f2 = m2.space();
  if (f1.flag_count() != f2.flag_count()) return std::nullopt;
  Generators g1{&f1.alpha(), &f1.beta(), &m1.P()};
  Generators g2{&f2.alpha(), &f2.beta(), &m2.P()};
  for (std::uint32_t y = 0; y < f2.flag_count(); ++y) {
    if (auto tau = propagate(g1, g2, 0, y)) return tau;
  }
  return std::nullopt;
}

std::vector<Perm> side_swap_generators(const FlagSpace& f) {
  std::vector<Perm> out;
  for (std::size_t e = 0; e < f.quadricell_count(); ++e) {
    Perm s = identity_perm(f.flag_count());
    for (auto x : f.quadricell(e)) s[x] = f.alpha(x);
    out.push_back(std::move(s));
  }
  return out;
}

Perm canonical_block_swap(const FlagSpace& f, const Perm& p, const std::vector<std::uint32_t>& block_of,
                          std::size_t block_count, std::optional<bool> forced, std::size_t tie_cap) {
  const std::size_t n = p.size();
  // Breadth-first over positions; only assignments reaching the running
  // lexicographic minimum survive.
  std::vector<std::vector<std::int8_t>> states(1, std::vector<std::int8_t>(block_count, -1));
  if (forced) states[0][block_of[0]] = *forced ? 1 : 0;
  std::vector<std::vector<std::int8_t>> next;
  Perm out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t best = UINT32_MAX;
    next.clear();
    auto consider = [&](std::vector<std::int8_t>&& st, std::uint32_t val) {
      if (val < best) {
        best = val;
        next.clear();
      }
      if (val == best) {
        next.push_back(std::move(st));
        if (next.size() > tie_cap)
          throw Error(Reason::CapExceeded, "canonical form: more than " + std::to_string(tie_cap) + " tied states");
      }
    };
    for (auto& st : states) {
      const std::uint32_t bi = block_of[i];
      for (std::int8_t b : {std::int8_t{0}, std::int8_t{1}}) {
        if (st[bi] >= 0 && st[bi] != b) continue;
        std::uint32_t ti = b ? f.alpha(i) : i;
        std::uint32_t y = p[ti];
        std::uint32_t by = block_of[y];
        std::int8_t fixed_y = (by == bi) ? b : st[by];
        for (std::int8_t c : {std::int8_t{0}, std::int8_t{1}}) {
          if (fixed_y >= 0 && fixed_y != c) continue;
          std::uint32_t val = c ? f.alpha(y) : y;
          if (val > best) continue;
          auto ns = st;
          ns[bi] = b;
          ns[by] = c;
          consider(std::move(ns), val);
        }
      }
    }
    out[i] = best;
    states.swap(next);
  }
  return out;
}

Perm canonical_side_class(const MapPermutation& m, std::size_t tie_cap) {
  const auto& f = m.space();
  std::vector<std::uint32_t> blocks(f.flag_count());
  for (std::uint32_t x = 0; x < f.flag_count(); ++x) blocks[x] = f.quadricell_of(x);
  return canonical_block_swap(f, m.P(), blocks, f.quadricell_count(), std::nullopt, tie_cap);
}

Perm canonical_oriented_side_class(const FlagSpace& f, const Perm& p, std::uint32_t marker, std::size_t tie_cap) {
  std::size_t count = 0;
  auto label = orientation_orbits(f, p, &count);
  if (count != 2) throw Error(Reason::BadParameter, "oriented canonical form needs an orientable map");
  std::vector<std::uint32_t> blocks(f.flag_count());
  for (std::uint32_t x = 0; x < f.flag_count(); ++x) blocks[x] = f.quadricell_of(x);
  bool bit = label[0] != label[marker];
  return canonical_block_swap(f, p, blocks, f.quadricell_count(), bit, tie_cap);
}

Perm brute_force_side_class(const MapPermutation& m, std::size_t cap) {
  const auto& f = m.space();
  std::size_t e = f.quadricell_count();
  if (e >= 63 || (std::size_t{1} << e) > cap)
    throw Error(Reason::CapExceeded, "2^" + std::to_string(e) + " side swaps exceed cap " + std::to_string(cap));
  Perm best;
  Perm tau(f.flag_count());
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << e); ++w) {
    for (std::uint32_t x = 0; x < f.flag_count(); ++x) tau[x] = ((w >> f.quadricell_of(x)) & 1u) ? f.alpha(x) : x;
    Perm q = conjugate(m.P(), tau);
    if (best.empty() || q < best) best = std::move(q);
  }
  return best;
}

MapFile read_map_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) throw Error(Reason::ParseError, "empty map file");
  std::istringstream hs(lines[0]);
  std::string tag;
  long long n = 0;
  if (!(hs >> tag >> n) || tag != "map" || n <= 0) throw Error(Reason::ParseError, "expected header 'map <flag_count>'");
  auto parse = [&](const std::string& l, const char* what) {
    std::istringstream ss(l);
    Perm out;
    long long v;
    while (ss >> v) {
      if (v < 0 || v >= n) throw Error(Reason::ParseError, std::string(what) + " image " + std::to_string(v) + " out of range");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ss.eof()) throw Error(Reason::ParseError, std::string(what) + " line has a non-numeric token");
    if (static_cast<long long>(out.size()) != n)
      throw Error(Reason::ParseError, std::string(what) + " line has " + std::to_string(out.size()) + " images, expected " +
                                          std::to_string(n));
    if (!is_permutation(out)) throw Error(Reason::ParseError, std::string(what) + " line is not a permutation");
    return out;
  };
  if (lines.size() != 2 && lines.size() != 4)
    throw Error(Reason::ParseError, "map file needs 2 or 4 non-empty lines, found " + std::to_string(lines.size()));
  MapFile mf;
  mf.p = parse(lines[1], "P");
  if (lines.size() == 4) {
    mf.alpha = parse(lines[2], "alpha");
    mf.beta = parse(lines[3], "beta");
  }
  return mf;
}

MapFile load_map_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Reason::ParseError, "cannot open map file " + path);
  return read_map_file(f);
}

void write_map(std::ostream& out, const MapPermutation& m, bool with_involutions) {
  auto line = [&](const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  };
  out << "map " << m.P().size() << '\n';
  line(m.P());
  if (with_involutions) {
    line(m.space().alpha());
    line(m.space().beta());
  }
}

MapPermutation fig1_map() {
  enum : std::uint32_t { x, y, z, u, v, w };
  auto id = [](std::uint32_t e) { return 4 * e; };
  auto a = [](std::uint32_t e) { return 4 * e + 1; };
  auto b = [](std::uint32_t e) { return 4 * e + 2; };
  auto ab = [](std::uint32_t e) { return 4 * e + 3; };
  const std::vector<std::vector<std::uint32_t>> cyc = {
      {id(x), id(y), id(z)},     {ab(x), id(u), id(w)},    {ab(z), ab(u), id(v)}, {ab(y), ab(v), ab(w)},
      {a(x), a(z), a(y)},        {b(x), a(w), a(u)},       {b(z), a(v), b(u)},    {b(y), b(w), b(v)},
  };
  Perm alpha(24), beta(24), p(24);
  for (std::uint32_t i = 0; i < 24; ++i) {
    alpha[i] = i ^ 1u;
    beta[i] = i ^ 2u;
  }
  for (const auto& c : cyc)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  auto space = std::make_shared<const FlagSpace>(std::move(alpha), std::move(beta));
  return MapPermutation(std::move(space), std::move(p));
}

}  // namespace mapcensus
