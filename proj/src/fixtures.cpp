#include "mapcensus/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/oracle.hpp"

namespace mapcensus {

namespace {

std::vector<FixtureInfo> make_list() {
  std::vector<FixtureInfo> v;
  auto cay = [&](std::string name, std::string desc, std::size_t nu, std::size_t eps, std::size_t aut,
                 std::uint64_t o) {
    FixtureInfo f;
    f.name = std::move(name);
    f.kind = FixtureKind::cayley;
    f.description = std::move(desc);
    f.vertices = nu;
    f.edges = eps;
    f.aut_order = aut;
    f.orientable_census = o;
    v.push_back(std::move(f));
  };
  cay("K3", "Cay(Z_3 : {1,2})", 3, 3, 6, 1);
  cay("C4", "Cay(Z_4 : {1,3})", 4, 4, 8, 1);
  cay("C5", "Cay(Z_5 : {1,4})", 5, 5, 10, 1);
  cay("CUBE", "Cay(Z_2^3 : {e1,e2,e3})", 8, 12, 48, 46);
  FixtureInfo m;
  m.name = "FIG1";
  m.kind = FixtureKind::map;
  m.description = "K4 on the torus, generic flag space";
  m.vertices = 4;
  m.edges = 6;
  m.faces = 2;
  m.face_lengths = {4, 8};
  m.euler_characteristic = 0;
  m.orientable = true;
  v.push_back(std::move(m));
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
void expect(FixtureCheck& c, const std::string& what, const T& got, const T& want) {
  std::ostringstream os;
  bool ok = got == want;
  os << (ok ? "ok   " : "FAIL ") << what << " = " << got;
  if (!ok) os << " (expected " << want << ")";
  c.lines.push_back(os.str());
  c.passed = c.passed && ok;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = make_list();
  return list;
}

const FixtureInfo& fixture_info(const std::string& name) {
  for (const auto& f : fixture_list())
    if (f.name == name) return f;
  throw Error(Reason::BadParameter, "unknown fixture '" + name + "' (known: K3, C4, C5, CUBE, FIG1)");
}

bool is_fixture(const std::string& name) {
  for (const auto& f : fixture_list())
    if (f.name == name) return true;
  return false;
}

FiniteGroup fixture_group(const std::string& name) {
  const auto& f = fixture_info(name);
  if (f.kind != FixtureKind::cayley) throw Error(Reason::BadParameter, "fixture " + name + " is a map, not a Cayley graph");
  if (name == "K3") return named_group(GroupFamily::cyclic, 3);
  if (name == "C4") return named_group(GroupFamily::cyclic, 4);
  if (name == "C5") return named_group(GroupFamily::cyclic, 5);
  return named_group(GroupFamily::elementary_abelian_2, 3);
}

std::vector<Element> fixture_cayset(const std::string& name) {
  const auto& f = fixture_info(name);
  if (f.kind != FixtureKind::cayley) throw Error(Reason::BadParameter, "fixture " + name + " is a map, not a Cayley graph");
  if (name == "K3") return {1, 2};
  if (name == "C4") return {1, 3};
  if (name == "C5") return {1, 4};
  return {1, 2, 4};
}

CayleyInstance fixture_instance(const std::string& name) {
  auto s = fixture_cayset(name);
  return make_cayley_instance(fixture_group(name), s);
}

MapPermutation fixture_map(const std::string& name) {
  const auto& f = fixture_info(name);
  if (f.kind != FixtureKind::map) throw Error(Reason::BadParameter, "fixture " + name + " is not a map");
  return fig1_map();
}

FixtureCheck run_fixture_check(const std::string& name, unsigned workers) {
  const auto& f = fixture_info(name);
  FixtureCheck c;
  c.name = name;
  if (f.kind == FixtureKind::map) {
    auto m = fixture_map(name);
    auto inv = inventory(m);
    expect(c, "vertices", inv.vertices.size(), f.vertices);
    expect(c, "edges", inv.edge_count, f.edges);
    expect(c, "faces", inv.faces.size(), f.faces);
    expect(c, "face_lengths", join(inv.face_lengths()), join(f.face_lengths));
    expect(c, "euler_characteristic", inv.euler_characteristic, f.euler_characteristic);
    expect(c, "orientable", yes_no(inv.orientable), yes_no(f.orientable));
    return c;
  }
  auto inst = fixture_instance(name);
  expect(c, "vertices", static_cast<std::size_t>(inst.graph.vertex_count), f.vertices);
  expect(c, "edges", inst.graph.edge_count(), f.edges);
  auto aut = graph_automorphism_group(inst.graph);
  expect(c, "aut_order", aut.size(), f.aut_order);
  auto formula = census(inst, {}, Surface::O);
  expect(c, "formula_O", formula.total.exact_value.get_str(), std::to_string(f.orientable_census));
  auto gs = enumerate_embeddings(inst.flags, Semantics::sigma, Surface::O, kDefaultGroundCap, workers);
  std::vector<Perm> acting;
  for (const auto& r : right_regular(*inst.group)) acting.push_back(extend_to_flags(r, *inst.flags));
  auto oc = burnside_count(acting, gs, workers);
  expect(c, "oracle_O", oc.burnside_count, f.orientable_census);
  return c;
}

std::vector<std::string> dump_fixture(const std::string& name, const std::string& dir) {
  const auto& f = fixture_info(name);
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto open = [&](const std::string& file) {
    std::string path = (std::filesystem::path(dir) / file).string();
    std::ofstream out(path);
    if (!out) throw Error(Reason::BadParameter, "cannot write " + path);
    written.push_back(path);
    return out;
  };
  if (f.kind == FixtureKind::map) {
    auto out = open(name + ".map");
    write_map(out, fixture_map(name), true);
    return written;
  }
  {
    auto out = open(name + ".group");
    write_group(out, fixture_group(name));
  }
  {
    auto out = open(name + ".cayset");
    auto s = fixture_cayset(name);
    write_cayset(out, s);
  }
  return written;
}

}  // namespace mapcensus
