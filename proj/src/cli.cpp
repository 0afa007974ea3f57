#include "mapcensus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mapcensus/census.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/fixtures.hpp"
#include "mapcensus/oracle.hpp"
#include "mapcensus/special.hpp"

namespace mapcensus {

std::vector<GraphAutomorphism> read_automorphisms(std::istream& in) {
  std::string line;
  auto next = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto p = out.find_first_not_of(" \t\r");
      if (p == std::string::npos || out[p] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next(line)) throw Error(Reason::ParseError, "empty automorphism file");
  std::istringstream head(line);
  std::string word;
  long long count = -1;
  if (!(head >> word >> count) || word != "automorphisms" || count < 0)
    throw Error(Reason::ParseError, "expected 'automorphisms <count>' on the first line");
  std::vector<GraphAutomorphism> out;
  for (long long i = 0; i < count; ++i) {
    if (!next(line)) throw Error(Reason::ParseError, "automorphism file ends after " + std::to_string(i) + " entries");
    std::istringstream ls(line);
    Perm p;
    long long v;
    while (ls >> v) {
      if (v < 0) throw Error(Reason::ParseError, "negative vertex image on automorphism line " + std::to_string(i + 1));
      p.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) throw Error(Reason::ParseError, "non-numeric token on automorphism line " + std::to_string(i + 1));
    if (!is_permutation(p))
      throw Error(Reason::ParseError, "automorphism line " + std::to_string(i + 1) + " is not a permutation");
    if (!out.empty() && p.size() != out.front().size())
      throw Error(Reason::ParseError, "automorphism line " + std::to_string(i + 1) + " has the wrong length");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<GraphAutomorphism> load_automorphisms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Reason::ParseError, "cannot open " + path);
  return read_automorphisms(in);
}

void write_automorphisms(std::ostream& out, const std::vector<GraphAutomorphism>& autos) {
  out << "automorphisms " << autos.size() << '\n';
  for (const auto& a : autos) {
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i];
    out << '\n';
  }
}

namespace {

struct Table {
  std::string name;
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
};

class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {}

  template <class T>
  void field(const std::string& key, const T& value) {
    std::ostringstream v;
    v << value;
    if (kv_)
      os_ << key << '=' << v.str() << '\n';
    else
      os_ << key << ": " << v.str() << '\n';
  }

  void note(const std::string& text) {
    if (!kv_) os_ << text << '\n';
  }

  void table(const Table& t) {
    if (kv_) {
      os_ << t.name << ".rows=" << t.rows.size() << '\n';
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.cols.size(); ++j)
          os_ << t.name << '.' << i << '.' << t.cols[j] << '=' << t.rows[i][j] << '\n';
      return;
    }
    std::vector<std::size_t> w(t.cols.size());
    for (std::size_t j = 0; j < t.cols.size(); ++j) w[j] = t.cols[j].size();
    for (const auto& r : t.rows)
      for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
    auto emit = [&](const std::vector<std::string>& r) {
      std::string line;
      for (std::size_t j = 0; j < r.size(); ++j) {
        std::string cell = r[j];
        if (j + 1 < r.size()) cell.resize(w[j], ' ');
        line += (j ? "  " : "") + cell;
      }
      os_ << line << '\n';
    };
    emit(t.cols);
    for (const auto& r : t.rows) emit(r);
  }

  std::string str() const { return os_.str(); }

 private:
  bool kv_;
  std::ostringstream os_;
};

struct Opts {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string surface = "L";
  std::string semantics = "sigma";
  std::string acting = "rg";
  std::string mode;
  std::string h_file;
  std::string dump_dir;
  std::string on;
  std::string group_file, cayset_file;
  std::string dir = ".";
  std::uint64_t cap = kDefaultGroundCap;
  unsigned workers = 1;
  std::uint32_t element = 0;
  bool orientable_variant = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class V>
std::string join(const V& v, const std::string& sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : v) {
    if (!first) os << sep;
    first = false;
    os << x;
  }
  return os.str();
}

std::string ratio_str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

constexpr std::string_view kFixturePrefix = "fixtures:";

bool is_fixture_ref(const std::string& s) { return s.rfind(kFixturePrefix, 0) == 0; }
std::string fixture_name(const std::string& s) { return s.substr(kFixturePrefix.size()); }

CayleyInstance resolve_instance(const std::vector<std::string>& in) {
  if (in.size() == 1 && is_fixture_ref(in[0])) return fixture_instance(fixture_name(in[0]));
  if (in.size() != 2)
    throw Error(Reason::BadParameter, "expected <group-file> <cayset-file> or fixtures:NAME");
  auto g = load_group(in[0]);
  auto s = load_cayset(in[1]);
  return make_cayley_instance(std::move(g), s);
}

std::vector<GraphAutomorphism> resolve_h(const Opts& o, const CayleyInstance& inst, ActingChoice acting) {
  if (!o.h_file.empty()) {
    auto h = load_automorphisms(o.h_file);
    for (const auto& x : h)
      if (x.size() != inst.graph.vertex_count)
        throw Error(Reason::BadParameter, "H element has " + std::to_string(x.size()) + " images, expected " +
                                              std::to_string(inst.graph.vertex_count));
    return h;
  }
  if (acting == ActingChoice::full)
    throw Error(Reason::BadParameter, "the class-sum formula needs R(G) x H; use --acting rg or rgxh");
  if (acting == ActingChoice::rgxh) return select_acting_group(inst, acting).h;
  return {};
}

ModeSpec mode_or(const Opts& o, const std::string& fallback) { return parse_mode(o.mode.empty() ? fallback : o.mode); }

std::string report_value(const CountReport& r) { return r.to_string(); }

void describe_instance(Report& rep, const CayleyInstance& inst) {
  rep.field("group_order", inst.group->order());
  rep.field("set_size", inst.set.size());
  rep.field("vertices", inst.graph.vertex_count);
  rep.field("edges", inst.graph.edge_count());
}

int cmd_group_info(const Opts& o, Report& rep) {
  if (o.inputs.size() != 1) throw Error(Reason::BadParameter, "group info takes one group file");
  auto g = load_group(o.inputs[0]);
  auto cls = conjugacy_classes(g);
  bool abelian = cls.size() == g.order();
  rep.field("order", g.order());
  rep.field("abelian", yes_no(abelian));
  rep.field("conjugacy_classes", cls.size());
  Table t{"elements", {"element", "name", "order", "inverse"}, {}};
  for (Element x = 0; x < g.order(); ++x)
    t.rows.push_back({std::to_string(x), g.name(x), std::to_string(g.element_order(x)), std::to_string(g.inverse(x))});
  rep.table(t);
  return 0;
}

int cmd_group_make(const Opts& o, Report&, std::string& raw) {
  if (o.inputs.size() != 2) throw Error(Reason::BadParameter, "group make takes <family> <param>");
  const std::string& fam = o.inputs[0];
  std::uint32_t param = 0;
  try {
    param = static_cast<std::uint32_t>(std::stoul(o.inputs[1]));
  } catch (const std::exception&) {
    throw Error(Reason::BadParameter, "parameter '" + o.inputs[1] + "' is not a non-negative integer");
  }
  GroupFamily f;
  if (fam == "cyclic")
    f = GroupFamily::cyclic;
  else if (fam == "dihedral")
    f = GroupFamily::dihedral;
  else if (fam == "symmetric")
    f = GroupFamily::symmetric;
  else if (fam == "elem2")
    f = GroupFamily::elementary_abelian_2;
  else
    throw Error(Reason::BadParameter, "unknown family '" + fam + "' (cyclic, dihedral, symmetric, elem2)");
  std::ostringstream os;
  write_group(os, named_group(f, param));
  raw = os.str();
  return 0;
}

int cmd_cayley_check(const Opts& o, Report& rep) {
  if (!(o.inputs.size() == 1 && is_fixture_ref(o.inputs[0])) && o.inputs.size() == 2) {
    auto g = load_group(o.inputs[0]);
    auto s = load_cayset(o.inputs[1]);
    auto issues = check_cayley_set(g, s);
    if (!issues.empty()) {
      std::string msg;
      for (const auto& i : issues) msg += (msg.empty() ? "" : "; ") + i.message;
      throw Error(issues.front().reason, msg);
    }
  }
  auto inst = resolve_instance(o.inputs);
  describe_instance(rep, inst);
  auto aut = graph_automorphism_group(inst.graph);
  auto d = decompose(aut, *inst.group);
  rep.field("aut_order", aut.size());
  rep.field("is_grr", yes_no(d.is_grr));
  rep.field("is_direct_product", yes_no(d.is_direct_product));
  rep.field("centralizer_order", d.centralizer.size());
  rep.field("h_order", d.is_direct_product ? d.complement.size() : std::size_t{0});
  return 0;
}

MapPermutation resolve_map(const Opts& o) {
  if (o.inputs.size() != 1) throw Error(Reason::BadParameter, "map check takes one map file");
  if (is_fixture_ref(o.inputs[0])) return fixture_map(fixture_name(o.inputs[0]));
  auto mf = load_map_file(o.inputs[0]);
  if (mf.alpha) {
    auto space = std::make_shared<const FlagSpace>(*mf.alpha, *mf.beta);
    return MapPermutation(space, mf.p);
  }
  std::vector<std::string> src;
  if (!o.on.empty())
    src = {o.on};
  else if (!o.group_file.empty() && !o.cayset_file.empty())
    src = {o.group_file, o.cayset_file};
  else
    throw Error(Reason::BadParameter, "a two-line map file needs --on fixtures:NAME or --group and --cayset");
  auto inst = resolve_instance(src);
  if (mf.p.size() != inst.flags->flag_count())
    throw Error(Reason::BadParameter, "map has " + std::to_string(mf.p.size()) + " flags, the Cayley graph has " +
                                          std::to_string(inst.flags->flag_count()));
  return MapPermutation(inst.flags, mf.p);
}

void describe_map(Report& rep, const MapPermutation& m) {
  auto inv = inventory(m);
  rep.field("flags", m.space().flag_count());
  rep.field("vertices", inv.vertices.size());
  rep.field("edges", inv.edge_count);
  rep.field("faces", inv.faces.size());
  rep.field("face_lengths", join(inv.face_lengths()));
  rep.field("euler_characteristic", inv.euler_characteristic);
  rep.field("orientable", yes_no(inv.orientable));
  rep.field("genus", inv.genus);
  rep.field("aut_order", map_automorphisms(m).size());
}

int cmd_map_check(const Opts& o, Report& rep) {
  describe_map(rep, resolve_map(o));
  return 0;
}

int cmd_map_stable(const Opts& o, Report& rep, std::string& raw) {
  auto inst = resolve_instance(o.inputs);
  auto sel = select_acting_group(inst, parse_acting(o.acting));
  if (o.element >= sel.vertex_maps.size())
    throw Error(Reason::OutOfRange, "element " + std::to_string(o.element) + " out of range (acting group order " +
                                        std::to_string(sel.vertex_maps.size()) + ")");
  const auto& theta = sel.vertex_maps[o.element];
  auto m = construct_stable_map(theta, inst.flags, std::nullopt,
                                o.orientable_variant ? StableVariant::orientable : StableVariant::general);
  rep.field("element", o.element);
  rep.field("order", perm_order(theta));
  describe_map(rep, m);
  std::ostringstream os;
  write_map(os, m, false);
  raw = os.str();
  return 0;
}

int cmd_census_formula(const Opts& o, Report& rep) {
  auto inst = resolve_instance(o.inputs);
  const auto acting = parse_acting(o.acting);
  auto h = resolve_h(o, inst, acting);
  const Surface surface = parse_surface(o.surface);
  const ModeSpec mode = mode_or(o, "exact");
  auto res = census(inst, h, surface, mode);
  describe_instance(rep, inst);
  rep.field("surface", surface_name(surface));
  rep.field("mode", mode_name(mode));
  rep.field("acting_order", res.acting_order);
  Table t{"classes", {"class_size", "order", "l", "branch", "alpha", "phi"}, {}};
  for (const auto& r : res.rows)
    t.rows.push_back({std::to_string(r.stats.class_size), std::to_string(r.stats.order),
                      std::to_string(r.stats.l_value), branch_name(r.stats.branch),
                      std::to_string(r.stats.alpha_exponent), report_value(r.phi)});
  rep.table(t);
  rep.field("total", report_value(res.total));
  return 0;
}

int cmd_census_oracle(const Opts& o, Report& rep) {
  auto inst = resolve_instance(o.inputs);
  const Surface surface = parse_surface(o.surface);
  const Semantics sem = parse_semantics(o.semantics);
  const auto acting = parse_acting(o.acting);
  std::optional<std::vector<GraphAutomorphism>> hov;
  if (!o.h_file.empty()) hov = resolve_h(o, inst, acting);
  auto sel = select_acting_group(inst, acting, hov);
  auto gs = enumerate_embeddings(inst.flags, sem, surface, o.cap, o.workers);
  auto oc = burnside_count(sel.flag_maps, gs, o.workers);
  describe_instance(rep, inst);
  rep.field("surface", surface_name(surface));
  rep.field("semantics", semantics_name(sem));
  rep.field("acting", acting_name(acting));
  rep.field("acting_order", oc.acting_order);
  rep.field("ground_set", gs.size());
  rep.field("fixed_sum", oc.fixed_sum);
  rep.field("burnside_count", oc.burnside_count);
  rep.field("union_find_count", oc.union_find_count);
  Table fx{"fixed", {"element", "order", "fixed"}, {}};
  for (std::size_t i = 0; i < oc.fixed_counts.size(); ++i)
    fx.rows.push_back({std::to_string(i), std::to_string(perm_order(sel.vertex_maps[i])),
                       std::to_string(oc.fixed_counts[i])});
  rep.table(fx);
  Table ob{"orbits", {"orbit", "size", "euler", "orientable", "genus"}, {}};
  for (std::size_t i = 0; i < oc.orbits.size(); ++i) {
    const auto& s = oc.orbits[i];
    ob.rows.push_back({std::to_string(i), std::to_string(s.size), std::to_string(s.euler_characteristic),
                       yes_no(s.orientable), std::to_string(s.genus)});
  }
  rep.table(ob);
  if (!o.dump_dir.empty()) {
    std::filesystem::create_directories(o.dump_dir);
    for (std::size_t i = 0; i < oc.orbits.size(); ++i) {
      auto path = std::filesystem::path(o.dump_dir) / ("orbit_" + std::to_string(i) + ".map");
      std::ofstream out(path);
      if (!out) throw Error(Reason::BadParameter, "cannot write " + path.string());
      write_map(out, MapPermutation(inst.flags, gs.representatives[oc.orbits[i].representative]), false);
    }
    rep.field("dumped", oc.orbits.size());
  }
  return 0;
}

int cmd_verify(const Opts& o, Report& rep) {
  auto inst = resolve_instance(o.inputs);
  const Surface surface = parse_surface(o.surface);
  const Semantics sem = parse_semantics(o.semantics);
  const auto acting = parse_acting(o.acting);
  auto h = resolve_h(o, inst, acting);
  auto cr = compare_with_formula(inst, h, surface, sem, o.cap, o.workers);
  describe_instance(rep, inst);
  rep.field("surface", surface_name(surface));
  rep.field("semantics", semantics_name(sem));
  rep.field("acting_order", cr.acting_order);
  Table t{"classes", {"class_size", "order", "l", "branch", "alpha", "oracle", "formula", "ratio"}, {}};
  for (const auto& l : cr.lines)
    t.rows.push_back({std::to_string(l.class_size), std::to_string(l.order), std::to_string(l.l_value),
                      branch_name(l.branch), std::to_string(l.alpha_exponent), std::to_string(l.oracle_fixed),
                      l.formula_fixed.get_str(), l.ratio_defined ? ratio_str(l.ratio) : "undefined"});
  rep.table(t);
  rep.field("oracle", cr.oracle_total);
  rep.field("formula", ratio_str(cr.formula_total));
  rep.field("ratio", cr.total_ratio_defined ? ratio_str(cr.total_ratio) : "undefined");
  rep.field("match", yes_no(mpq_class(mpz_class(static_cast<unsigned long>(cr.oracle_total))) == cr.formula_total));
  rep.field("oracle_O", cr.oracle_O);
  rep.field("oracle_N", cr.oracle_N);
  rep.field("oracle_L", cr.oracle_L);
  rep.field("additive", yes_no(cr.oracle_O + cr.oracle_N == cr.oracle_L));
  return 0;
}

std::uint32_t parse_n(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw Error(Reason::BadParameter, "'" + s + "' is not a non-negative integer");
  }
}

std::string cycles_1based(const Perm& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

int cmd_sym(const Opts& o, Report& rep) {
  if (o.inputs.size() != 1) throw Error(Reason::BadParameter, "sym-grr takes <n>");
  const std::uint32_t n = parse_n(o.inputs[0]);
  const Surface surface = parse_surface(o.surface.empty() ? "O" : o.surface);
  const ModeSpec mode = mode_or(o, n <= 10 ? "exact" : "log2");
  SymCensusResult res = surface == Surface::O ? sym_orientable_census(n, mode) : sym_locally_census(n, surface, mode);
  rep.field("n", n);
  rep.field("surface", surface_name(surface));
  rep.field("mode", mode_name(mode));
  rep.field("label", res.formula_value_only ? "formula value only" : "GRR range");
  if (!res.classes.empty()) {
    Table t{"partitions", {"partition", "class_size", "order", "half_power", "bucket"}, {}};
    for (const auto& c : res.classes)
      t.rows.push_back({c.partition.to_string(), c.class_size.get_str(), std::to_string(c.order),
                        c.has_half_power ? c.half_power_type.to_string() : "-", c.bucket == Bucket::A ? "A" : "B"});
    rep.table(t);
  }
  if (surface != Surface::O) {
    Table lt{"l_table", {"class", "closed_form", "centralizer", "brute_force", "discrepancy"}, {}};
    for (const auto& r : sym_l_table(n))
      lt.rows.push_back({r.involution_type.to_string(), r.closed_form.get_str(), r.centralizer.get_str(),
                         r.brute_forced ? r.brute_force.get_str() : "-", yes_no(r.discrepancy)});
    rep.table(lt);
    if (n >= 13) {
      auto [b1, b2] = build_b1_b2(n);
      rep.field("b1", cycles_1based(b1));
      rep.field("b1_type", partition_of_cycle_type(cycle_type(b1)).to_string());
      rep.field("b2", cycles_1based(b2));
      rep.field("b2_type", partition_of_cycle_type(cycle_type(b2)).to_string());
    }
  }
  rep.field("total", report_value(res.total));
  return 0;
}

int cmd_three_inv(const Opts& o, Report& rep) {
  if (o.inputs.size() != 2) throw Error(Reason::BadParameter, "three-inv takes <group-file> <cayset-file>");
  auto g = load_group(o.inputs[0]);
  auto s = load_cayset(o.inputs[1]);
  const ModeSpec mode = mode_or(o, "exact");
  auto res = three_involution_census(g, s, mode);
  rep.field("group_order", g.order());
  rep.field("mode", mode_name(mode));
  rep.field("hypothesis", res.hypothesis_holds ? "holds" : "violated");
  if (!res.violations.empty()) {
    Table v{"violations", {"t", "x"}, {}};
    for (auto [t, x] : res.violations) v.rows.push_back({g.name(t), g.name(x)});
    rep.table(v);
  }
  Table t{"classes", {"representative", "class_size", "order", "generic_l", "o_term_match"}, {}};
  for (const auto& r : res.rows)
    t.rows.push_back({g.name(r.representative), std::to_string(r.class_size), std::to_string(r.order),
                      std::to_string(r.generic_l), yes_no(r.o_term_matches)});
  rep.table(t);
  rep.field("O", report_value(res.O));
  rep.field("L", res.L_available ? report_value(res.L) : "unavailable");
  rep.field("N", res.N_available ? report_value(res.N) : "unavailable");
  if (!res.L_available) rep.field("exponent_issue", "NonIntegralExponent: " + res.exponent_issue);
  rep.field("generic_O", report_value(res.generic_O));
  rep.field("O_matches_generic", yes_no(res.o_matches_generic));
  return 0;
}

int cmd_elem2(const Opts& o, Report& rep) {
  if (o.inputs.size() != 2) throw Error(Reason::BadParameter, "elem2 takes <n> <cayset-file>");
  const std::uint32_t n = parse_n(o.inputs[0]);
  auto s = load_cayset(o.inputs[1]);
  if (n < 2 || n > 24) throw Error(Reason::BadParameter, "n must lie in [2, 24]");
  // S must be distinct nonzero vectors of (Z_2)^n spanning the space
  std::vector<std::uint32_t> basis;
  std::vector<Element> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Reason::BadParameter, "Cayley set has repeated elements");
  for (auto x : s) {
    if (x >= (1u << n)) throw Error(Reason::OutOfRange, "element " + std::to_string(x) + " out of range");
    if (x == 0) throw Error(Reason::ContainsIdentity, "Cayley set contains the identity");
    std::uint32_t v = x;
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  if (s.size() < 2) throw Error(Reason::TooSmall, "Cayley set needs at least 2 elements");
  if (basis.size() != n) throw Error(Reason::NotGenerating, "Cayley set does not generate (Z_2)^" + std::to_string(n));
  const Surface surface = parse_surface(o.surface);
  const ModeSpec mode = mode_or(o, "exact");
  auto res = elementary_abelian_census(n, s.size(), surface, mode);
  rep.field("n", n);
  rep.field("k", s.size());
  rep.field("surface", surface_name(surface));
  rep.field("mode", mode_name(mode));
  rep.field("label", res.grr_range ? "GRR range" : "formula value only");
  rep.field("total", report_value(res.total));
  if ((std::size_t{1} << n) <= kDefaultGroupOrderCap) {
    auto inst = make_cayley_instance(named_group(GroupFamily::elementary_abelian_2, n), s);
    auto gen = grr_census(inst, surface, mode);
    rep.field("generic", report_value(gen.total));
    MonomialSum diff = res.sum;
    diff.add(gen.sum, -1);
    rep.field("matches_generic", yes_no(diff.exact().get_num() == 0));
  }
  return 0;
}

int cmd_fixtures(const std::string& action, const Opts& o, Report& rep) {
  if (action == "list") {
    Table t{"fixtures", {"name", "kind", "description"}, {}};
    for (const auto& f : fixture_list())
      t.rows.push_back({f.name, f.kind == FixtureKind::cayley ? "cayley" : "map", f.description});
    rep.table(t);
    return 0;
  }
  if (action == "dump") {
    std::vector<std::string> names = o.inputs;
    if (names.empty())
      for (const auto& f : fixture_list()) names.push_back(f.name);
    std::vector<std::string> written;
    for (const auto& nm : names)
      for (auto& p : dump_fixture(nm, o.dir)) written.push_back(p);
    for (const auto& p : written) rep.field("wrote", p);
    return 0;
  }
  std::vector<std::string> names = o.inputs;
  if (names.empty())
    for (const auto& f : fixture_list()) names.push_back(f.name);
  bool all = true;
  for (const auto& nm : names) {
    auto c = run_fixture_check(nm, o.workers);
    all = all && c.passed;
    rep.note("[" + c.name + "]");
    for (const auto& l : c.lines) rep.note("  " + l);
    rep.field(c.name, c.passed ? "pass" : "fail");
  }
  rep.field("all", all ? "pass" : "fail");
  if (!all) throw Error(Reason::InternalInconsistency, "fixture self-check failed");
  return 0;
}

}  // namespace

CliOutput run_cli(const std::vector<std::string>& args) {
  CliOutput result;
  CLI::App app{"Census of embeddings of Cayley graphs up to map automorphism", "mapcensus"};
  app.require_subcommand(1);
  Opts o;
  std::string selected;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  };
  auto inputs = [&](CLI::App* sub, const std::string& desc) { sub->add_option("inputs", o.inputs, desc); };
  auto surface_opt = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "O, N or L")->check(CLI::IsMember({"O", "N", "L"}));
  };
  auto mode_opt = [&](CLI::App* sub) { sub->add_option("--mode", o.mode, "exact, log2 or modp:<p>"); };
  auto oracle_opts = [&](CLI::App* sub) {
    sub->add_option("--semantics", o.semantics, "raw, sigma or dart")->check(CLI::IsMember({"raw", "sigma", "dart"}));
    sub->add_option("--cap", o.cap, "Ground-set cap");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto acting_opt = [&](CLI::App* sub) {
    sub->add_option("--acting", o.acting, "rg, rgxh or full")->check(CLI::IsMember({"rg", "rgxh", "full"}));
    sub->add_option("--h-file", o.h_file, "Automorphism list for H");
  };

  auto* group = app.add_subcommand("group", "Group tables");
  group->require_subcommand(1);
  auto* group_info = group->add_subcommand("info", "Validate a group file and list its elements");
  inputs(group_info, "<group-file>");
  common(group_info);
  auto* group_make = group->add_subcommand("make", "Print a named group as a group file");
  inputs(group_make, "<family> <param>");

  auto* cayley = app.add_subcommand("cayley", "Cayley graphs");
  cayley->require_subcommand(1);
  auto* cayley_check = cayley->add_subcommand("check", "Validate S and decompose Aut");
  inputs(cayley_check, "<group-file> <cayset-file> | fixtures:NAME");
  common(cayley_check);

  auto* map = app.add_subcommand("map", "Maps");
  map->require_subcommand(1);
  auto* map_check = map->add_subcommand("check", "Validate a map file and print its inventory");
  inputs(map_check, "<map-file> | fixtures:FIG1");
  map_check->add_option("--on", o.on, "fixtures:NAME carrying a two-line map file");
  map_check->add_option("--group", o.group_file, "Group file for a two-line map file");
  map_check->add_option("--cayset", o.cayset_file, "Cayley set file for a two-line map file");
  common(map_check);
  auto* map_stable = map->add_subcommand("stable", "Build a map fixed by one acting element");
  inputs(map_stable, "<group-file> <cayset-file> | fixtures:NAME");
  map_stable->add_option("--element", o.element, "Index into the acting group");
  map_stable->add_option("--acting", o.acting, "rg, rgxh or full")->check(CLI::IsMember({"rg", "rgxh", "full"}));
  map_stable->add_flag("--orientable", o.orientable_variant, "Require an orientable map");
  common(map_stable);

  auto* census_cmd = app.add_subcommand("census", "Census by formula or by oracle");
  census_cmd->require_subcommand(1);
  auto* cf = census_cmd->add_subcommand("formula", "Class-sum formula");
  inputs(cf, "<group-file> <cayset-file> | fixtures:NAME");
  surface_opt(cf);
  mode_opt(cf);
  acting_opt(cf);
  common(cf);
  auto* co = census_cmd->add_subcommand("oracle", "Exhaustive enumeration and Burnside count");
  inputs(co, "<group-file> <cayset-file> | fixtures:NAME");
  surface_opt(co);
  oracle_opts(co);
  acting_opt(co);
  co->add_option("--dump", o.dump_dir, "Write orbit representatives as map files");
  common(co);

  auto* verify = app.add_subcommand("verify", "Formula and oracle side by side");
  inputs(verify, "<group-file> <cayset-file> | fixtures:NAME");
  surface_opt(verify);
  oracle_opts(verify);
  acting_opt(verify);
  common(verify);

  auto* sym = app.add_subcommand("sym-grr", "Symmetric-group partition sums");
  inputs(sym, "<n>");
  sym->add_option("--surface", o.surface, "O, N or L")->check(CLI::IsMember({"O", "N", "L"}));
  mode_opt(sym);
  common(sym);

  auto* three = app.add_subcommand("three-inv", "Groups generated by three involutions");
  inputs(three, "<group-file> <cayset-file>");
  mode_opt(three);
  common(three);

  auto* elem = app.add_subcommand("elem2", "Elementary abelian 2-groups");
  inputs(elem, "<n> <cayset-file>");
  surface_opt(elem);
  mode_opt(elem);
  common(elem);

  auto* fixtures = app.add_subcommand("fixtures", "Built-in fixtures");
  fixtures->require_subcommand(1);
  auto* fx_list = fixtures->add_subcommand("list", "List fixtures");
  common(fx_list);
  auto* fx_run = fixtures->add_subcommand("run", "Run fixture self-checks");
  inputs(fx_run, "[NAME...]");
  fx_run->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  common(fx_run);
  auto* fx_dump = fixtures->add_subcommand("dump", "Write fixture files");
  inputs(fx_dump, "[NAME...]");
  fx_dump->add_option("--dir", o.dir, "Output directory");
  common(fx_dump);

  o.surface = "L";
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    result.out = os.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    result.out = os.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageExitCode;
    result.err = std::string("error: ") + e.what() + "\n" + app.help() + "reason=Usage\n";
    return result;
  }
  if (sym->parsed() && sym->count("--surface") == 0) o.surface = "O";

  Report rep(o.format == "kv");
  std::string raw;
  try {
    int code = 0;
    if (group_info->parsed())
      code = cmd_group_info(o, rep);
    else if (group_make->parsed())
      code = cmd_group_make(o, rep, raw);
    else if (cayley_check->parsed())
      code = cmd_cayley_check(o, rep);
    else if (map_check->parsed())
      code = cmd_map_check(o, rep);
    else if (map_stable->parsed())
      code = cmd_map_stable(o, rep, raw);
    else if (cf->parsed())
      code = cmd_census_formula(o, rep);
    else if (co->parsed())
      code = cmd_census_oracle(o, rep);
    else if (verify->parsed())
      code = cmd_verify(o, rep);
    else if (sym->parsed())
      code = cmd_sym(o, rep);
    else if (three->parsed())
      code = cmd_three_inv(o, rep);
    else if (elem->parsed())
      code = cmd_elem2(o, rep);
    else if (fx_list->parsed())
      code = cmd_fixtures("list", o, rep);
    else if (fx_run->parsed())
      code = cmd_fixtures("run", o, rep);
    else if (fx_dump->parsed())
      code = cmd_fixtures("dump", o, rep);
    result.exit_code = code;
    result.out = rep.str() + raw;
  } catch (const Error& e) {
    result.out = rep.str();
    result.exit_code = exit_code_for(e.reason());
    result.err = std::string("error: ") + e.what() + "\nreason=" + std::string(e.token()) + "\n";
  } catch (const std::exception& e) {
    result.out = rep.str();
    result.exit_code = exit_code_for(Reason::InternalInconsistency);
    result.err = std::string("error: ") + e.what() + "\nreason=InternalInconsistency\n";
  }
  return result;
}

}  // namespace mapcensus
