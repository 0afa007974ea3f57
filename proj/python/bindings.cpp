#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mapcensus/automorphism.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/cli.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/fixtures.hpp"
#include "mapcensus/oracle.hpp"
#include "mapcensus/special.hpp"

namespace py = pybind11;
using namespace mapcensus;

namespace {

// exact -> int, log2 -> float (log2 of the value), modp -> int residue.
py::object to_py(const CountReport& r) {
  switch (r.mode) {
    case CountMode::exact:
      return py::module_::import("builtins").attr("int")(py::str(r.exact_value.get_str()));
    case CountMode::log2:
      return py::float_(static_cast<double>(r.log2_value));
    case CountMode::mod_p:
      return py::int_(r.residue);
  }
  return py::none();
}

GroupFamily parse_family(const std::string& s) {
  if (s == "cyclic") return GroupFamily::cyclic;
  if (s == "dihedral") return GroupFamily::dihedral;
  if (s == "symmetric") return GroupFamily::symmetric;
  if (s == "elem2") return GroupFamily::elementary_abelian_2;
  throw Error(Reason::BadParameter, "unknown group family '" + s + "'");
}

py::dict census_dict(const CensusResult& r) {
  py::dict d;
  d["total"] = to_py(r.total);
  d["acting_order"] = r.acting_order;
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict x;
    x["class_size"] = row.stats.class_size;
    x["order"] = row.stats.order;
    x["l"] = row.stats.l_value;
    x["branch"] = branch_name(row.stats.branch);
    x["alpha"] = row.stats.alpha_exponent;
    x["phi"] = to_py(row.phi);
    rows.append(x);
  }
  d["rows"] = rows;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Census of embeddings of Cayley graphs";

  static py::exception<Error> exc(m, "MapcensusError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(exc)(py::str(e.what()));
      inst.attr("reason") = py::str(std::string(e.token()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<CayleyInstance>(m, "Instance")
      .def_static("fixture", &fixture_instance, py::arg("name"))
      .def_static(
          "from_files",
          [](const std::string& group, const std::string& cayset) {
            return make_cayley_instance(load_group(group), load_cayset(cayset));
          },
          py::arg("group_file"), py::arg("cayset_file"))
      .def_static(
          "named",
          [](const std::string& family, std::uint32_t param, const std::vector<Element>& s) {
            return make_cayley_instance(named_group(parse_family(family), param), s);
          },
          py::arg("family"), py::arg("param"), py::arg("cayley_set"))
      .def_property_readonly("group_order", [](const CayleyInstance& i) { return i.group->order(); })
      .def_property_readonly("cayley_set", [](const CayleyInstance& i) { return i.set.members; })
      .def_property_readonly("vertices", [](const CayleyInstance& i) { return i.graph.vertex_count; })
      .def_property_readonly("edges", [](const CayleyInstance& i) { return i.graph.edge_count(); })
      .def_property_readonly("flag_count", [](const CayleyInstance& i) { return i.flags->flag_count(); })
      .def(
          "automorphism_group_order",
          [](const CayleyInstance& i) { return graph_automorphism_group(i.graph).size(); })
      .def("is_grr", [](const CayleyInstance& i) {
        return decompose(graph_automorphism_group(i.graph), *i.group).is_grr;
      });

  m.def("fixtures", [] {
    std::vector<std::string> names;
    for (const auto& f : fixture_list()) names.push_back(f.name);
    return names;
  });

  m.def(
      "fixture_info",
      [](const std::string& name) {
        const auto& f = fixture_info(name);
        py::dict d;
        d["name"] = f.name;
        d["kind"] = f.kind == FixtureKind::cayley ? "cayley" : "map";
        d["description"] = f.description;
        d["vertices"] = f.vertices;
        d["edges"] = f.edges;
        if (f.kind == FixtureKind::cayley) {
          d["aut_order"] = f.aut_order;
          d["orientable_census"] = f.orientable_census;
        } else {
          d["faces"] = f.faces;
          d["face_lengths"] = f.face_lengths;
          d["euler_characteristic"] = f.euler_characteristic;
          d["orientable"] = f.orientable;
        }
        return d;
      },
      py::arg("name"));

  m.def(
      "check_fixture",
      [](const std::string& name, unsigned workers) {
        auto c = run_fixture_check(name, workers);
        return py::make_tuple(c.passed, c.lines);
      },
      py::arg("name"), py::arg("workers") = 1);

  m.def(
      "census",
      [](const CayleyInstance& inst, const std::string& surface, const std::string& mode) {
        return census_dict(census(inst, {}, parse_surface(surface), parse_mode(mode)));
      },
      py::arg("instance"), py::arg("surface") = "O", py::arg("mode") = "exact",
      "Formula census over R(G); total is an int (exact, modp residue) or float (log2).");

  m.def(
      "oracle",
      [](const CayleyInstance& inst, const std::string& surface, const std::string& semantics,
         const std::string& acting, unsigned workers) {
        auto sel = select_acting_group(inst, parse_acting(acting));
        auto gs = enumerate_embeddings(inst.flags, parse_semantics(semantics), parse_surface(surface));
        auto oc = burnside_count(sel.flag_maps, gs, workers);
        py::dict d;
        d["count"] = oc.burnside_count;
        d["union_find_count"] = oc.union_find_count;
        d["acting_order"] = oc.acting_order;
        d["ground_set_size"] = gs.size();
        d["fixed_counts"] = oc.fixed_counts;
        py::list orbits;
        for (const auto& o : oc.orbits) {
          py::dict x;
          x["size"] = o.size;
          x["euler_characteristic"] = o.euler_characteristic;
          x["orientable"] = o.orientable;
          x["genus"] = o.genus;
          orbits.append(x);
        }
        d["orbits"] = orbits;
        return d;
      },
      py::arg("instance"), py::arg("surface") = "O", py::arg("semantics") = "sigma", py::arg("acting") = "rg",
      py::arg("workers") = 1);

  m.def(
      "partitions",
      [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& p : partitions(n)) out.push_back(p.parts());
        return out;
      },
      py::arg("n"));

  m.def(
      "sym_orientable_census",
      [](std::uint32_t n, const std::string& mode) { return to_py(sym_orientable_census(n, parse_mode(mode)).total); },
      py::arg("n"), py::arg("mode") = "exact");

  m.def(
      "elementary_abelian_census",
      [](std::uint32_t n, std::size_t k, const std::string& surface, const std::string& mode) {
        return to_py(elementary_abelian_census(n, k, parse_surface(surface), parse_mode(mode)).total);
      },
      py::arg("n"), py::arg("k"), py::arg("surface") = "L", py::arg("mode") = "exact");

  m.def(
      "three_involution_census",
      [](const CayleyInstance& inst, const std::string& mode) {
        auto r = three_involution_census(*inst.group, inst.set.members, parse_mode(mode));
        py::dict d;
        d["O"] = to_py(r.O);
        d["L"] = r.L_available ? to_py(r.L) : py::none();
        d["N"] = r.N_available ? to_py(r.N) : py::none();
        d["generic_O"] = to_py(r.generic_O);
        d["o_matches_generic"] = r.o_matches_generic;
        d["hypothesis_holds"] = r.hypothesis_holds;
        d["violations"] = r.violations;
        return d;
      },
      py::arg("instance"), py::arg("mode") = "exact");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        auto r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs the command-line interface in process; returns (exit_code, stdout, stderr).");
}
