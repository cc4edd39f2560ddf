#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bruhat/cli.hpp"
#include "bruhat/kgp.hpp"

namespace py = pybind11;
using namespace bruhat;

namespace {

// Words cross the boundary 1-based, matching the text formats.
Word from_py(const std::vector<int>& w) {
  Word out;
  for (int i : w) out.push_back(i - 1);
  return out;
}

std::vector<int> to_py(const Word& w) {
  std::vector<int> out;
  for (int i : w) out.push_back(i + 1);
  return out;
}

ParabolicSubset subset(const std::vector<int>& I) { return ParabolicSubset::of(from_py(I)); }

// pybind11 cannot hold shared_ptr<const T>; wrap it.
struct Datum {
  DatumPtr ptr;
};

py::list violations(const Violations& vs) {
  py::list out;
  for (const auto& v : vs) out.append(v.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_bruhat, m) {
  m.doc() = "Bruhat order on Weyl groups, parabolic quotients and K-orbit graphs";

  py::register_exception<Error>(m, "BruhatError");

  py::class_<Datum>(m, "RootDatum")
      .def_static(
          "of_type",
          [](const std::string& type, bool adjoint, const std::string& twist) {
            std::vector<int> tw;
            if (twist == "flip") tw = flip_twist(cartan_of_type(type));
            return Datum{RootDatum::of_type(type, adjoint ? Isogeny::Adjoint : Isogeny::SimplyConnected, tw)};
          },
          py::arg("type"), py::arg("adjoint") = false, py::arg("twist") = "id")
      .def_property_readonly("rank", [](const Datum& d) { return d.ptr->rank(); })
      .def("is_m_alpha_trivial", [](const Datum& d, int i) { return d.ptr->is_m_alpha_trivial(i - 1); })
      .def("to_text", [](const Datum& d) { return d.ptr->to_text(); });

  py::class_<WeylElt>(m, "WeylElt")
      .def_static("from_word", [](const Datum& d, const std::vector<int>& w) { return WeylElt::from_word(d.ptr, from_py(w)); })
      .def_property_readonly("length", &WeylElt::length)
      .def("reduced_word", [](const WeylElt& w) { return to_py(w.reduced_word()); })
      .def("inverse", &WeylElt::inverse)
      .def("__mul__", &WeylElt::operator*)
      .def("__eq__", &WeylElt::operator==)
      .def("__str__", &WeylElt::to_string)
      .def("__repr__", [](const WeylElt& w) { return "WeylElt(" + w.to_string() + ")"; });

  m.def("enumerate", [](const Datum& d) { return enumerate(d.ptr); });
  m.def("bruhat_leq", &bruhat_leq);
  m.def("bruhat_leq_subword", py::overload_cast<const WeylElt&, const WeylElt&>(&bruhat_leq_subword));
  m.def("twisted_involutions", [](const Datum& d) { return twisted_involutions(d.ptr); });

  py::class_<OrbitGraph>(m, "OrbitGraph")
      .def_property_readonly("size", &OrbitGraph::size)
      .def("length", &OrbitGraph::length)
      .def("poset_leq", &OrbitGraph::poset_leq)
      .def("hasse", &OrbitGraph::hasse)
      .def("hasse_dot", &OrbitGraph::hasse_dot)
      .def("validate", [](const OrbitGraph& g) { return violations(g.validate()); })
      .def("property_z_check", [](const OrbitGraph& g) { return violations(g.property_z_check()); })
      .def("to_text", &OrbitGraph::to_text)
      .def_static("from_text", &OrbitGraph::from_text);
  m.def("from_weyl", [](const Datum& d) { return from_weyl(d.ptr); });
  m.def("from_parabolic", [](const Datum& d, const std::vector<int>& I) { return from_parabolic(d.ptr, subset(I)); });

  py::class_<KgbGraph>(m, "KgbGraph")
      .def_property_readonly("size", &KgbGraph::size)
      .def_property_readonly("rank", &KgbGraph::rank)
      .def("length", &KgbGraph::length)
      .def("root_type", [](const KgbGraph& g, int a, int v) { return std::string(to_code(g.root_type(a - 1, v))); })
      .def("cross_action", [](const KgbGraph& g, int a, int v) { return g.cross_action(a - 1, v); })
      .def("cayley", [](const KgbGraph& g, int a, int v) { return g.cayley(a - 1, v); })
      .def("inverse_cayley", [](const KgbGraph& g, int a, int v) { return g.inverse_cayley(a - 1, v); })
      .def("monoid", [](const KgbGraph& g, int a, int v) { return g.monoid(a - 1, v); })
      .def("validate", [](const KgbGraph& g) { return violations(g.validate()); })
      .def("to_orbit_poset", &to_orbit_poset);
  m.def("load_kgb", &load_kgb);
  m.def("save_kgb", &save_kgb);
  m.def("group_case", [](const Datum& d) { return group_case(d.ptr); });
  m.def("fixture", [](const std::string& name) {
    for (auto& [n, g] : cli::builtin_fixtures())
      if (n == name) return g;
    throw Error(ErrorKind::Mismatch, "unknown fixture " + name);
  });
  m.def("ascent_consistency_check", [](const KgbGraph& g) { return violations(ascent_consistency_check(g)); });
  m.def("minimal_w_uniqueness_check", [](const KgbGraph& g) { return violations(minimal_w_uniqueness_check(g)); });

  m.def("i_equivalence_classes", [](const KgbGraph& g, const std::vector<int>& I) {
    py::list out;
    for (const auto& c : i_equivalence_classes(g, subset(I))) out.append(py::make_tuple(c.top, c.members));
    return out;
  });
  m.def("p_maximal_set", [](const KgbGraph& g, const std::vector<int>& I) { return p_maximal_set(g, subset(I)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
