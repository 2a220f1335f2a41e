// Python bindings for the srings library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "srings/catalogue.hpp"
#include "srings/comiso.hpp"
#include "srings/construct.hpp"
#include "srings/error.hpp"
#include "srings/wl.hpp"

namespace py = pybind11;
using namespace srings;

namespace {

ElemSet parse_set(const AbelianGroup& g, const std::vector<std::string>& xs) {
  ElemSet out;
  for (const auto& s : xs) out.push_back(g.parse_element(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::string>> class_literals(const SRing& a) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : a.classes()) {
    std::vector<std::string> row;
    for (Elem x : c) row.push_back(a.group().format(x));
    out.push_back(row);
  }
  return out;
}

py::dict pointmap_dict(const PointMap& f) {
  py::dict m;
  for (Elem x = 0; x < f.source.order(); ++x) m[py::str(f.source.format(x))] = f.target.format(f(x));
  return m;
}

}  // namespace

PYBIND11_MODULE(_srings, m) {
  m.doc() = "Schur rings and Cayley graph isomorphism over small abelian groups";

  py::register_exception<Error>(m, "SringsError");

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init([](const std::string& s) { return AbelianGroup::parse(s); }), py::arg("literal"))
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("factors",
                             [](const AbelianGroup& g) { return std::vector<std::uint32_t>(g.factors().begin(), g.factors().end()); })
      .def("elements",
           [](const AbelianGroup& g) {
             std::vector<std::string> out;
             for (Elem x = 0; x < g.order(); ++x) out.push_back(g.format(x));
             return out;
           })
      .def("isomorphic_to", &AbelianGroup::isomorphic_to)
      .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
      .def("__str__", &AbelianGroup::to_string)
      .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup('" + g.to_string() + "')"; });

  py::class_<SRing>(m, "SRing")
      .def_property_readonly("group", &SRing::group)
      .def_property_readonly("rank", &SRing::rank)
      .def_property_readonly("classes", &class_literals)
      .def("valency_profile", [](const SRing& a) { return valency_profile(a); })
      .def("radical_order", [](const SRing& a) { return sring_radical(a).order(); })
      .def("is_symmetric", [](const SRing& a) { return is_symmetric(a); })
      .def("to_text", [](const SRing& a) { return to_text(a); })
      .def("__eq__", [](const SRing& a, const SRing& b) { return a == b; })
      .def("__str__", [](const SRing& a) { return to_text(a); });

  m.def("parse_sring", [](const std::string& text) { return parse_sring(text); });

  m.def(
      "scheme",
      [](const std::string& group, const std::vector<std::string>& x) {
        auto g = AbelianGroup::parse(group);
        const ElemSet s = parse_set(g, x);
        return cayley_scheme(g, std::span<const ElemSet>(&s, 1)).ring;
      },
      py::arg("group"), py::arg("connection_set"), "Minimal Cayley scheme of Cay(G, X) as an S-ring");

  m.def(
      "closure",
      [](const std::string& group, const std::vector<std::vector<std::string>>& seeds) {
        auto g = AbelianGroup::parse(group);
        std::vector<ElemSet> s;
        for (const auto& x : seeds) s.push_back(parse_set(g, x));
        return closure(g, s);
      },
      py::arg("group"), py::arg("seeds"));

  m.def(
      "enumerate_srings",
      [](const std::string& group, const std::string& method) {
        EnumMethod em = EnumMethod::kAuto;
        if (method == "partition") em = EnumMethod::kPartition;
        else if (method == "good-sets") em = EnumMethod::kGoodSets;
        else if (method != "auto") fail(ErrorKind::kArgument, "unknown method '" + method + "'");
        return enumerate_srings(AbelianGroup::parse(group), em);
      },
      py::arg("group"), py::arg("method") = "auto");

  m.def("table_sring", &table_sring, py::arg("p"), py::arg("i"), py::arg("k"), "cyc(K_i, C_p x C_{p^k})");

  m.def(
      "table_order",
      [](std::uint32_t p, std::uint32_t i, std::uint32_t k) {
        auto gens = table_entry(p, i, k);
        return generated_automorphism_group(table_group(p, k), gens).size();
      },
      py::arg("p"), py::arg("i"), py::arg("k"));

  m.def("classify", [](const SRing& a) {
    auto v = classify(a);
    py::dict d;
    d["statement"] = to_string(v.statement);
    d["table_index"] = v.table_index ? py::cast(*v.table_index) : py::none();
    d["witness_ok"] = check_verdict(a, v).empty();
    return d;
  });

  m.def(
      "graph_iso",
      [](const std::string& g1s, const std::vector<std::string>& x1, const std::string& g2s,
         const std::vector<std::string>& x2) {
        auto g1 = AbelianGroup::parse(g1s);
        auto g2 = AbelianGroup::parse(g2s);
        auto r = graph_iso_pipeline(g1, parse_set(g1, x1), g2, parse_set(g2, x2));
        py::dict d;
        d["isomorphic"] = r.verdict == PipelineVerdict::kIsomorphic;
        d["obstruction"] = r.obstruction;
        d["method"] = r.certificate ? py::object(py::str(to_string(r.certificate->method))) : py::none();
        d["certificate"] = r.certificate ? py::object(pointmap_dict(r.certificate->point_map)) : py::none();
        return d;
      },
      py::arg("group"), py::arg("connection_set"), py::arg("group2"), py::arg("connection_set2"));

  m.def(
      "separability_report",
      [](const SRing& a, bool brute) {
        SeparabilityOptions o;
        o.confirm_with_brute = brute;
        return to_text(check_separability(a, o));
      },
      py::arg("sring"), py::arg("confirm_with_brute") = false);

  m.def("aut_order", [](const SRing& a) { return aut_group(a).order_string(); });
}
