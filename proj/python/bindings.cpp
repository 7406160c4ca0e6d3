#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdg/catalog.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"
#include "zdg/genus.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideal.hpp"
#include "zdg/ring.hpp"
#include "zdg/ring_json.hpp"

namespace py = pybind11;
using namespace zdg;

namespace {

RingTable ring_by_name(const std::string& name) {
  RingTable t = build_ring(spec_from_name(name));
  if (auto e = catalog_lookup(name)) return t.renamed(e->name);
  return t;
}

py::dict bounds_dict(const GenusBounds& b, const SimpleGraph& g) {
  py::dict d;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["exact"] = b.exact();
  d["provenance"] = b.lower_provenance;
  d["nodes"] = b.nodes;
  d["budget_exhausted"] = b.budget_exhausted;
  d["certificate"] = b.certificate ? py::object(py::str(certificate_to_json(*b.certificate, g))) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite rings, ideal-based zero-divisor graphs and their genus";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<RingTable>(m, "Ring")
      .def_property_readonly("name", &RingTable::name)
      .def_property_readonly("order", &RingTable::order)
      .def_property_readonly("labels", &RingTable::labels)
      .def("add", &RingTable::add)
      .def("mul", &RingTable::mul)
      .def("units", [](const RingTable& t) { return units(t); })
      .def("zero_divisors", [](const RingTable& t) { return zero_divisors(t); })
      .def("is_local", [](const RingTable& t) { return is_local(t).local; })
      .def("ideals", [](const RingTable& t) { return enumerate_ideals(t); })
      .def("element", [](const RingTable& t, const std::string& e) { return parse_element(t, e); })
      .def("__repr__", [](const RingTable& t) { return "<Ring " + t.name() + " of order " + std::to_string(t.order()) + ">"; });

  py::class_<IdealSet>(m, "Ideal")
      .def_property_readonly("size", &IdealSet::size)
      .def_property_readonly("elements", &IdealSet::elements)
      .def_property_readonly("ring", &IdealSet::ring)
      .def("is_prime", [](const IdealSet& i) { return is_prime(i); })
      .def("is_radical", [](const IdealSet& i) { return is_radical(i); })
      .def("quotient", [](const IdealSet& i) { return quotient(i).table; })
      .def("__repr__", [](const IdealSet& i) { return "<Ideal " + describe_ideal(i) + " of " + i.ring().name() + ">"; });

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             SimpleGraph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &SimpleGraph::order)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def("edges", [](const SimpleGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : g.edges()) out.emplace_back(u, v);
        return out;
      })
      .def("to_json", [](const SimpleGraph& g) { return export_json(g); })
      .def("to_dot", [](const SimpleGraph& g) { return export_dot(g); })
      .def("__repr__", [](const SimpleGraph& g) { return "<Graph " + describe_graph(g) + ">"; });

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });
  m.def("ring", &ring_by_name, py::arg("name"), "Ring from a catalog name, Z_n, F_q or a product of these");
  m.def("ring_from_json", [](const std::string& text) { return build_ring(spec_from_json(text)); });
  m.def("ideal", [](const RingTable& t, const std::vector<std::string>& gens) {
    std::vector<RingElem> es;
    for (const auto& s : gens) {
      const auto e = t.find_label(s);
      es.push_back(e ? *e : parse_element(t, s));
    }
    return generated_ideal(t, es);
  });
  m.def("synthesized", [](const RingTable& target, int k) {
    Instance inst = synthesized_instance(target, k);
    return py::make_tuple(inst.ring, inst.ideal);
  }, py::arg("target"), py::arg("k"), "T x Z_k with the ideal 0 x Z_k");

  m.def("zero_divisor_graph", [](const RingTable& t) { return zero_divisor_graph(t).graph; });
  m.def("ideal_graph", [](const IdealSet& i) { return ideal_zero_divisor_graph(i).graph; });
  m.def("graph_facts", [](const SimpleGraph& g) {
    const GraphFacts f = graph_facts(g);
    py::dict d;
    d["vertices"] = f.order;
    d["edges"] = f.edges;
    d["diameter"] = f.diameter;
    d["girth"] = f.girth;
    d["clique"] = f.clique;
    d["shape"] = f.shape;
    return d;
  });
  m.def("is_planar", &is_planar);
  m.def("genus", [](const SimpleGraph& g, long budget) {
    GenusOptions o;
    o.budget = budget;
    return bounds_dict(exact_genus(g, o), g);
  }, py::arg("graph"), py::arg("budget") = 100'000'000L);
  m.def("genus_complete", &genus_complete);
  m.def("genus_biclique", &genus_biclique);

  m.def("theorems", [] {
    std::vector<std::string> out;
    for (auto id : all_theorems()) out.push_back(theorem_name(id));
    return out;
  });
  m.def("verify", [](const std::string& name, long budget) {
    const auto id = theorem_from_name(name);
    if (!id) throw InvalidSpec("unknown theorem '" + name + "'");
    VerifyOptions o;
    o.budget = budget;
    std::vector<std::string> out;
    for (const auto& r : verify(*id, o)) out.push_back(report_to_json(r));
    return out;
  }, py::arg("theorem"), py::arg("budget") = 100'000'000L, "Reports as JSON strings");
}
