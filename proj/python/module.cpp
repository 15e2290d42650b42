#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stronggenus/bounds.hpp"
#include "stronggenus/embedding.hpp"
#include "stronggenus/families.hpp"
#include "stronggenus/graph.hpp"
#include "stronggenus/homology.hpp"
#include "stronggenus/planarity.hpp"
#include "stronggenus/search.hpp"
#include "stronggenus/verify.hpp"

namespace py = pybind11;
using namespace stronggenus;

PYBIND11_MODULE(_stronggenus, m) {
    m.doc() = "graph embeddings on surfaces: face tracing, genus search, strong embeddings";

    py::register_exception<Error>(m, "StronggenusError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edge_list)
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SurfaceKind>(m, "SurfaceKind")
        .def_readonly("orientable", &SurfaceKind::orientable)
        .def_readonly("genus", &SurfaceKind::genus)
        .def_property_readonly("euler_characteristic", &SurfaceKind::euler_characteristic)
        .def("__repr__", [](const SurfaceKind& s) {
            return std::string(s.orientable ? "orientable" : "non-orientable") + " genus " +
                   std::to_string(s.genus);
        });

    py::class_<FaceWalk>(m, "FaceWalk")
        .def_readonly("darts", &FaceWalk::darts)
        .def_readonly("vertices", &FaceWalk::vertices)
        .def_property_readonly("length", &FaceWalk::length)
        .def("is_cycle", &FaceWalk::is_cycle);

    py::class_<EulerianSubgraph>(m, "EulerianSubgraph")
        .def_readonly("edges", &EulerianSubgraph::edges)
        .def_readonly("cycles", &EulerianSubgraph::cycles);

    py::class_<Embedding>(m, "Embedding")
        .def(py::init<Graph, std::vector<std::vector<int>>, std::vector<int8_t>>(),
             py::arg("graph"), py::arg("rotations"), py::arg("signature") = std::vector<int8_t>{})
        .def_property_readonly("graph", &Embedding::graph)
        .def_property_readonly("rotations", &Embedding::rotations)
        .def("signature", &Embedding::signature)
        .def_property_readonly("all_positive", &Embedding::all_positive);

    py::class_<NestedCertificate>(m, "NestedCertificate")
        .def_readonly("x", &NestedCertificate::x)
        .def_readonly("y", &NestedCertificate::y)
        .def_readonly("cycles", &NestedCertificate::cycles)
        .def_property_readonly("ring_count", &NestedCertificate::ring_count);

    py::class_<NearPlanarInstance>(m, "NearPlanarInstance")
        .def_readonly("graph", &NearPlanarInstance::graph)
        .def_readonly("x", &NearPlanarInstance::x)
        .def_readonly("y", &NearPlanarInstance::y)
        .def_readonly("planarizing_edge", &NearPlanarInstance::planarizing_edge)
        .def_readonly("reference_planar", &NearPlanarInstance::reference_planar)
        .def_readonly("reference_rings", &NearPlanarInstance::reference_rings)
        .def_readonly("reference_toroidal", &NearPlanarInstance::reference_toroidal)
        .def_property_readonly("rings", &NearPlanarInstance::rings);

    py::class_<SearchResult>(m, "SearchResult")
        .def_property_readonly("value",
                               [](const SearchResult& r) { return r.value; })
        .def_readonly("nodes", &SearchResult::nodes)
        .def_readonly("exhaustive", &SearchResult::exhaustive)
        .def_readonly("cap_used", &SearchResult::cap_used)
        .def_property_readonly("witness", [](const SearchResult& r) { return r.witness; });

    // graph core
    m.def("parse_graph", &parse_graph);
    m.def("write_graph", &write_graph);
    m.def("is_connected", &is_connected);
    m.def("is_cubic", &is_cubic);
    m.def("connectivity", &connectivity);
    m.def("girth", &girth);
    m.def("suppress_degree_two", &suppress_degree_two);
    m.def("is_subdivision_of_3connected", &is_subdivision_of_3connected);

    // embeddings
    m.def("trace_faces", &trace_faces);
    m.def("euler_characteristic", &euler_characteristic);
    m.def("surface_of", &surface_of);
    m.def("is_strong", &is_strong);
    m.def("is_polyhedral", &is_polyhedral);
    m.def("facial_distance", &facial_distance);
    m.def("face_bfs_layers", &face_bfs_layers);
    m.def("parse_embedding", &parse_embedding);
    m.def("write_embedding", &write_embedding);

    // homology
    m.def("is_surface_separating",
          [](const Embedding& e, const std::vector<std::vector<int>>& cycles) {
              return is_surface_separating(e, CycleSet(e.graph(), cycles));
          });
    m.def("homologically_independent",
          [](const Embedding& e, const std::vector<std::vector<int>>& cycles) {
              return homologically_independent(e, CycleSet(e.graph(), cycles));
          });

    // planarity
    m.def("planar_embedding", &planar_embedding);
    m.def("cycle_separates", &cycle_separates);
    m.def("nested_cycle_certificate", &nested_cycle_certificate);
    m.def("verify_certificate",
          [](const Graph& g, const NestedCertificate& cert, const Embedding& planar) {
              return verify_certificate(g, cert, planar);
          });
    m.def("parse_certificate", &parse_certificate);
    m.def("write_certificate", &write_certificate);

    // families
    m.def("hex_cylinder", &hex_cylinder);
    m.def("k33", &k33);

    // search
    m.def(
        "min_genus",
        [](const Graph& g, int cap, int threads, double timeout) {
            SearchOptions o;
            if (cap >= 0) o.cap = cap;
            o.threads = threads;
            o.timeout_sec = timeout;
            return min_genus(g, o);
        },
        py::arg("graph"), py::arg("cap") = -1, py::arg("threads") = 1,
        py::arg("timeout") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def(
        "strong_genus",
        [](const Graph& g, int cap, int threads, double timeout) {
            SearchOptions o;
            if (cap >= 0) o.cap = cap;
            o.threads = threads;
            o.timeout_sec = timeout;
            return strong_genus(g, o);
        },
        py::arg("graph"), py::arg("cap") = -1, py::arg("threads") = 1,
        py::arg("timeout") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def("rotation_count", &rotation_count);
    m.def("all_rotations", [](const Graph& g) {
        if (rotation_count(g) > 1000000)
            fail(Errc::InvalidParameter, "rotation space too large to materialize");
        std::vector<Embedding> out;
        enumerate_rotations(g, [&](const Embedding& e) {
            out.push_back(e);
            return true;
        });
        return out;
    });

    // bounds
    m.def("strong_genus_lower_bound", &strong_genus_lower_bound);
    m.def("moore_bound_cubic", &moore_bound_cubic);
    m.def("euler_girth_bound", &euler_girth_bound);
    m.def("max_genus_ub", &max_genus_ub);

    // verification pipeline; returns the JSON report as a string
    m.def(
        "verify_hex",
        [](int rings, int cap, int threads, double timeout) {
            NearPlanarInstance inst = hex_cylinder(rings);
            SearchOptions o;
            o.threads = threads;
            o.timeout_sec = timeout;
            VerificationReport rep =
                verify_instance(inst, "hex-" + std::to_string(rings), cap, o);
            return report_to_json(rep);
        },
        py::arg("rings"), py::arg("cap") = -1, py::arg("threads") = 1,
        py::arg("timeout") = 0.0, py::call_guard<py::gil_scoped_release>());
}
