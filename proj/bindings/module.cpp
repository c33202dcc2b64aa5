#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avalanche/avalanche.hpp"
#include "avalanche/families.hpp"
#include "avalanche/graph.hpp"
#include "avalanche/parking.hpp"
#include "avalanche/polynomial.hpp"
#include "avalanche/sandpile.hpp"
#include "avalanche/tree_reconstruct.hpp"

namespace py = pybind11;
using namespace avalanche;

namespace pybind11::detail {

// mpz_class <-> python int, through decimal strings (exact at any size)
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) return false;
        const char* text = PyUnicode_AsUTF8(s);
        bool ok = text && mpz_set_str(value.get_mpz_t(), text, 10) == 0;
        Py_DECREF(s);
        return ok;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

Graph graph_from_json_str(const std::string& text) {
    return Graph::from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(pyavalanche, m) {
    m.doc() = "avalanche polynomials of the abelian sandpile model";

    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
    py::register_exception<InvalidTreePolynomial>(m, "InvalidTreePolynomial", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static("path", &Graph::path, py::arg("n_vertices"))
        .def_static("cycle", &Graph::cycle, py::arg("n_vertices"))
        .def_static("complete", &Graph::complete, py::arg("n_vertices"))
        .def_static("wheel", &Graph::wheel, py::arg("n_rim"))
        .def_static("fan", &Graph::fan, py::arg("n_path"))
        .def_static("grid", &Graph::grid, py::arg("rows"), py::arg("cols"))
        .def_static("tree_from_parents", &Graph::tree_from_parents, py::arg("parents"))
        .def_static("from_json", &graph_from_json_str, py::arg("text"))
        .def_property_readonly("n_vertices", &Graph::n_vertices)
        .def_property_readonly("sink", &Graph::sink)
        .def_property_readonly("n_nonsink", &Graph::n_nonsink)
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def("weight", &Graph::weight, py::arg("u"), py::arg("v"))
        .def("label", &Graph::label, py::arg("vertex"))
        .def("variable_names", &Graph::variable_names)
        .def("spanning_tree_count", &Graph::spanning_tree_count)
        .def("invariant_factors",
             [](const Graph& g) { return g.reduced_laplacian().invariant_factors(); })
        .def("reduced_laplacian",
             [](const Graph& g) {
                 IntMatrix m = g.reduced_laplacian();
                 std::vector<std::vector<mpz_class>> rows(m.rows());
                 for (int i = 0; i < m.rows(); ++i)
                     for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
                 return rows;
             })
        .def("to_json", [](const Graph& g) { return g.to_json().dump(); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n_vertices()) +
                   " sink=" + std::to_string(g.sink()) + ">";
        });

    py::class_<MultiPoly>(m, "MultiPoly")
        .def_property_readonly("n_vars", &MultiPoly::n_vars)
        .def("is_zero", &MultiPoly::is_zero)
        .def("term_count", &MultiPoly::term_count)
        .def("total_degree", &MultiPoly::total_degree)
        .def("evaluate_ones", &MultiPoly::evaluate_ones)
        .def("terms",
             [](const MultiPoly& p) {
                 std::map<std::vector<int>, mpz_class> out;
                 for (const auto& [e, c] : p.terms()) out[e] = c;
                 return out;
             })
        .def("to_json", [](const MultiPoly& p) { return p.to_json().dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        return MultiPoly::from_json(nlohmann::json::parse(text));
                    })
        .def("__add__", &MultiPoly::operator+)
        .def("__mul__", &MultiPoly::operator*)
        .def("__eq__", &MultiPoly::operator==)
        .def("__str__", [](const MultiPoly& p) { return p.to_string(); })
        .def("__repr__", [](const MultiPoly& p) { return "<MultiPoly " + p.to_string() + ">"; });

    py::class_<StabilizationResult>(m, "StabilizationResult")
        .def_readonly("stable", &StabilizationResult::stable)
        .def_readonly("topplings", &StabilizationResult::topplings)
        .def_readonly("avalanche_size", &StabilizationResult::avalanche_size)
        .def_readonly("burst", &StabilizationResult::burst);

    m.def("stabilize", &stabilize, py::arg("graph"), py::arg("grains"));
    m.def("stable_add", &stable_add, py::arg("graph"), py::arg("a"), py::arg("b"));
    m.def("is_recurrent", &is_recurrent, py::arg("graph"), py::arg("grains"));
    m.def("max_sandpile", &max_sandpile, py::arg("graph"));
    m.def("recurrents", &list_recurrents, py::arg("graph"), py::arg("limit") = kDefaultStateLimit);
    m.def("count_recurrents", &count_recurrents, py::arg("graph"),
          py::arg("limit") = kDefaultStateLimit);

    m.def("avalanche_monomial", &avalanche_monomial, py::arg("graph"), py::arg("recurrent"),
          py::arg("vertex"));
    m.def(
        "avalanche_polynomial",
        [](const Graph& g, std::uint64_t limit, int threads) {
            PolyOptions opts;
            opts.limit = limit;
            opts.threads = threads;
            return avalanche_polynomial(g, opts);
        },
        py::arg("graph"), py::arg("limit") = kDefaultStateLimit, py::arg("threads") = 1);
    m.def("size_distribution", &size_distribution, py::arg("graph"),
          py::arg("limit") = kDefaultStateLimit);
    m.def(
        "burst_distribution",
        [](const Graph& g, std::uint64_t limit) {
            PolyOptions opts;
            opts.limit = limit;
            return burst_distribution(g, opts).coeffs();
        },
        py::arg("graph"), py::arg("limit") = kDefaultStateLimit);
    m.def("univariate", [](const MultiPoly& p) { return univariate(p).coeffs(); }, py::arg("poly"));
    m.def(
        "burst_specialize",
        [](const MultiPoly& p, const Graph& g) { return burst_specialize(p, g).coeffs(); },
        py::arg("poly"), py::arg("graph"));
    m.def("elementary_symmetric", &elementary_symmetric, py::arg("n"), py::arg("m"));
    m.def("cyclic_poly", &cyclic_poly, py::arg("n"), py::arg("m"));
    m.def("support_components", &support_components, py::arg("poly"));
    m.def("grid_experiment", &grid_experiment, py::arg("rows"), py::arg("cols"), py::arg("drops"),
          py::arg("seed"));

    m.def("is_parking", &is_parking, py::arg("values"));
    m.def("recurrent_to_parking", &recurrent_to_parking, py::arg("grains"));
    m.def("parking_to_recurrent", &parking_to_recurrent, py::arg("values"));
    m.def("concat_parking", &concat_parking, py::arg("p"), py::arg("q"));
    m.def(
        "phi",
        [](const Graph& g, const Grains& c, int vertex) {
            PhiImage img = phi(g, c, vertex);
            return py::make_tuple(img.vertex, img.toppled_others, img.c1, img.c2);
        },
        py::arg("graph"), py::arg("grains"), py::arg("vertex"));
    m.def(
        "phi_inverse",
        [](int vertex, const std::vector<int>& toppled_others, const Grains& c1, const Grains& c2) {
            return phi_inverse(PhiImage{vertex, toppled_others, c1, c2});
        },
        py::arg("vertex"), py::arg("toppled_others"), py::arg("c1"), py::arg("c2"));

    m.def("tree_poly", [](const std::vector<int>& parents) { return tree_poly(RootedTree{parents}); },
          py::arg("parents"));
    m.def("cycle_poly", &cycle_poly, py::arg("n_vertices"));
    m.def("complete_poly", &complete_poly, py::arg("n_vertices"));
    m.def("wheel_poly", &wheel_poly, py::arg("n_rim"));
    m.def("cycle_monomial_max", &cycle_monomial_max, py::arg("n"), py::arg("i"));
    m.def("cycle_recurrent", &cycle_recurrent, py::arg("n"), py::arg("p"));
    m.def("fib", &fib, py::arg("k"));
    m.def("lucas", &lucas, py::arg("k"));
    m.def(
        "reconstruct_tree",
        [](const MultiPoly& p) { return reconstruct_tree(p).parents; }, py::arg("poly"));
    m.def("validate_tree_poly", &validate_tree_poly, py::arg("poly"));
    m.def(
        "reroot_tree",
        [](const std::vector<int>& parents, int new_root) {
            return reroot_tree(RootedTree{parents}, new_root).parents;
        },
        py::arg("parents"), py::arg("new_root"));
    m.def("parse_grains", &parse_grains, py::arg("text"));
}
