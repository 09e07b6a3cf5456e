// Python bindings. All structured data crosses the boundary as JSON text so
// the Python side stays schema-compatible with the CLI.
#include <pybind11/pybind11.h>

#include "derham/json_io.hpp"

namespace py = pybind11;
using namespace derham;

namespace {

std::string validate_json(const std::string& text) {
    Polyhedron k = polyhedron_from_json(Json::parse(text));
    ValidityReport rep = validate_polyhedron(k);
    Json violations = Json::array();
    for (std::size_t i = 0; i < rep.violating_pairs.size(); ++i)
        violations.push_back({{"a", rep.violating_pairs[i].first},
                              {"b", rep.violating_pairs[i].second},
                              {"message", rep.messages[i]}});
    return Json{{"valid", rep.valid}, {"violations", violations}}.dump();
}

std::string betti_simplicial_json(const std::string& text) {
    return betti_to_json(simplicial_cohomology(polyhedron_from_json(Json::parse(text)))).dump();
}

std::string betti_derham_json(const std::string& text, int bound) {
    return betti_to_json(truncated_pw_derham(polyhedron_from_json(Json::parse(text)), bound))
        .dump();
}

std::string pair_json(const std::string& form_text, const std::string& chain_text) {
    PolyForm w = form_from_json(Json::parse(form_text));
    AffineChain c = chain_from_json(Json::parse(chain_text));
    return rat_str(pair_form_chain(w, c));
}

std::string xi_json(const std::string& algebra_text, const std::string& form_text,
                    const std::string& chain_text) {
    FinPresAlgebra a = algebra_from_json(Json::parse(algebra_text));
    AlgForm w(a, form_from_json(Json::parse(form_text)));
    AffineChain c = chain_from_json(Json::parse(chain_text));
    return rat_str(xi_evaluate(a, w, c));
}

std::string witness_json(int n, int bound) {
    ExactnessResult res = truncated_exactness_solve(torus_witness(n), bound);
    BettiReport block = truncated_laurent_derham(n, 0, false);
    return Json{{"feasible", res.feasible},
                {"conclusive", res.conclusive},
                {"multidegree0_betti", block.betti}}
        .dump();
}

std::string h0_json(const std::string& text) {
    H0Report rep = h0_report(polyhedron_from_json(Json::parse(text)), 1);
    return Json{{"betti0", rep.betti0}, {"components", rep.components}, {"match", rep.match}}
        .dump();
}

std::string stokes_json(const std::string& form_text, const std::string& chain_text) {
    PolyForm w = form_from_json(Json::parse(form_text));
    AffineChain c = chain_from_json(Json::parse(chain_text));
    StokesReport rep = stokes_check(w, c);
    return Json{{"integral_d_form", rat_str(rep.integral_d_form)},
                {"integral_boundary", rat_str(rep.integral_boundary)},
                {"equal", rep.equal}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_derham, m) {
    m.doc() = "Exact de Rham complexes of piecewise polynomial algebras on polyhedra";
    m.def("validate", &validate_json, py::arg("polyhedron"),
          "Check the polyhedron axioms; returns a JSON report.");
    m.def("betti_simplicial", &betti_simplicial_json, py::arg("polyhedron"),
          "Simplicial cohomology Betti report as JSON.");
    m.def("betti_derham", &betti_derham_json, py::arg("polyhedron"), py::arg("max_degree"),
          "Truncated piecewise de Rham Betti report as JSON.");
    m.def("pair", &pair_json, py::arg("form"), py::arg("chain"),
          "Integrate a polynomial form over an affine chain; exact rational string.");
    m.def("xi", &xi_json, py::arg("algebra"), py::arg("form"), py::arg("chain"),
          "Pair an algebraic form with a chain inside the variety.");
    m.def("witness", &witness_json, py::arg("n"), py::arg("max_degree"),
          "Non-exactness report for the torus witness form.");
    m.def("h0", &h0_json, py::arg("polyhedron"), "H^0 versus connected components.");
    m.def("stokes", &stokes_json, py::arg("form"), py::arg("chain"),
          "Both sides of the Stokes identity, exactly.");
}
