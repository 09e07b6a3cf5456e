#include <iostream>

#include "CLI11.hpp"
#include "derham/generate.hpp"
#include "derham/json_io.hpp"

namespace {

using namespace derham;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError(out_path, "cannot open output file");
        out << text;
    }
}

Json simplex_json(const Simplex& s) { return Json(s); }

Json matrix_json(const QMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rat_str(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

int cmd_validate(const std::string& path, const std::string& out) {
    Polyhedron k = polyhedron_from_json(load_json_file(path));
    ValidityReport rep = validate_polyhedron(k);
    Json violations = Json::array();
    for (std::size_t i = 0; i < rep.violating_pairs.size(); ++i)
        violations.push_back({{"a", simplex_json(rep.violating_pairs[i].first)},
                              {"b", simplex_json(rep.violating_pairs[i].second)},
                              {"message", rep.messages[i]}});
    emit({{"command", "validate"}, {"valid", rep.valid}, {"violations", violations}}, out);
    return rep.valid ? kExitOk : kExitInputError;
}

int cmd_betti(const std::string& path, const std::string& mode, int max_degree,
              const std::string& out) {
    Polyhedron k = polyhedron_from_json(load_json_file(path));
    BettiReport rep;
    if (mode == "simplicial") {
        rep = simplicial_cohomology(k);
    } else if (mode == "derham") {
        if (max_degree < 1) throw ParseError("--max-degree", "derham mode requires a bound >= 1");
        rep = truncated_pw_derham(k, max_degree);
    } else {
        throw ParseError("--mode", "expected 'simplicial' or 'derham'");
    }
    Json j = betti_to_json(rep);
    j["command"] = "betti";
    j["mode"] = mode;
    emit(j, out);
    return kExitOk;
}

int cmd_pair(const std::string& form_path, const std::string& chain_path,
             const std::string& out) {
    PolyForm w = form_from_json(load_json_file(form_path));
    AffineChain c = chain_from_json(load_json_file(chain_path));
    Rat v = pair_form_chain(w, c);
    emit({{"command", "pair"}, {"value", rat_str(v)}}, out);
    return kExitOk;
}

int cmd_xi(const std::string& algebra_path, const std::string& form_path,
           const std::string& chain_path, const std::string& out) {
    FinPresAlgebra a = algebra_from_json(load_json_file(algebra_path));
    AlgForm w(a, form_from_json(load_json_file(form_path)));
    AffineChain c = chain_from_json(load_json_file(chain_path));
    Rat v = xi_evaluate(a, w, c);
    emit({{"command", "xi"}, {"value", rat_str(v)}}, out);
    return kExitOk;
}

int cmd_witness(const std::string& model, int n, int max_degree, const std::string& out) {
    if (model != "torus") throw ParseError("--model", "only 'torus' is supported");
    if (n < 1) throw ParseError("--n", "need n >= 1");
    AlgForm w = torus_witness(n);
    ExactnessResult res = truncated_exactness_solve(w, max_degree);
    BettiReport block = truncated_laurent_derham(n, 0, false);  // the multidegree-0 block
    std::string message =
        res.feasible ? "unexpected primitive found"
                     : (res.conclusive
                            ? "infeasible at all blocks; class nonzero"
                            : "infeasible at bound " + std::to_string(max_degree));
    emit({{"command", "witness"},
          {"model", model},
          {"n", n},
          {"max_degree", max_degree},
          {"feasible", res.feasible},
          {"conclusive", res.conclusive},
          {"multidegree0_betti", block.betti},
          {"message", message}},
         out);
    return res.feasible ? kExitMathFailure : kExitOk;
}

int cmd_h0(const std::string& path, const std::string& out) {
    Polyhedron k = polyhedron_from_json(load_json_file(path));
    H0Report rep = h0_report(k, 1);
    emit({{"command", "h0"},
          {"betti0", rep.betti0},
          {"components", rep.components},
          {"match", rep.match}},
         out);
    return rep.match ? kExitOk : kExitMathFailure;
}

int cmd_poincare(const std::string& star_path, int max_degree, const std::string& out) {
    Json j = load_json_file(star_path);
    Polyhedron k = polyhedron_from_json(jio::field(j, "polyhedron", "star"), "star.polyhedron");
    int center = jio::to_int(jio::field(j, "center", "star"), "star.center");
    if (!is_star(k, center)) throw ParseError("star", "complex is not a star at the given center");
    BettiReport rep = truncated_pw_derham(k, max_degree);
    bool contractible = !rep.betti.empty() && rep.betti[0] == 1 &&
                        std::all_of(rep.betti.begin() + 1, rep.betti.end(),
                                    [](long b) { return b == 0; });
    Json rj = betti_to_json(rep);
    rj["command"] = "poincare";
    rj["center"] = center;
    rj["contractible"] = contractible;
    emit(rj, out);
    return contractible ? kExitOk : kExitMathFailure;
}

int cmd_compare(const std::string& path, const std::string& out) {
    Polyhedron k = polyhedron_from_json(load_json_file(path));
    LambdaPsiReport rep = compare_lambda_psi(k);
    Json mats = Json::array();
    for (const auto& m : rep.psi_lambda) mats.push_back(matrix_json(m));
    bool ok = rep.psi_lambda_identity && rep.lambda_chain_map && rep.whitney_compatible;
    emit({{"command", "compare"},
          {"psi_lambda_identity", rep.psi_lambda_identity},
          {"lambda_chain_map", rep.lambda_chain_map},
          {"whitney_compatible", rep.whitney_compatible},
          {"matrices", mats}},
         out);
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_selftest(std::uint64_t seed, const std::string& out) {
    Gen gen(seed);
    long stokes_pass = 0, stokes_total = 200;
    for (long i = 0; i < stokes_total; ++i) {
        int m = gen.uniform_int(1, 3);
        int deg = gen.uniform_int(0, m - 1);
        PolyForm w = gen.form(m, deg, 4);
        AffineChain c = gen.chain(m, deg + 1);
        if (stokes_check(w, c).equal) ++stokes_pass;
    }

    long law_pass = 0, law_total = 1000;
    for (long i = 0; i < law_total; ++i) {
        int m = gen.uniform_int(1, 3);
        int da = gen.uniform_int(0, m);
        int db = gen.uniform_int(0, m);
        PolyForm a = gen.form(m, da, 3);
        PolyForm b = gen.form(m, db, 3);
        bool ok = form_d(form_d(a)).is_zero();
        PolyForm leib_l = form_d(form_wedge(a, b));
        PolyForm leib_r = form_wedge(form_d(a), b) +
                          Rat(da % 2 == 0 ? 1 : -1) * form_wedge(a, form_d(b));
        ok = ok && (leib_l == leib_r);
        PolyForm comm = form_wedge(a, b) -
                        Rat((da * db) % 2 == 0 ? 1 : -1) * form_wedge(b, a);
        ok = ok && comm.is_zero();
        int mi = gen.uniform_int(1, 3);
        AffineMap f = gen.affine_map(mi, m);
        ok = ok && (form_pullback_affine(form_d(a), f) == form_d(form_pullback_affine(a, f)));
        ok = ok && (form_pullback_affine(form_wedge(a, b), f) ==
                    form_wedge(form_pullback_affine(a, f), form_pullback_affine(b, f)));
        if (ok) ++law_pass;
    }

    bool all_pass = (stokes_pass == stokes_total) && (law_pass == law_total);
    emit({{"command", "selftest"},
          {"seed", seed},
          {"stokes", {{"pass", stokes_pass}, {"total", stokes_total}}},
          {"dg_laws", {{"pass", law_pass}, {"total", law_total}}},
          {"all_pass", all_pass}},
         out);
    return all_pass ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact de Rham complexes of piecewise polynomial algebras on polyhedra"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("--out", out, "write the JSON report to this path instead of stdout");

    std::string path, mode = "simplicial", form_path, chain_path, algebra_path, model = "torus",
                      star_path;
    int max_degree = 3, nvars = 2;
    std::uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "check the polyhedron axioms");
    validate->add_option("path", path, "polyhedron JSON")->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers, simplicial or de Rham");
    betti->add_option("path", path, "polyhedron JSON")->required();
    betti->add_option("--mode", mode, "simplicial|derham");
    betti->add_option("--max-degree", max_degree, "truncation bound (derham mode)");

    auto* pair = app.add_subcommand("pair", "integrate a form over an affine chain");
    pair->add_option("--form", form_path, "form JSON")->required();
    pair->add_option("--chain", chain_path, "chain JSON")->required();

    auto* xi = app.add_subcommand("xi", "pair an algebraic form with a chain in the variety");
    xi->add_option("--algebra", algebra_path, "algebra JSON")->required();
    xi->add_option("--form", form_path, "form JSON")->required();
    xi->add_option("--chain", chain_path, "chain JSON")->required();

    auto* witness = app.add_subcommand("witness", "non-exactness witness report");
    witness->add_option("--model", model, "witness family (torus)");
    witness->add_option("--n", nvars, "number of variables")->required();
    witness->add_option("--max-degree", max_degree, "solver bound");

    auto* h0 = app.add_subcommand("h0", "H^0 versus connected components");
    h0->add_option("path", path, "polyhedron JSON")->required();

    auto* poincare = app.add_subcommand("poincare", "star contractibility report");
    poincare->add_option("--star", star_path, "star JSON {polyhedron, center}")->required();
    poincare->add_option("--max-degree", max_degree, "truncation bound");

    auto* compare = app.add_subcommand("compare", "Whitney/integration identity matrices");
    compare->add_option("path", path, "polyhedron JSON")->required();

    auto* selftest = app.add_subcommand("selftest", "randomized exactness property suites");
    selftest->add_option("--seed", seed, "RNG seed (recorded in the report)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path, out);
        if (betti->parsed()) return cmd_betti(path, mode, max_degree, out);
        if (pair->parsed()) return cmd_pair(form_path, chain_path, out);
        if (xi->parsed()) return cmd_xi(algebra_path, form_path, chain_path, out);
        if (witness->parsed()) return cmd_witness(model, nvars, max_degree, out);
        if (h0->parsed()) return cmd_h0(path, out);
        if (poincare->parsed()) return cmd_poincare(star_path, max_degree, out);
        if (compare->parsed()) return cmd_compare(path, out);
        if (selftest->parsed()) return cmd_selftest(seed, out);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitInputError;
}
