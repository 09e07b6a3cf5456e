// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <functional>

#include "corpus.hpp"
#include "derham/cohomology.hpp"
#include "derham/generate.hpp"
#include "pwgen.hpp"

using namespace derham;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool g_all_pass = true;

void report(int number, const char* name, bool pass, double elapsed) {
    std::printf("criterion %2d (%s): %s (%.2f s)\n", number, name, pass ? "PASS" : "FAIL",
                elapsed);
    std::fflush(stdout);
    g_all_pass = g_all_pass && pass;
}

void run(int number, const char* name, const std::function<bool()>& body) {
    Clock::time_point t0 = Clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
    }
    report(number, name, pass, seconds_since(t0));
}

// 1. 200 seeded Stokes checks, exact equality, < 10 s.
bool stokes_suite() {
    Clock::time_point t0 = Clock::now();
    Gen gen(20240601);
    for (int i = 0; i < 200; ++i) {
        int m = gen.uniform_int(1, 3);
        int deg = gen.uniform_int(0, m - 1);
        PolyForm w = gen.form(m, deg, 4);
        AffineChain c = gen.chain(m, deg + 1);
        if (!stokes_check(w, c).equal) return false;
    }
    return seconds_since(t0) < 10.0;
}

// 2. Whitney duality and splitting on the five corpus complexes, < 60 s.
bool whitney_duality() {
    Clock::time_point t0 = Clock::now();
    for (const auto& k : {corpus::interval(), corpus::triangle_boundary(),
                          corpus::full_triangle(), corpus::tetrahedron_boundary(),
                          corpus::torus7()}) {
        LambdaPsiReport rep = compare_lambda_psi(k);
        if (!rep.psi_lambda_identity || !rep.lambda_chain_map || !rep.whitney_compatible)
            return false;
        for (const auto& m : rep.psi_lambda)
            if (m != identity_matrix(m.size())) return false;
    }
    return seconds_since(t0) < 60.0;
}

// 3. Stabilized piecewise de Rham Betti equals simplicial cohomology.
bool betti_agreement() {
    auto ks = corpus::betti_corpus();
    auto expected = corpus::betti_expected();
    std::vector<int> bounds = {2, 3, 3, 3, 3, 2};  // torus at D = 3, stabilized at 4
    for (std::size_t i = 0; i < ks.size(); ++i) {
        BettiReport pw = truncated_pw_derham(ks[i], bounds[i]);
        BettiReport simp = simplicial_cohomology(ks[i]);
        if (!pw.stabilized) return false;
        if (pw.betti != expected[i] || simp.betti != expected[i]) return false;
    }
    return true;
}

// 4. Stars are contractible at every bound D <= 5, and the contraction yields
//    exact primitives for 50 seeded random closed forms.
bool star_poincare() {
    auto stars = corpus::star_corpus();
    for (const auto& st : stars)
        for (int d = 1; d <= 5; ++d) {
            BettiReport r = truncated_pw_derham(st.base, d, false);
            std::vector<long> expect(r.betti.size(), 0);
            expect[0] = 1;
            if (r.betti != expect) return false;
        }
    Gen gen(777);
    for (int trial = 0; trial < 50; ++trial) {
        const Star& st = stars[static_cast<std::size_t>(trial) % stars.size()];
        int n = pwgen::top_dim(st.base);
        int q = gen.uniform_int(1, n);
        PiecewiseForm w = pw_d(pwgen::random_pw(gen, st.base, q - 1));
        PiecewiseForm eta = star_contraction_exactness(st, w);
        if (!pw_equal(pw_d(eta), w)) return false;
    }
    return true;
}

// Shifted copy of a small complex, for building disjoint unions.
void append_shifted(Polyhedron& k, const Polyhedron& piece, const Rat& xshift) {
    int offset = static_cast<int>(k.vertices.size());
    for (const auto& v : piece.vertices) {
        QVec p(2, Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
        p[0] += xshift;
        k.vertices.push_back(std::move(p));
    }
    for (const auto& s : piece.simplices) {
        Simplex t = s;
        for (int& v : t) v += offset;
        k.simplices.insert(std::move(t));
    }
}

// 5. dim H^0 equals the number of connected components.
bool h0_law() {
    for (const auto& k : corpus::betti_corpus())
        if (!h0_report(k, 1).match) return false;
    Gen gen(1234);
    std::vector<Polyhedron> pieces = {corpus::interval(), corpus::triangle_boundary(),
                                      corpus::full_triangle()};
    for (int trial = 0; trial < 20; ++trial) {
        int parts = gen.uniform_int(1, 4);
        Polyhedron k;
        k.ambient_dim = 2;
        for (int p = 0; p < parts; ++p)
            append_shifted(k, pieces[static_cast<std::size_t>(gen.uniform_int(0, 2))],
                           Rat(5 * p));
        H0Report rep = h0_report(k, 1);
        if (!rep.match || rep.betti0 != parts) return false;
    }
    return true;
}

long binomial(int n, int k) {
    long b = 1;
    for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
    return b;
}

// 6. Torus witnesses stay infeasible at every bound, conclusively, and the
//    multidegree-0 block reproduces the binomial Betti numbers.
bool nonexactness_witnesses() {
    for (int n = 1; n <= 3; ++n) {
        AlgForm w = torus_witness(n);
        for (int d = 0; d <= 6; ++d) {
            ExactnessResult r = truncated_exactness_solve(w, d);
            if (r.feasible || !r.conclusive) return false;
        }
        BettiReport block = truncated_laurent_derham(n, 0, false);
        for (int q = 0; q <= n; ++q)
            if (block.betti[static_cast<std::size_t>(q)] != binomial(n, q)) return false;
    }
    return true;
}

// 7. The Euler equation has no Laurent solution for c = 1, and the trivial
//    solution for c = 0.
bool euler_equation() {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 8; ++d)
            if (euler_equation_solve(n, Rat(1), d).feasible) return false;
        EulerResult zero = euler_equation_solve(n, Rat(0), 4);
        if (!zero.feasible) return false;
        Poly total(n);
        for (int i = 0; i < n; ++i)
            total = total +
                    Poly::variable(n, i) * zero.solution[static_cast<std::size_t>(i)].partial(i);
        if (!total.is_zero()) return false;
    }
    return true;
}

// 8. Homotopy invariance for identity-vs-collapse on every star and for two
//    adjacent approximations on the twice-subdivided interval, on every
//    Whitney basis form.
bool homotopy_invariance() {
    for (const auto& st : corpus::star_corpus()) {
        RectilinearMap id = RectilinearMap::identity(st.base);
        RectilinearMap col = RectilinearMap::collapse_to_vertex(st.base, st.center);
        for (const auto& s : st.base.simplices) {
            PiecewiseForm w = whitney(SimplicialCochain::indicator(st.base, s));
            if (!homotopy_invariance_check(id, col, w).identity_holds) return false;
        }
    }
    Polyhedron src = barycentric_subdivide(barycentric_subdivide(corpus::interval()));
    Polyhedron dst = corpus::path({Rat(0), Rat(1, 2), Rat(1)});
    // vertex images: round each source vertex down / up to a vertex of dst
    auto snap = [&](const QVec& v, bool up) -> QVec {
        Rat best = up ? Rat(1) : Rat(0);
        for (const auto& w : dst.vertices)
            if (up ? (w[0] >= v[0] && w[0] <= best) : (w[0] <= v[0] && w[0] >= best))
                best = w[0];
        return {best};
    };
    RectilinearMap f0{src, dst, {}}, f1{src, dst, {}};
    for (const auto& v : src.vertices) {
        f0.vertex_images.push_back(snap(v, false));
        f1.vertex_images.push_back(snap(v, true));
    }
    if (!f0.is_valid() || !f1.is_valid() || !are_adjacent(f0, f1)) return false;
    for (const auto& s : dst.simplices) {
        PiecewiseForm w = whitney(SimplicialCochain::indicator(dst, s));
        if (!homotopy_invariance_check(f0, f1, w).identity_holds) return false;
    }
    return true;
}

// 9. 1000 seeded dg-algebra law cases across the plain, quotient, and
//    piecewise models, < 30 s.
bool dg_laws() {
    Clock::time_point t0 = Clock::now();
    Gen gen(31415);

    // 500 cases on plain polynomial forms
    for (int i = 0; i < 500; ++i) {
        int m = gen.uniform_int(1, 3);
        int da = gen.uniform_int(0, m), db = gen.uniform_int(0, m);
        PolyForm a = gen.form(m, da, 3), b = gen.form(m, db, 3);
        if (!form_d(form_d(a)).is_zero()) return false;
        PolyForm leib = form_wedge(form_d(a), b) +
                        Rat(da % 2 == 0 ? 1 : -1) * form_wedge(a, form_d(b));
        if (form_d(form_wedge(a, b)) != leib) return false;
        PolyForm comm =
            form_wedge(a, b) - Rat((da * db) % 2 == 0 ? 1 : -1) * form_wedge(b, a);
        if (!comm.is_zero()) return false;
        AffineMap f = gen.affine_map(gen.uniform_int(1, 3), m);
        if (form_pullback_affine(form_d(a), f) != form_d(form_pullback_affine(a, f)))
            return false;
    }

    // 300 cases in quotient algebras: laws on normal forms, d well-defined
    std::vector<FinPresAlgebra> algebras = {
        FinPresAlgebra::laurent(2), FinPresAlgebra::monomial_quotient(2, {{1, 1}}),
        FinPresAlgebra::univariate_quotient([] {
            Poly r(1);
            r.add_term({2}, Rat(1));
            return r;
        }())};
    for (int i = 0; i < 300; ++i) {
        const FinPresAlgebra& alg = algebras[static_cast<std::size_t>(i % 3)];
        bool laur = alg.kind == AlgKind::Laurent;
        int da = gen.uniform_int(0, alg.nvars), db = gen.uniform_int(0, alg.nvars);
        AlgForm a(alg, gen.form(alg.nvars, da, 3, 3, laur));
        AlgForm b(alg, gen.form(alg.nvars, db, 3, 3, laur));
        if (!alg_d(alg_d(a)).rep.is_zero()) return false;
        PolyForm leib = form_wedge(alg_d(a).rep, b.rep) +
                        Rat(da % 2 == 0 ? 1 : -1) * form_wedge(a.rep, alg_d(b).rep);
        if (alg_d(alg_wedge(a, b)).rep != AlgForm(alg, leib).rep) return false;
        PolyForm comm = form_wedge(a.rep, b.rep) -
                        Rat((da * db) % 2 == 0 ? 1 : -1) * form_wedge(b.rep, a.rep);
        if (!AlgForm(alg, comm).rep.is_zero()) return false;
        // naturality of normalization: d commutes with taking normal forms
        PolyForm raw = gen.form(alg.nvars, da, 3, 3, laur);
        if (AlgForm(alg, form_d(raw)).rep != alg_d(AlgForm(alg, raw)).rep) return false;
    }

    // 200 piecewise cases: laws up to intrinsic equality, rectilinear naturality
    Polyhedron k = corpus::full_triangle();
    RectilinearMap id = RectilinearMap::identity(k);
    RectilinearMap shrink = id;
    shrink.vertex_images = {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}};
    for (int i = 0; i < 200; ++i) {
        int da = gen.uniform_int(0, 2), db = gen.uniform_int(0, 2);
        PiecewiseForm a = pwgen::random_pw(gen, k, da);
        PiecewiseForm b = pwgen::random_pw(gen, k, db);
        if (!pw_is_zero(pw_d(pw_d(a)))) return false;
        PiecewiseForm leib =
            pw_add(pw_wedge(pw_d(a), b),
                   pw_scale(Rat(da % 2 == 0 ? 1 : -1), pw_wedge(a, pw_d(b))));
        if (!pw_equal(pw_d(pw_wedge(a, b)), leib)) return false;
        PiecewiseForm comm = pw_sub(
            pw_wedge(a, b), pw_scale(Rat((da * db) % 2 == 0 ? 1 : -1), pw_wedge(b, a)));
        if (!pw_is_zero(comm)) return false;
        const RectilinearMap& f = (i % 2 == 0) ? id : shrink;
        if (!pw_equal(rectilinear_pullback(pw_d(a), f), pw_d(rectilinear_pullback(a, f))))
            return false;
    }

    return seconds_since(t0) < 30.0;
}

// 10. Zero-differential certificates exist for the separable examples and are
//     absent for a transcendental element.
bool algebraicity_certificates() {
    Poly idem(1);
    idem.add_term({2}, Rat(1));
    idem.add_term({1}, Rat(-1));
    AlgElement e(FinPresAlgebra::univariate_quotient(idem), Poly::variable(1, 0));
    auto c1 = zero_diff_certificate(e, 5);
    if (!c1 || !verify_zero_diff(e, *c1)) return false;

    Poly cube(1);
    cube.add_term({3}, Rat(1));
    cube.add_term({1}, Rat(-1));
    AlgElement x3(FinPresAlgebra::univariate_quotient(cube), Poly::variable(1, 0));
    auto c2 = zero_diff_certificate(x3, 5);
    if (!c2 || !verify_zero_diff(x3, *c2)) return false;

    AlgElement x(FinPresAlgebra::polynomial(1), Poly::variable(1, 0));
    return !zero_diff_certificate(x, 10).has_value();
}

}  // namespace

int main() {
    run(1, "stokes suite", stokes_suite);
    run(2, "whitney duality and splitting", whitney_duality);
    run(3, "betti agreement", betti_agreement);
    run(4, "poincare lemma for stars", star_poincare);
    run(5, "h0 equals components", h0_law);
    run(6, "non-exactness witnesses", nonexactness_witnesses);
    run(7, "euler equation", euler_equation);
    run(8, "homotopy invariance", homotopy_invariance);
    run(9, "dg-algebra laws", dg_laws);
    run(10, "algebraicity certificates", algebraicity_certificates);
    std::printf("acceptance: %s\n", g_all_pass ? "ALL PASS" : "FAILURES");
    return g_all_pass ? 0 : 1;
}
