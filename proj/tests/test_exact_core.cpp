#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "derham/form.hpp"
#include "derham/generate.hpp"
#include "derham/linalg.hpp"
#include "derham/lp.hpp"

using namespace derham;

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(rat_str(parse_rat("6/-4")) == "-3/2");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(parse_rat(rat_str(Rat(-22, 7))) == Rat(-22, 7));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("poly_eval") {
    Poly p(1);  // x0^2 + 1
    p.add_term({2}, Rat(1));
    p.add_term({0}, Rat(1));
    CHECK(p.eval({Rat(2)}) == Rat(5));

    CHECK(Poly(2).eval({Rat(3), Rat(4)}) == Rat(0));

    Poly q(2);  // x0 x1 - x1
    q.add_term({1, 1}, Rat(1));
    q.add_term({0, 1}, Rat(-1));
    CHECK(q.eval({Rat(1), Rat(7)}) == Rat(0));

    CHECK_THROWS_AS(p.eval({Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("poly_eval with negative exponents") {
    Poly p(1);
    p.add_term({-2}, Rat(1));
    CHECK(p.eval({Rat(1, 2)}) == Rat(4));
    CHECK_THROWS_AS(p.eval({Rat(0)}), std::invalid_argument);
}

TEST_CASE("poly_partial") {
    CHECK(Poly::monomial(1, 0, 3, Rat(1)).partial(0) == Poly::monomial(1, 0, 2, Rat(3)));
    CHECK(Poly::variable(2, 0).partial(1).is_zero());
    Poly p(2);  // x0^2 x1 + x1
    p.add_term({2, 1}, Rat(1));
    p.add_term({0, 1}, Rat(1));
    Poly expect(2);  // 2 x0 x1
    expect.add_term({1, 1}, Rat(2));
    CHECK(p.partial(0) == expect);
    // Laurent: d/dx x^{-1} = -x^{-2}
    Poly inv(1);
    inv.add_term({-1}, Rat(1));
    Poly dinv(1);
    dinv.add_term({-2}, Rat(-1));
    CHECK(inv.partial(0) == dinv);
    CHECK_THROWS_AS(p.partial(2), std::invalid_argument);
}

TEST_CASE("poly arithmetic and substitution") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(x.pow(3) == x * x * x);
    // substitute x -> t^2, y -> t+1 into xy
    Poly t = Poly::variable(1, 0);
    Poly one = Poly::constant(1, Rat(1));
    Poly sub = (x * y).substitute({t * t, t + one});
    CHECK(sub == t * t * t + t * t);
    Poly laur(1);
    laur.add_term({-1}, Rat(1));
    CHECK_THROWS_AS(laur.substitute({t}), std::invalid_argument);
}

TEST_CASE("rref and kernel") {
    CHECK(rank(identity_matrix(3)) == 3);
    CHECK(kernel_basis(identity_matrix(3)).empty());

    QMat zero = zero_matrix(2, 5);
    CHECK(rank(zero) == 0);
    CHECK(kernel_basis(zero).size() == 5);

    QMat prop = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rank(prop) == 1);
    auto ker = kernel_basis(prop);
    REQUIRE(ker.size() == 1);
    // kernel spanned by (2, -1): check proportionality and M v = 0
    CHECK(ker[0][0] * Rat(-1) == ker[0][1] * Rat(2));
    for (const auto& row : prop)
        CHECK(row[0] * ker[0][0] + row[1] * ker[0][1] == Rat(0));
}

TEST_CASE("kernel vectors always satisfy M v = 0 (randomized)") {
    Gen gen(101);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = static_cast<std::size_t>(gen.uniform_int(1, 6));
        std::size_t c = static_cast<std::size_t>(gen.uniform_int(1, 6));
        QMat m = zero_matrix(r, c);
        for (auto& row : m)
            for (auto& x : row) x = gen.rational(5, 3);
        CHECK(bareiss_rank(m) == rank(m));
        for (const auto& v : kernel_basis(m))
            for (const auto& y : mat_vec(m, v)) CHECK(y == Rat(0));
    }
}

TEST_CASE("solve_linear and mat_inverse") {
    QMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    auto x = solve_linear(a, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == QVec{Rat(5), Rat(10)});

    QMat sing = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(!solve_linear(sing, {Rat(0), Rat(1)}).has_value());

    QMat inv = mat_inverse(a);
    CHECK(mat_mul(a, inv) == identity_matrix(2));
    CHECK_THROWS_AS(mat_inverse(sing), std::invalid_argument);
}

TEST_CASE("exact simplex method") {
    // max x0 s.t. x0 + x1 = 1, x >= 0
    LpResult r = lp_maximize({{Rat(1), Rat(1)}}, {Rat(1)}, {Rat(1), Rat(0)});
    CHECK(r.status == LpResult::Status::Optimal);
    CHECK(r.value == Rat(1));

    // x0 + x1 = -1 with x >= 0 is infeasible
    LpResult inf = lp_maximize({{Rat(1), Rat(1)}}, {Rat(-1)}, {Rat(1), Rat(0)});
    CHECK(inf.status == LpResult::Status::Infeasible);

    // x0 - x1 = 0, maximize x0: unbounded along the diagonal
    LpResult unb = lp_maximize({{Rat(1), Rat(-1)}}, {Rat(0)}, {Rat(1), Rat(0)});
    CHECK(unb.status == LpResult::Status::Unbounded);

    // degenerate program exercising Bland's rule
    LpResult deg = lp_maximize({{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(0)}},
                               {Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(2)});
    // x0 = 1 - 2 x1, x2 = x1, objective 3 x1 maxed at x1 = 1/2
    CHECK(deg.status == LpResult::Status::Optimal);
    CHECK(deg.value == Rat(3, 2));
}

TEST_CASE("wedge basics") {
    PolyForm dx0 = PolyForm::dx(2, 0), dx1 = PolyForm::dx(2, 1);
    PolyForm w = form_wedge(dx0, dx1);
    CHECK(w.degree() == 2);
    CHECK(w.terms().count({0, 1}) == 1);

    CHECK(form_wedge(dx0, dx0).is_zero());

    PolyForm xdx1 = Poly::variable(2, 0) * dx1;
    PolyForm res = form_wedge(xdx1, dx0);
    PolyForm expect = Rat(-1) * (Poly::variable(2, 0) * w);
    CHECK(res == expect);
}

TEST_CASE("d basics") {
    PolyForm xdx1 = Poly::variable(2, 0) * PolyForm::dx(2, 1);
    CHECK(form_d(xdx1) == form_wedge(PolyForm::dx(2, 0), PolyForm::dx(2, 1)));

    PolyForm x2 = PolyForm::from_function(Poly::monomial(1, 0, 2, Rat(1)));
    CHECK(form_d(x2) == Poly::monomial(1, 0, 1, Rat(2)) * PolyForm::dx(1, 0));

    PolyForm f = (Poly::variable(2, 0) * Poly::variable(2, 1)) * PolyForm::dx(2, 0);
    CHECK(form_d(form_d(f)).is_zero());
}

TEST_CASE("pullback basics") {
    PolyForm w = form_wedge(PolyForm::dx(2, 0), PolyForm::dx(2, 1));
    AffineMap translate{identity_matrix(2), {Rat(3), Rat(5)}};
    CHECK(form_pullback_affine(w, translate) == w);

    // x0 dx0 along x0 = 2t  ->  4t dt
    PolyForm xdx = Poly::variable(1, 0) * PolyForm::dx(1, 0);
    AffineMap dbl{{{Rat(2)}}, {Rat(0)}};
    CHECK(form_pullback_affine(xdx, dbl) ==
          Poly::monomial(1, 0, 1, Rat(4)) * PolyForm::dx(1, 0));

    // 2-form into a 1-dimensional source dies by alternation
    AffineMap line{{{Rat(1)}, {Rat(2)}}, {Rat(0), Rat(0)}};
    CHECK(form_pullback_affine(w, line).is_zero());
}

TEST_CASE("dg-algebra laws (randomized, exact)") {
    Gen gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int m = gen.uniform_int(1, 3);
        int da = gen.uniform_int(0, m), db = gen.uniform_int(0, m);
        PolyForm a = gen.form(m, da, 3);
        PolyForm b = gen.form(m, db, 3);

        CHECK(form_d(form_d(a)).is_zero());

        PolyForm lhs = form_d(form_wedge(a, b));
        PolyForm rhs = form_wedge(form_d(a), b) +
                       Rat(da % 2 == 0 ? 1 : -1) * form_wedge(a, form_d(b));
        CHECK(lhs == rhs);

        PolyForm comm = form_wedge(a, b) -
                        Rat((da * db) % 2 == 0 ? 1 : -1) * form_wedge(b, a);
        CHECK(comm.is_zero());

        int mi = gen.uniform_int(1, 3);
        AffineMap f = gen.affine_map(mi, m);
        CHECK(form_pullback_affine(form_d(a), f) == form_d(form_pullback_affine(a, f)));
        CHECK(form_pullback_affine(form_wedge(a, b), f) ==
              form_wedge(form_pullback_affine(a, f), form_pullback_affine(b, f)));

        int mj = gen.uniform_int(1, 3);
        AffineMap g = gen.affine_map(mj, mi);
        CHECK(form_pullback_affine(form_pullback_affine(a, f), g) ==
              form_pullback_affine(a, f.compose(g)));
    }
}

TEST_CASE("total degree preserved by d") {
    Gen gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        int m = gen.uniform_int(1, 3);
        PolyForm a = gen.form(m, gen.uniform_int(0, m - 1), 4);
        PolyForm da = form_d(a);
        if (!da.is_zero()) CHECK(da.max_total_degree() <= a.max_total_degree());
    }
}

TEST_CASE("affine maps through prescribed points") {
    Gen gen(55);
    for (int trial = 0; trial < 30; ++trial) {
        int m = gen.uniform_int(1, 4);
        int k = gen.uniform_int(0, m);
        std::vector<QVec> pts, imgs;
        // random affinely independent points (retry until independent)
        do {
            pts.clear();
            for (int i = 0; i <= k; ++i) pts.push_back(gen.point(m));
        } while (k > 0 && ![&] {
            QMat d = zero_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j)
                for (int i = 0; i < m; ++i)
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        pts[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(i)] -
                        pts[0][static_cast<std::size_t>(i)];
            return rank(d) == k;
        }());
        int mo = gen.uniform_int(1, 3);
        for (int i = 0; i <= k; ++i) imgs.push_back(gen.point(mo));
        AffineMap f = affine_through_points(pts, imgs);
        for (int i = 0; i <= k; ++i) CHECK(f.apply(pts[static_cast<std::size_t>(i)]) ==
                                           imgs[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("affine composition is exact") {
    AffineMap f{{{Rat(1), Rat(2)}, {Rat(0), Rat(1)}}, {Rat(1), Rat(-1)}};
    AffineMap g{{{Rat(3)}, {Rat(1)}}, {Rat(0), Rat(2)}};
    QVec x{Rat(5, 7)};
    CHECK(f.compose(g).apply(x) == f.apply(g.apply(x)));
}
