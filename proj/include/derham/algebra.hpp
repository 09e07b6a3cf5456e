#ifndef DERHAM_ALGEBRA_HPP
#define DERHAM_ALGEBRA_HPP

#include "derham/integrate.hpp"
#include "derham/linalg.hpp"
#include "derham/piecewise.hpp"

namespace derham {

// Presentation kinds with Groebner-free confluent normal forms.
enum class AlgKind { Polynomial, Laurent, MonomialQuotient, UnivariateQuotient };

inline std::string kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::Polynomial: return "polynomial";
        case AlgKind::Laurent: return "laurent";
        case AlgKind::MonomialQuotient: return "monomial_quotient";
        case AlgKind::UnivariateQuotient: return "univariate_quotient";
    }
    return "?";
}

namespace detail {

// Univariate helpers on Poly with nvars == 1.
inline int uni_degree(const Poly& p) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[0]);
    return d;
}
inline Rat uni_coeff(const Poly& p, int k) {
    auto it = p.terms().find(Exponent{k});
    return it == p.terms().end() ? Rat(0) : it->second;
}
inline Poly uni_rem(Poly a, const Poly& m) {
    int dm = uni_degree(m);
    if (dm < 0) throw std::invalid_argument("univariate modulus is zero");
    Rat lead = uni_coeff(m, dm);
    for (int d = uni_degree(a); d >= dm; d = uni_degree(a)) {
        Rat c = uni_coeff(a, d);
        Poly sub(1);
        for (const auto& [e, mc] : m.terms()) sub.add_term(Exponent{e[0] + d - dm}, mc * c / lead);
        a = a - sub;
    }
    return a;
}
inline Poly uni_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = uni_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rat lead = uni_coeff(a, uni_degree(a));
        a = (Rat(1) / lead) * a;
    }
    return a;
}
inline Poly uni_derivative(const Poly& p) { return p.partial(0); }

}  // namespace detail

struct FinPresAlgebra {
    AlgKind kind = AlgKind::Polynomial;
    int nvars = 0;
    std::vector<Exponent> ideal_monomials;  // MonomialQuotient generators
    Poly modulus;                           // UnivariateQuotient (monic up to scaling)

    static FinPresAlgebra polynomial(int n) { return {AlgKind::Polynomial, n, {}, Poly(1)}; }
    static FinPresAlgebra laurent(int n) { return {AlgKind::Laurent, n, {}, Poly(1)}; }
    static FinPresAlgebra monomial_quotient(int n, std::vector<Exponent> gens) {
        for (const auto& g : gens) {
            if (g.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("ideal generator arity mismatch");
            for (int e : g)
                if (e < 0) throw std::invalid_argument("ideal generator must be a monomial");
        }
        return {AlgKind::MonomialQuotient, n, std::move(gens), Poly(1)};
    }
    static FinPresAlgebra univariate_quotient(Poly mod) {
        if (mod.num_vars() != 1 || detail::uni_degree(mod) < 1)
            throw std::invalid_argument("univariate quotient needs a univariate modulus");
        return {AlgKind::UnivariateQuotient, 1, {}, std::move(mod)};
    }

    bool exponent_in_ideal(const Exponent& e) const {
        for (const auto& g : ideal_monomials) {
            bool divides = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (e[i] < g[i]) { divides = false; break; }
            if (divides) return true;
        }
        return false;
    }

    Poly normalize(const Poly& p) const {
        if (p.num_vars() != nvars)
            throw std::invalid_argument("FinPresAlgebra: element arity mismatch");
        switch (kind) {
            case AlgKind::Polynomial:
                if (!p.is_polynomial())
                    throw std::invalid_argument("polynomial algebra: negative exponent");
                return p;
            case AlgKind::Laurent:
                return p;
            case AlgKind::MonomialQuotient: {
                Poly r(nvars);
                for (const auto& [e, c] : p.terms())
                    if (!exponent_in_ideal(e)) r.add_term(e, c);
                return r;
            }
            case AlgKind::UnivariateQuotient:
                return detail::uni_rem(p, modulus);
        }
        throw std::logic_error("unreachable");
    }

    bool operator==(const FinPresAlgebra& o) const = default;
};

struct AlgElement {
    FinPresAlgebra owner;
    Poly value;  // always in normal form

    AlgElement(FinPresAlgebra a, const Poly& v) : owner(std::move(a)), value(owner.normalize(v)) {}
    bool operator==(const AlgElement& o) const { return owner == o.owner && value == o.value; }
};

namespace detail {

inline Exponent combined_multidegree(const Exponent& coeff_exp, const IndexTuple& idx) {
    Exponent m = coeff_exp;
    for (int i : idx) m[static_cast<std::size_t>(i)] += 1;
    return m;
}

// Normal form in Omega^n of a monomial quotient: reduce coefficients modulo
// the ideal, then reduce each multidegree block modulo the row space of the
// relations x^beta dg ^ dx_J. Each block is finite, so RREF reduction gives a
// canonical (hence confluent) representative.
inline PolyForm normalize_mq_form(const FinPresAlgebra& a, const PolyForm& f) {
    int nv = a.nvars, deg = f.degree();
    // coefficient reduction
    PolyForm red(nv, deg);
    for (const auto& [idx, coeff] : f.terms()) red.add_term(idx, a.normalize(coeff));
    if (deg == 0 || a.ideal_monomials.empty()) return red;

    // group terms by combined multidegree
    std::map<Exponent, std::map<std::pair<Exponent, IndexTuple>, Rat>, GradedLex> blocks;
    for (const auto& [idx, coeff] : red.terms())
        for (const auto& [e, c] : coeff.terms())
            blocks[combined_multidegree(e, idx)][{e, idx}] = c;

    PolyForm out(nv, deg);
    for (auto& [m, vec] : blocks) {
        // block basis: all (gamma, I) with gamma = m - e_I >= 0 and gamma not in the ideal
        std::vector<std::pair<Exponent, IndexTuple>> basis;
        std::map<std::pair<Exponent, IndexTuple>, std::size_t> pos;
        std::vector<int> vars(static_cast<std::size_t>(nv));
        std::iota(vars.begin(), vars.end(), 0);
        std::vector<IndexTuple> tuples;
        std::function<void(std::size_t, IndexTuple&)> gen = [&](std::size_t start, IndexTuple& cur) {
            if (cur.size() == static_cast<std::size_t>(deg)) {
                tuples.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < vars.size(); ++i) {
                cur.push_back(vars[i]);
                gen(i + 1, cur);
                cur.pop_back();
            }
        };
        IndexTuple cur;
        gen(0, cur);
        for (const auto& t : tuples) {
            Exponent gamma = m;
            bool ok = true;
            for (int i : t) {
                gamma[static_cast<std::size_t>(i)] -= 1;
                if (gamma[static_cast<std::size_t>(i)] < 0) ok = false;
            }
            // Laurent multidegrees never reach here; gamma >= 0 required
            for (int e : gamma)
                if (e < 0) ok = false;
            if (!ok || a.exponent_in_ideal(gamma)) continue;
            pos[{gamma, t}] = basis.size();
            basis.emplace_back(gamma, t);
        }
        if (basis.empty()) continue;

        // relations x^{m-g-e_J} dg ^ dx_J for each generator g and (deg-1)-tuple J
        QMat rel;
        std::vector<IndexTuple> subtuples;
        std::function<void(std::size_t, IndexTuple&)> gensub = [&](std::size_t start, IndexTuple& c2) {
            if (c2.size() == static_cast<std::size_t>(deg) - 1) {
                subtuples.push_back(c2);
                return;
            }
            for (std::size_t i = start; i < vars.size(); ++i) {
                c2.push_back(vars[i]);
                gensub(i + 1, c2);
                c2.pop_back();
            }
        };
        IndexTuple cur2;
        gensub(0, cur2);
        for (const auto& g : a.ideal_monomials) {
            for (const auto& j : subtuples) {
                Exponent beta = m;
                bool ok = true;
                for (std::size_t i = 0; i < g.size(); ++i) beta[i] -= g[i];
                for (int i : j) beta[static_cast<std::size_t>(i)] -= 1;
                for (int e : beta)
                    if (e < 0) { ok = false; break; }
                if (!ok) continue;
                QVec row(basis.size(), Rat(0));
                bool nonzero = false;
                IndexTuple merged;
                for (int i = 0; i < nv; ++i) {
                    if (g[static_cast<std::size_t>(i)] == 0) continue;
                    int s = merge_indices({i}, j, merged);
                    if (s == 0) continue;
                    Exponent gamma = m;
                    for (int jj : merged) gamma[static_cast<std::size_t>(jj)] -= 1;
                    auto it = pos.find({gamma, merged});
                    if (it == pos.end()) continue;  // coefficient already in the ideal
                    row[it->second] += Rat(s * g[static_cast<std::size_t>(i)]);
                    nonzero = true;
                }
                if (nonzero) rel.push_back(std::move(row));
            }
        }
        QVec v(basis.size(), Rat(0));
        for (const auto& [key, c] : vec) {
            auto it = pos.find(key);
            if (it != pos.end()) v[it->second] = c;
        }
        if (!rel.empty()) {
            Echelon e = rref(std::move(rel));
            for (std::size_t r = 0; r < e.pivots.size(); ++r) {
                std::size_t pc = static_cast<std::size_t>(e.pivots[r]);
                if (v[pc].is_zero()) continue;
                Rat f2 = v[pc];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f2 * e.reduced[r][j];
            }
        }
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!v[i].is_zero()) {
                Poly p(nv);
                p.add_term(basis[i].first, v[i]);
                out.add_term(basis[i].second, p);
            }
    }
    return out;
}

}  // namespace detail

struct AlgForm {
    FinPresAlgebra owner;
    PolyForm rep;  // coefficients in normal form

    AlgForm(FinPresAlgebra a, const PolyForm& f) : owner(std::move(a)), rep(normalize(owner, f)) {}

    static PolyForm normalize(const FinPresAlgebra& a, const PolyForm& f) {
        if (f.num_vars() != a.nvars)
            throw std::invalid_argument("AlgForm: variable-count mismatch");
        switch (a.kind) {
            case AlgKind::Polynomial:
            case AlgKind::Laurent: {
                PolyForm r(a.nvars, f.degree());
                for (const auto& [idx, coeff] : f.terms()) r.add_term(idx, a.normalize(coeff));
                return r;
            }
            case AlgKind::MonomialQuotient:
                return detail::normalize_mq_form(a, f);
            case AlgKind::UnivariateQuotient: {
                if (f.degree() >= 2) return PolyForm(1, f.degree());  // one variable
                PolyForm r(1, f.degree());
                if (f.degree() == 0) {
                    for (const auto& [idx, coeff] : f.terms()) r.add_term(idx, a.normalize(coeff));
                    return r;
                }
                // Omega^1 = k[x]/(r, r') dx: reduce mod gcd(r, r')
                Poly g = detail::uni_gcd(a.modulus, detail::uni_derivative(a.modulus));
                for (const auto& [idx, coeff] : f.terms())
                    r.add_term(idx, detail::uni_rem(coeff, g));
                return r;
            }
        }
        throw std::logic_error("unreachable");
    }

    bool operator==(const AlgForm& o) const { return owner == o.owner && rep == o.rep; }
};

inline AlgForm alg_d(const AlgForm& a) { return AlgForm(a.owner, form_d(a.rep)); }

inline AlgForm alg_wedge(const AlgForm& a, const AlgForm& b) {
    if (a.owner != b.owner) throw std::invalid_argument("alg_wedge: different algebras");
    return AlgForm(a.owner, form_wedge(a.rep, b.rep));
}

// Points of the real spectrum with rational coordinates.
struct RealPoint {
    FinPresAlgebra owner;
    QVec coords;
};

inline bool is_point(const FinPresAlgebra& a, const QVec& x) {
    if (x.size() != static_cast<std::size_t>(a.nvars))
        throw std::invalid_argument("is_point: coordinate arity mismatch");
    switch (a.kind) {
        case AlgKind::Polynomial:
            return true;
        case AlgKind::Laurent:
            return std::none_of(x.begin(), x.end(), [](const Rat& c) { return c.is_zero(); });
        case AlgKind::MonomialQuotient:
            for (const auto& g : a.ideal_monomials) {
                Rat v = 1;
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (int k = 0; k < g[i]; ++k) v *= x[i];
                if (!v.is_zero()) return false;
            }
            return true;
        case AlgKind::UnivariateQuotient:
            return a.modulus.eval(x).is_zero();
    }
    return false;
}

// Gamma: a point of |K| determines the algebra homomorphism "evaluate the
// generators"; the coordinates are the generator values at x.
inline RealPoint gamma_point(const FinPresAlgebra& a,
                             const std::vector<PiecewiseForm>& generators, const QVec& x) {
    if (generators.size() != static_cast<std::size_t>(a.nvars))
        throw std::invalid_argument("gamma_point: generator count mismatch");
    QVec coords;
    coords.reserve(generators.size());
    for (const auto& g : generators) coords.push_back(pw_evaluate(g, x));
    if (!is_point(a, coords))
        throw std::invalid_argument("gamma_point: generator values violate the relations");
    return {a, coords};
}

// b-hat: evaluate an algebra element at a real point.
inline Rat evaluate_element(const AlgElement& b, const RealPoint& p) {
    if (b.owner != p.owner) throw std::invalid_argument("evaluate_element: algebra mismatch");
    return b.value.eval(p.coords);
}

namespace detail {

// Coordinates of a list of polynomials over their joint monomial support.
inline std::pair<QMat, std::map<Exponent, std::size_t, GradedLex>> poly_coordinates(
    const std::vector<Poly>& polys) {
    std::map<Exponent, std::size_t, GradedLex> row_of;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) row_of.emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;
    QMat m = zero_matrix(row_of.size(), polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [e, c] : polys[j].terms()) m[row_of.at(e)][j] = c;
    return {std::move(m), std::move(row_of)};
}

}  // namespace detail

// Certificate that da = 0: a monic q with q(a) = 0 together with h1 such that
// h1(a) q'(a) = 1. Then q'(a) da = d(q(a)) = 0 forces da = 0. One-sided by
// design: absence up to the bound proves nothing.
struct ZeroDiffCertificate {
    Poly annihilator;  // monic univariate q
    Poly h1;           // element of the algebra, normal form
};

inline std::optional<ZeroDiffCertificate> zero_diff_certificate(const AlgElement& a, int bound) {
    if (bound < 1) throw std::invalid_argument("zero_diff_certificate: bound must be >= 1");
    const FinPresAlgebra& alg = a.owner;
    std::vector<Poly> powers{alg.normalize(Poly::constant(alg.nvars, Rat(1)))};
    for (int j = 1; j <= bound; ++j)
        powers.push_back(alg.normalize(powers.back() * a.value));

    for (int d = 1; d <= bound; ++d) {
        // monic annihilator of degree d: sum_{j<d} c_j a^j = -a^d
        std::vector<Poly> cols(powers.begin(), powers.begin() + d);
        std::vector<Poly> all = cols;
        all.push_back(powers[static_cast<std::size_t>(d)]);
        auto [mat, rows] = detail::poly_coordinates(all);
        QMat lhs(mat.size(), QVec(static_cast<std::size_t>(d)));
        QVec rhs(mat.size());
        for (std::size_t r = 0; r < mat.size(); ++r) {
            for (int j = 0; j < d; ++j) lhs[r][static_cast<std::size_t>(j)] = mat[r][static_cast<std::size_t>(j)];
            rhs[r] = -mat[r][static_cast<std::size_t>(d)];
        }
        auto sol = solve_linear(lhs, rhs);
        if (!sol) continue;

        Poly q(1);
        q.add_term(Exponent{d}, Rat(1));
        for (int j = 0; j < d; ++j) q.add_term(Exponent{j}, (*sol)[static_cast<std::size_t>(j)]);
        // q'(a)
        Poly qp = q.partial(0);
        Poly u(alg.nvars);
        for (const auto& [e, c] : qp.terms())
            u = u + c * powers[static_cast<std::size_t>(e[0])];
        u = alg.normalize(u);
        // h1 = sum y_j a^j with u * h1 = 1
        std::vector<Poly> prods;
        for (int j = 0; j < d; ++j)
            prods.push_back(alg.normalize(u * powers[static_cast<std::size_t>(j)]));
        std::vector<Poly> withone = prods;
        withone.push_back(alg.normalize(Poly::constant(alg.nvars, Rat(1))));
        auto [pm, prow] = detail::poly_coordinates(withone);
        QMat lhs2(pm.size(), QVec(prods.size()));
        QVec rhs2(pm.size());
        for (std::size_t r = 0; r < pm.size(); ++r) {
            for (std::size_t j = 0; j < prods.size(); ++j) lhs2[r][j] = pm[r][j];
            rhs2[r] = pm[r][prods.size()];
        }
        auto hsol = solve_linear(lhs2, rhs2);
        if (!hsol) return std::nullopt;  // minimal annihilator not separable in A
        Poly h1(alg.nvars);
        for (std::size_t j = 0; j < prods.size(); ++j)
            h1 = h1 + (*hsol)[j] * powers[j];
        return ZeroDiffCertificate{q, alg.normalize(h1)};
    }
    return std::nullopt;
}

// Verify the certificate identities in the algebra.
inline bool verify_zero_diff(const AlgElement& a, const ZeroDiffCertificate& cert) {
    const FinPresAlgebra& alg = a.owner;
    Poly qa(alg.nvars), qpa(alg.nvars);
    for (const auto& [e, c] : cert.annihilator.terms())
        qa = alg.normalize(qa + c * alg.normalize(a.value.pow(e[0])));
    Poly qprime = cert.annihilator.partial(0);
    for (const auto& [e, c] : qprime.terms())
        qpa = alg.normalize(qpa + c * alg.normalize(a.value.pow(e[0])));
    Poly prod = alg.normalize(qpa * cert.h1);
    return qa.is_zero() && prod == Poly::constant(alg.nvars, Rat(1));
}

struct ExactnessResult {
    bool feasible = false;
    std::optional<PolyForm> primitive;  // eta with d eta = omega, when feasible
    bool conclusive = false;            // infeasibility is a complete proof
    int bound = 0;
};

namespace detail {

inline std::vector<IndexTuple> increasing_tuples(int nvars, int len) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < nvars; ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    return out;
}

inline std::vector<Exponent> exponent_box(int nvars, int lo, int hi, bool skip_ideal,
                                          const FinPresAlgebra& a, long total_bound) {
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(nvars), lo);
    for (;;) {
        long tot = 0;
        bool ok = true;
        for (int e : cur) tot += std::max(e, 0);
        if (total_bound >= 0 && tot > total_bound) ok = false;
        if (ok && skip_ideal && a.exponent_in_ideal(cur)) ok = false;
        if (ok) out.push_back(cur);
        int i = 0;
        while (i < nvars && cur[static_cast<std::size_t>(i)] == hi) {
            cur[static_cast<std::size_t>(i)] = lo;
            ++i;
        }
        if (i == nvars) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Candidate monomial support for primitives at bound D, per presentation kind.
inline std::vector<Exponent> candidate_exponents(const FinPresAlgebra& a, int bound) {
    switch (a.kind) {
        case AlgKind::Polynomial:
            return exponent_box(a.nvars, 0, bound, false, a, bound);
        case AlgKind::Laurent:
            return exponent_box(a.nvars, -bound, bound, false, a, -1);
        case AlgKind::MonomialQuotient:
            return exponent_box(a.nvars, 0, bound, true, a, bound);
        case AlgKind::UnivariateQuotient:
            return exponent_box(a.nvars, 0, std::max(uni_degree(a.modulus) - 1, 0), false, a, -1);
    }
    return {};
}

inline std::map<std::pair<Exponent, IndexTuple>, Rat> form_coords(const PolyForm& f) {
    std::map<std::pair<Exponent, IndexTuple>, Rat> out;
    for (const auto& [idx, coeff] : f.terms())
        for (const auto& [e, c] : coeff.terms()) out[{e, idx}] = c;
    return out;
}

}  // namespace detail

// Search for eta with d eta = omega over the bounded coefficient space. For a
// multidegree-homogeneous Laurent target the matching graded block is finite
// and the verdict is conclusive.
inline ExactnessResult truncated_exactness_solve(const AlgForm& omega, int bound,
                                                 bool use_graded_block = true) {
    const FinPresAlgebra& a = omega.owner;
    if (!alg_d(omega).rep.is_zero())
        throw std::invalid_argument("truncated_exactness_solve: form is not closed");
    int n = omega.rep.degree();
    if (n == 0) throw std::invalid_argument("truncated_exactness_solve: degree-0 target");

    ExactnessResult res;
    res.bound = bound;

    std::vector<std::pair<Exponent, IndexTuple>> unknowns;
    bool homogeneous = false;
    Exponent target_mdeg;
    if (use_graded_block && a.kind == AlgKind::Laurent && !omega.rep.is_zero()) {
        homogeneous = true;
        bool first = true;
        for (const auto& [idx, coeff] : omega.rep.terms())
            for (const auto& [e, c] : coeff.terms()) {
                Exponent m = detail::combined_multidegree(e, idx);
                if (first) { target_mdeg = m; first = false; }
                else if (m != target_mdeg) homogeneous = false;
            }
    }

    auto tuples = detail::increasing_tuples(a.nvars, n - 1);
    if (homogeneous) {
        // graded block: one coefficient monomial per index tuple
        for (const auto& t : tuples) {
            Exponent gamma = target_mdeg;
            for (int i : t) gamma[static_cast<std::size_t>(i)] -= 1;
            unknowns.emplace_back(gamma, t);
        }
        res.conclusive = true;  // d preserves multidegree, the block is everything
    } else {
        for (const auto& e : detail::candidate_exponents(a, bound))
            for (const auto& t : tuples) unknowns.emplace_back(e, t);
    }

    // assemble d(unknown basis) in joint coordinates
    std::vector<std::map<std::pair<Exponent, IndexTuple>, Rat>> cols;
    std::map<std::pair<Exponent, IndexTuple>, std::size_t> row_of;
    for (const auto& [e, t] : unknowns) {
        PolyForm b(a.nvars, n - 1);
        Poly mono(a.nvars);
        mono.add_term(e, Rat(1));
        b.add_term(t, mono);
        cols.push_back(detail::form_coords(AlgForm::normalize(a, form_d(AlgForm::normalize(a, b)))));
        for (const auto& [key, c] : cols.back()) row_of.emplace(key, 0);
    }
    auto target = detail::form_coords(omega.rep);
    for (const auto& [key, c] : target) row_of.emplace(key, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : row_of) idx = r++;

    QMat lhs = zero_matrix(row_of.size(), unknowns.size());
    QVec rhs(row_of.size(), Rat(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [key, c] : cols[j]) lhs[row_of.at(key)][j] = c;
    for (const auto& [key, c] : target) rhs[row_of.at(key)] = c;

    auto sol = solve_linear(lhs, rhs);
    if (!sol) return res;
    res.feasible = true;
    PolyForm eta(a.nvars, n - 1);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        if ((*sol)[j].is_zero()) continue;
        Poly mono(a.nvars);
        mono.add_term(unknowns[j].first, (*sol)[j]);
        eta.add_term(unknowns[j].second, mono);
    }
    res.primitive = eta;
    return res;
}

// F_1..F_n Laurent with sum x_i dF_i/dx_i = c, exponents in [-D, D]^n. The
// operator scales the monomial x^m in slot i by m_i, so the system is diagonal
// per monomial and solved exactly block by block.
struct EulerResult {
    bool feasible = false;
    std::vector<Poly> solution;
};

inline EulerResult euler_equation_solve(int n, const Rat& c, int bound) {
    if (n < 0) throw std::invalid_argument("euler_equation_solve: negative variable count");
    EulerResult res;
    std::vector<Poly> f(static_cast<std::size_t>(n), Poly(n));
    FinPresAlgebra laur = FinPresAlgebra::laurent(n);
    for (const auto& m : detail::exponent_box(n, -bound, bound, false, laur, -1)) {
        Rat target = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; }) ? c : Rat(0);
        // solve sum_i m_i * F_i[m] = target
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (m[static_cast<std::size_t>(i)] != 0) { pick = i; break; }
        if (pick < 0) {
            if (!target.is_zero()) return res;  // the zero row: 0 = c is unsolvable
            continue;
        }
        if (!target.is_zero())
            f[static_cast<std::size_t>(pick)].add_term(m, target / Rat(m[static_cast<std::size_t>(pick)]));
    }
    if (n == 0 && !c.is_zero()) return res;
    res.feasible = true;
    res.solution = std::move(f);
    return res;
}

// omega = dx_1/x_1 ^ ... ^ dx_n/x_n in the Laurent algebra.
inline AlgForm torus_witness(int n) {
    if (n < 1) throw std::invalid_argument("torus_witness: n must be >= 1");
    FinPresAlgebra a = FinPresAlgebra::laurent(n);
    PolyForm f(n, n);
    Poly coeff(n);
    coeff.add_term(Exponent(static_cast<std::size_t>(n), -1), Rat(1));
    IndexTuple all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    f.add_term(all, coeff);
    return AlgForm(a, f);
}

// xi: pull an algebraic form back through an affine chain lying in the real
// spectrum and integrate. Containment is certified symbolically, not sampled.
inline Rat xi_evaluate(const FinPresAlgebra& a, const AlgForm& omega, const AffineChain& chain) {
    if (omega.owner != a) throw std::invalid_argument("xi_evaluate: algebra mismatch");
    if (chain.ambient_dim != a.nvars)
        throw std::invalid_argument("xi_evaluate: chain must live in the generator chart");
    for (const auto& [idx, coeff] : omega.rep.terms())
        if (!coeff.is_polynomial())
            throw std::invalid_argument(
                "xi_evaluate: Laurent coefficients with negative exponents are not integrable "
                "over affine chains");
    chain.check();
    Rat total = 0;
    for (const auto& term : chain.terms) {
        for (const auto& v : term.vertices)
            if (!is_point(a, v))
                throw std::invalid_argument("xi_evaluate: simplex vertex is not a point of spec_R");
        AffineMap par = AffineChain::parametrization(term);
        auto comps = par.coordinate_polys();
        switch (a.kind) {
            case AlgKind::Polynomial:
                break;
            case AlgKind::MonomialQuotient: {
                QVec bary(static_cast<std::size_t>(a.nvars), Rat(0));
                for (const auto& v : term.vertices)
                    for (std::size_t i = 0; i < bary.size(); ++i)
                        bary[i] += v[i] / Rat(static_cast<int>(term.vertices.size()));
                if (!is_point(a, bary))
                    throw std::invalid_argument("xi_evaluate: barycenter is not a point of spec_R");
                for (const auto& g : a.ideal_monomials) {
                    Poly rel = Poly::constant(static_cast<int>(par.n_in()), Rat(1));
                    for (std::size_t i = 0; i < g.size(); ++i)
                        rel = rel * comps[i].pow(g[i]);
                    if (!rel.is_zero())
                        throw std::invalid_argument(
                            "xi_evaluate: simplex does not lie in the variety (symbolic residual)");
                }
                break;
            }
            case AlgKind::Laurent:
                // affine coordinate functions: nonvanishing on the simplex iff
                // all vertex values share a strict sign
                for (int i = 0; i < a.nvars; ++i) {
                    bool pos = true, neg = true;
                    for (const auto& v : term.vertices) {
                        if (v[static_cast<std::size_t>(i)] <= 0) pos = false;
                        if (v[static_cast<std::size_t>(i)] >= 0) neg = false;
                    }
                    if (!pos && !neg)
                        throw std::invalid_argument(
                            "xi_evaluate: coordinate may vanish on the simplex");
                }
                break;
            case AlgKind::UnivariateQuotient: {
                Poly rel = a.modulus.substitute(comps);
                if (!rel.is_zero())
                    throw std::invalid_argument(
                        "xi_evaluate: simplex does not lie in the variety (symbolic residual)");
                break;
            }
        }
        total += term.coeff * integrate_simplex(form_pullback_affine(omega.rep, par));
    }
    return total;
}

}  // namespace derham

#endif
