#ifndef DERHAM_PIECEWISE_HPP
#define DERHAM_PIECEWISE_HPP

#include "derham/cochain.hpp"
#include "derham/integrate.hpp"
#include "derham/rectilinear.hpp"

namespace derham {

// Family of polynomial forms, one per maximal simplex, written in the ambient
// coordinates and interpreted on the affine hull of each simplex. All
// comparisons pull back to the simplex parametrization: two ambient
// representatives that restrict equally are the same form.
struct PiecewiseForm {
    Polyhedron base;
    int degree = 0;
    std::map<Simplex, PolyForm> pieces;  // keyed by maximal simplex

    static PiecewiseForm zero(const Polyhedron& k, int degree) {
        PiecewiseForm w{k, degree, {}};
        for (const auto& a : maximal_simplices(k))
            w.pieces.emplace(a, PolyForm(k.ambient_dim, degree));
        return w;
    }

    static PiecewiseForm constant(const Polyhedron& k, const Rat& c) {
        PiecewiseForm w = zero(k, 0);
        for (auto& [a, f] : w.pieces)
            f = PolyForm::from_function(Poly::constant(k.ambient_dim, c));
        return w;
    }

    const PolyForm& piece(const Simplex& a) const {
        auto it = pieces.find(a);
        if (it == pieces.end())
            throw std::invalid_argument("PiecewiseForm: no piece for simplex");
        return it->second;
    }

    // Restriction to the canonical parametrization of a simplex (not
    // necessarily maximal; any containing maximal simplex gives the piece).
    PolyForm intrinsic(const Simplex& s) const {
        for (const auto& [a, f] : pieces)
            if (std::includes(a.begin(), a.end(), s.begin(), s.end()))
                return form_pullback_affine(f, param_map(base, s));
        throw std::invalid_argument("PiecewiseForm: simplex not contained in any piece");
    }
};

inline void check_same_base(const PiecewiseForm& a, const PiecewiseForm& b) {
    if (a.base != b.base) throw std::invalid_argument("PiecewiseForm: base mismatch");
}

inline bool pw_equal(const PiecewiseForm& a, const PiecewiseForm& b) {
    check_same_base(a, b);
    if (a.degree != b.degree) return false;
    for (const auto& [s, f] : a.pieces)
        if (form_pullback_affine(f, param_map(a.base, s)) !=
            form_pullback_affine(b.piece(s), param_map(b.base, s)))
            return false;
    return true;
}

inline bool pw_is_zero(const PiecewiseForm& a) {
    for (const auto& [s, f] : a.pieces)
        if (!form_pullback_affine(f, param_map(a.base, s)).is_zero()) return false;
    return true;
}

inline PiecewiseForm pw_map(const PiecewiseForm& a, int degree,
                            const std::function<PolyForm(const PolyForm&)>& op) {
    PiecewiseForm r{a.base, degree, {}};
    for (const auto& [s, f] : a.pieces) r.pieces.emplace(s, op(f));
    return r;
}

inline PiecewiseForm pw_d(const PiecewiseForm& a) {
    return pw_map(a, a.degree + 1, [](const PolyForm& f) { return form_d(f); });
}

inline PiecewiseForm pw_wedge(const PiecewiseForm& a, const PiecewiseForm& b) {
    check_same_base(a, b);
    PiecewiseForm r{a.base, a.degree + b.degree, {}};
    for (const auto& [s, f] : a.pieces) r.pieces.emplace(s, form_wedge(f, b.piece(s)));
    return r;
}

inline PiecewiseForm pw_add(const PiecewiseForm& a, const PiecewiseForm& b) {
    check_same_base(a, b);
    PiecewiseForm r{a.base, a.degree, {}};
    for (const auto& [s, f] : a.pieces) r.pieces.emplace(s, f + b.piece(s));
    return r;
}

inline PiecewiseForm pw_sub(const PiecewiseForm& a, const PiecewiseForm& b) {
    check_same_base(a, b);
    PiecewiseForm r{a.base, a.degree, {}};
    for (const auto& [s, f] : a.pieces) r.pieces.emplace(s, f - b.piece(s));
    return r;
}

inline PiecewiseForm pw_scale(const Rat& c, const PiecewiseForm& a) {
    return pw_map(a, a.degree, [&](const PolyForm& f) { return c * f; });
}

struct PwValidity {
    bool valid = true;
    std::vector<std::pair<Simplex, Simplex>> violating_pairs;
};

// Face compatibility: pieces of any two maximal simplices agree after pullback
// to the parametrization of the shared face.
inline PwValidity pw_validate(const PiecewiseForm& w) {
    PwValidity rep;
    std::vector<Simplex> maxs = maximal_simplices(w.base);
    for (std::size_t i = 0; i < maxs.size(); ++i)
        for (std::size_t j = i + 1; j < maxs.size(); ++j) {
            Simplex shared;
            std::set_intersection(maxs[i].begin(), maxs[i].end(), maxs[j].begin(),
                                  maxs[j].end(), std::back_inserter(shared));
            if (shared.empty()) continue;
            AffineMap pf = param_map(w.base, shared);
            if (form_pullback_affine(w.piece(maxs[i]), pf) !=
                form_pullback_affine(w.piece(maxs[j]), pf)) {
                rep.valid = false;
                rep.violating_pairs.emplace_back(maxs[i], maxs[j]);
            }
        }
    return rep;
}

// Barycentric coordinate functions of a simplex as ambient affine polynomials
// (normal-equation extension off the affine hull), ascending vertex order.
inline std::vector<Poly> barycentric_polys(const Polyhedron& k, const Simplex& s) {
    AffineMap inv = param_inverse(k, s);
    std::vector<Poly> t = inv.coordinate_polys();
    std::vector<Poly> lambda;
    Poly l0 = Poly::constant(k.ambient_dim, Rat(1));
    for (const auto& ti : t) l0 = l0 - ti;
    lambda.push_back(std::move(l0));
    for (auto& ti : t) lambda.push_back(std::move(ti));
    return lambda;
}

// Piecewise-linear hat function of a vertex.
inline PiecewiseForm hat_function(const Polyhedron& k, int v) {
    PiecewiseForm w = PiecewiseForm::zero(k, 0);
    for (auto& [a, f] : w.pieces) {
        auto pos = std::lower_bound(a.begin(), a.end(), v);
        if (pos == a.end() || *pos != v) continue;
        auto lambda = barycentric_polys(k, a);
        f = PolyForm::from_function(lambda[static_cast<std::size_t>(pos - a.begin())]);
    }
    return w;
}

struct PartitionOfUnity {
    Polyhedron base;
    std::map<int, PiecewiseForm> functions;  // vertex -> hat
};

// The barycentric hats: sum is exactly 1, each supported on the vertex star.
inline PartitionOfUnity pou_from_stars(const Polyhedron& k) {
    PartitionOfUnity p{k, {}};
    for (int v : used_vertices(k)) p.functions.emplace(v, hat_function(k, v));
    return p;
}

// Whitney realization of a simplicial cochain: for sigma = [v_0..v_k],
//   W_sigma = k! sum_j (-1)^j lambda_j d lambda_0 ^ ... (omit j) ... ^ d lambda_k,
// supported on the maximal simplices containing sigma.
inline PiecewiseForm whitney(const SimplicialCochain& c) {
    const Polyhedron& k = c.base;
    PiecewiseForm w = PiecewiseForm::zero(k, c.degree);
    for (auto& [a, f] : w.pieces) {
        auto lambda = barycentric_polys(k, a);
        for (const auto& [sigma, val] : c.values) {
            if (!std::includes(a.begin(), a.end(), sigma.begin(), sigma.end())) continue;
            // positions of sigma's vertices within a
            std::vector<std::size_t> pos;
            for (int v : sigma)
                pos.push_back(static_cast<std::size_t>(
                    std::lower_bound(a.begin(), a.end(), v) - a.begin()));
            std::vector<PolyForm> dl;
            for (std::size_t p : pos)
                dl.push_back(form_d(PolyForm::from_function(lambda[p])));
            PolyForm ws(k.ambient_dim, c.degree);
            for (std::size_t j = 0; j < pos.size(); ++j) {
                PolyForm term = PolyForm::from_function(lambda[pos[j]]);
                for (std::size_t i = 0; i < pos.size(); ++i)
                    if (i != j) term = form_wedge(term, dl[i]);
                ws = (j % 2 == 0) ? ws + term : ws - term;
            }
            f = f + (val * Rat(factorial(c.degree))) * ws;
        }
    }
    return w;
}

// Cochain-level de Rham map: integrate over every oriented k-simplex.
inline SimplicialCochain derham_map(const PiecewiseForm& w) {
    SimplicialCochain c = SimplicialCochain::zero(w.base, w.degree);
    for (const auto& s : simplices_of_dim(w.base, w.degree)) {
        Rat v = integrate_simplex(w.intrinsic(s));
        if (!v.is_zero()) c.values[s] = v;
    }
    return c;
}

// Contravariance of the piecewise model: pull a form on the target back along
// a rectilinear map, simplex by simplex.
inline PiecewiseForm rectilinear_pullback(const PiecewiseForm& w, const RectilinearMap& f) {
    if (f.target != w.base)
        throw std::invalid_argument("rectilinear_pullback: base/target mismatch");
    PiecewiseForm r{f.source, w.degree, {}};
    for (const auto& a : maximal_simplices(f.source)) {
        auto t = f.assigned_simplex(a);
        if (!t) throw std::invalid_argument("rectilinear_pullback: no assignment for simplex");
        r.pieces.emplace(a, form_pullback_affine(w.piece(*t), f.affine_on(a)));
    }
    return r;
}

// Evaluation of a degree-0 form at a point of |K|.
inline Rat pw_evaluate(const PiecewiseForm& w, const QVec& x) {
    if (w.degree != 0) throw std::invalid_argument("pw_evaluate: degree must be 0");
    for (const auto& [a, f] : w.pieces)
        if (point_in_simplex(w.base, a, x)) {
            if (f.is_zero()) return Rat(0);
            return f.terms().begin()->second.eval(x);
        }
    throw std::invalid_argument("pw_evaluate: point outside |K|");
}

namespace detail {

inline Poly integrate_t(const Poly& p, int tvar) {
    // definite integral over tvar in [0,1]; drops the variable
    Poly r(p.num_vars() - 1);
    for (const auto& [e, c] : p.terms()) {
        Exponent out;
        int et = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == tvar) et = e[i];
            else out.push_back(e[i]);
        }
        r.add_term(out, c / Rat(et + 1));
    }
    return r;
}

// Integration operator of the straight-line homotopy on one simplex:
// -int_0^1 iota_dt (H* w) dt, where H(x,t) = (1-t) f0(x) + t f1(x).
// With this sign, f0* w - f1* w = d h(w) + h(dw).
inline PolyForm cartan_operator(const PolyForm& target_piece, const AffineMap& f0,
                                const AffineMap& f1, int src_vars) {
    int nv = src_vars + 1;  // ambient source variables plus t (last index)
    Poly t = Poly::variable(nv, src_vars);
    Poly one_minus_t = Poly::constant(nv, Rat(1)) - t;
    auto c0 = f0.coordinate_polys(), c1 = f1.coordinate_polys();
    std::vector<Poly> comps;
    for (std::size_t j = 0; j < c0.size(); ++j) {
        // lift the affine components to the (x, t) chart
        Poly a0(nv), a1(nv);
        for (const auto& [e, c] : c0[j].terms()) {
            Exponent ee = e;
            ee.push_back(0);
            a0.add_term(ee, c);
        }
        for (const auto& [e, c] : c1[j].terms()) {
            Exponent ee = e;
            ee.push_back(0);
            a1.add_term(ee, c);
        }
        comps.push_back(one_minus_t * a0 + t * a1);
    }
    PolyForm pulled = form_pullback(target_piece, comps, nv);
    PolyForm h(src_vars, target_piece.degree() - 1);
    for (const auto& [idx, coeff] : pulled.terms()) {
        if (idx.empty() || idx.back() != src_vars) continue;  // no dt factor
        IndexTuple j(idx.begin(), idx.end() - 1);
        int sign = (j.size() % 2 == 0) ? 1 : -1;  // move dt to the front
        h.add_term(j, Rat(-sign) * integrate_t(coeff, src_vars));
    }
    return h;
}

}  // namespace detail

// Homotopy operator of the straight-line homotopy between two adjacent
// rectilinear maps: f0* w - f1* w = pw_d(h(w)) + h(pw_d(w)) exactly.
inline PiecewiseForm adjacency_homotopy(const RectilinearMap& f0, const RectilinearMap& f1,
                                        const PiecewiseForm& w) {
    if (!are_adjacent(f0, f1))
        throw std::invalid_argument("adjacency_homotopy: maps are not adjacent");
    if (f0.target != w.base)
        throw std::invalid_argument("adjacency_homotopy: form not on the target");
    if (w.degree == 0) return PiecewiseForm::zero(f0.source, 0);  // nothing below degree 0

    PiecewiseForm h{f0.source, w.degree - 1, {}};
    for (const auto& a : maximal_simplices(f0.source)) {
        // one target simplex holding both images; exists by adjacency
        std::optional<Simplex> hold;
        for (const auto& t : maximal_simplices(f0.target)) {
            bool ok = true;
            for (int v : a)
                if (!point_in_simplex(f0.target, t, f0.image_of_vertex(v)) ||
                    !point_in_simplex(f0.target, t, f1.image_of_vertex(v))) {
                    ok = false;
                    break;
                }
            if (ok) { hold = t; break; }
        }
        if (!hold) throw std::logic_error("adjacency_homotopy: adjacency certificate lost");
        h.pieces.emplace(a, detail::cartan_operator(w.piece(*hold), f0.affine_on(a),
                                                    f1.affine_on(a), f0.source.ambient_dim));
    }
    return h;
}

// Poincare lemma on a star: eta with pw_d(eta) = w for closed w of positive
// degree, via the contraction to the center.
inline PiecewiseForm star_contraction_exactness(const Star& s, const PiecewiseForm& w) {
    if (!is_star(s.base, s.center))
        throw std::invalid_argument("star_contraction_exactness: not a star");
    if (w.degree < 1)
        throw std::invalid_argument("star_contraction_exactness: degree must be >= 1");
    if (!pw_is_zero(pw_d(w)))
        throw std::invalid_argument("star_contraction_exactness: form is not closed");
    RectilinearMap id = RectilinearMap::identity(s.base);
    RectilinearMap col = RectilinearMap::collapse_to_vertex(s.base, s.center);
    // collapse* w = 0 in positive degree, so w = d h(w)
    return adjacency_homotopy(id, col, w);
}

}  // namespace derham

#endif
