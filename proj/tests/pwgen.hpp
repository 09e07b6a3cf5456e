#ifndef TESTS_PWGEN_HPP
#define TESTS_PWGEN_HPP

#include "derham/generate.hpp"
#include "derham/piecewise.hpp"

namespace pwgen {

using namespace derham;

// Random face-compatible degree-0 form: a polynomial in the hat functions.
inline PiecewiseForm random_pw0(Gen& gen, const Polyhedron& k) {
    auto verts = used_vertices(k);
    PiecewiseForm w = PiecewiseForm::constant(k, gen.rational(3, 2));
    int nterms = gen.uniform_int(1, 3);
    for (int t = 0; t < nterms; ++t) {
        int v = verts[static_cast<std::size_t>(
            gen.uniform_int(0, static_cast<int>(verts.size()) - 1))];
        PiecewiseForm term = hat_function(k, v);
        if (gen.uniform_int(0, 1) == 1) {
            int v2 = verts[static_cast<std::size_t>(
                gen.uniform_int(0, static_cast<int>(verts.size()) - 1))];
            term = pw_wedge(term, hat_function(k, v2));
        }
        w = pw_add(w, pw_scale(gen.nonzero_rational(3, 2), term));
    }
    return w;
}

// Random face-compatible q-form: sums of (degree-0) * Whitney(indicator).
inline PiecewiseForm random_pw(Gen& gen, const Polyhedron& k, int q) {
    if (q == 0) return random_pw0(gen, k);
    auto simps = simplices_of_dim(k, q);
    PiecewiseForm w = PiecewiseForm::zero(k, q);
    if (simps.empty()) return w;
    int nterms = gen.uniform_int(1, 2);
    for (int t = 0; t < nterms; ++t) {
        const Simplex& s = simps[static_cast<std::size_t>(
            gen.uniform_int(0, static_cast<int>(simps.size()) - 1))];
        PiecewiseForm basic = whitney(SimplicialCochain::indicator(k, s));
        w = pw_add(w, pw_wedge(random_pw0(gen, k), basic));
    }
    return w;
}

inline int top_dim(const Polyhedron& k) {
    int d = 0;
    for (const auto& s : maximal_simplices(k)) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

}  // namespace pwgen

#endif
