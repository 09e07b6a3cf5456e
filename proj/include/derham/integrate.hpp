#ifndef DERHAM_INTEGRATE_HPP
#define DERHAM_INTEGRATE_HPP

#include "derham/chain.hpp"
#include "derham/form.hpp"

namespace derham {

// Integral of a top-degree polynomial form over the standard k-simplex
// {t >= 0, sum t <= 1}, with dt_1^...^dt_k positive. Termwise Dirichlet
// formula: integral of t^a equals (prod a_i!) / (k + |a|)!.
inline Rat integrate_simplex(const PolyForm& w) {
    int k = w.degree();
    if (w.num_vars() != k)
        throw std::invalid_argument("integrate_simplex: form degree must equal variable count");
    if (w.is_zero()) return Rat(0);
    Rat total = 0;
    for (const auto& [idx, coeff] : w.terms()) {
        // the only increasing k-tuple in k variables is (0,...,k-1)
        for (const auto& [e, c] : coeff.terms()) {
            Int num = 1;
            long sum = 0;
            for (int a : e) {
                if (a < 0)
                    throw std::invalid_argument("integrate_simplex: negative exponent");
                num *= factorial(a);
                sum += a;
            }
            total += c * Rat(num, factorial(k + static_cast<int>(sum)));
        }
    }
    return total;
}

// <w, c> = sum coeff * integral over the standard simplex of the pullback.
inline Rat pair_form_chain(const PolyForm& w, const AffineChain& c) {
    c.check();
    if (w.num_vars() != c.ambient_dim)
        throw std::invalid_argument("pair_form_chain: ambient dimension mismatch");
    if (w.degree() != c.degree)
        throw std::invalid_argument("pair_form_chain: degree mismatch");
    Rat total = 0;
    for (const auto& t : c.terms)
        total += t.coeff *
                 integrate_simplex(form_pullback_affine(w, AffineChain::parametrization(t)));
    return total;
}

struct StokesReport {
    Rat integral_d_form;      // <dw, c>
    Rat integral_boundary;    // <w, del c>
    bool equal = false;
};

inline StokesReport stokes_check(const PolyForm& w, const AffineChain& c) {
    if (c.degree != w.degree() + 1)
        throw std::invalid_argument("stokes_check: chain degree must be form degree + 1");
    StokesReport r;
    r.integral_d_form = pair_form_chain(form_d(w), c);
    r.integral_boundary = pair_form_chain(w, boundary(c));
    r.equal = (r.integral_d_form == r.integral_boundary);
    return r;
}

}  // namespace derham

#endif
