#ifndef DERHAM_GENERATE_HPP
#define DERHAM_GENERATE_HPP

#include <random>

#include "derham/chain.hpp"
#include "derham/form.hpp"

namespace derham {

// Seeded, deterministic generators for the randomized property suites. All
// draws go through one engine so a seed pins the whole run.
struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Rat rational(int max_abs_num = 9, int max_den = 4) {
        int num = uniform_int(-max_abs_num, max_abs_num);
        int den = uniform_int(1, max_den);
        return Rat(num, den);
    }

    Rat nonzero_rational(int max_abs_num = 9, int max_den = 4) {
        for (;;) {
            Rat r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Poly poly(int nvars, int max_degree, int max_terms = 5, bool laurent = false) {
        Poly p(nvars);
        int nterms = uniform_int(0, max_terms);
        for (int t = 0; t < nterms; ++t) {
            Exponent e(static_cast<std::size_t>(nvars));
            int budget = max_degree;
            for (int i = 0; i < nvars; ++i) {
                int lo = laurent ? -max_degree : 0;
                e[static_cast<std::size_t>(i)] = uniform_int(lo, budget);
                budget -= std::max(e[static_cast<std::size_t>(i)], 0);
            }
            p.add_term(e, rational());
        }
        return p;
    }

    PolyForm form(int nvars, int degree, int max_coeff_degree, int max_terms = 4,
                  bool laurent = false) {
        PolyForm f(nvars, degree);
        if (degree > nvars) return f;
        int nterms = uniform_int(0, max_terms);
        for (int t = 0; t < nterms; ++t) {
            // random strictly increasing index tuple
            std::vector<int> all(static_cast<std::size_t>(nvars));
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            IndexTuple idx(all.begin(), all.begin() + degree);
            std::sort(idx.begin(), idx.end());
            f.add_term(idx, poly(nvars, max_coeff_degree, 3, laurent));
        }
        return f;
    }

    QVec point(int dim, int max_abs = 4) {
        QVec v;
        for (int i = 0; i < dim; ++i) v.push_back(rational(max_abs, 3));
        return v;
    }

    AffineChain chain(int ambient_dim, int degree, int max_terms = 3) {
        AffineChain c;
        c.ambient_dim = ambient_dim;
        c.degree = degree;
        int nterms = uniform_int(1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            AffineChain::Term term;
            term.coeff = nonzero_rational(4, 3);
            for (int v = 0; v <= degree; ++v) term.vertices.push_back(point(ambient_dim));
            c.terms.push_back(std::move(term));
        }
        return c;
    }

    AffineMap affine_map(int n_in, int n_out) {
        QMat m = zero_matrix(static_cast<std::size_t>(n_out), static_cast<std::size_t>(n_in));
        for (auto& row : m)
            for (auto& x : row) x = rational(3, 2);
        QVec off;
        for (int i = 0; i < n_out; ++i) off.push_back(rational(3, 2));
        return {std::move(m), std::move(off)};
    }
};

}  // namespace derham

#endif
