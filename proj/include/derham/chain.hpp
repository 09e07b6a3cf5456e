#ifndef DERHAM_CHAIN_HPP
#define DERHAM_CHAIN_HPP

#include <cmath>

#include "derham/affine.hpp"

namespace derham {

// Formal Q-linear combination of affine k-simplices, given by ordered vertex
// tuples. Degenerate tuples are allowed; they integrate to zero.
struct AffineChain {
    struct Term {
        Rat coeff;
        std::vector<QVec> vertices;  // k+1 points in R^m
    };

    int ambient_dim = 0;
    int degree = 0;
    std::vector<Term> terms;

    void check() const {
        for (const auto& t : terms) {
            if (t.vertices.size() != static_cast<std::size_t>(degree) + 1)
                throw std::invalid_argument("AffineChain: wrong vertex count for degree");
            for (const auto& v : t.vertices)
                if (v.size() != static_cast<std::size_t>(ambient_dim))
                    throw std::invalid_argument("AffineChain: vertex dimension mismatch");
        }
    }

    static AffineChain single(const Rat& c, const std::vector<QVec>& verts) {
        AffineChain ch;
        ch.ambient_dim = verts.empty() ? 0 : static_cast<int>(verts[0].size());
        ch.degree = static_cast<int>(verts.size()) - 1;
        ch.terms.push_back({c, verts});
        ch.check();
        return ch;
    }

    // Parametrization of one term: standard simplex -> ambient.
    static AffineMap parametrization(const Term& t) {
        std::size_t m = t.vertices[0].size(), q = t.vertices.size() - 1;
        QMat a = zero_matrix(m, q);
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t i = 0; i < m; ++i) a[i][j] = t.vertices[j + 1][i] - t.vertices[0][i];
        return {std::move(a), t.vertices[0]};
    }
};

// Alternating face sum: del sigma = sum (-1)^i (omit vertex i).
inline AffineChain boundary(const AffineChain& c) {
    AffineChain b;
    b.ambient_dim = c.ambient_dim;
    b.degree = c.degree - 1;
    if (c.degree == 0) return b;  // augmentation not taken
    for (const auto& t : c.terms) {
        for (std::size_t i = 0; i < t.vertices.size(); ++i) {
            AffineChain::Term face;
            face.coeff = (i % 2 == 0) ? t.coeff : -t.coeff;
            for (std::size_t j = 0; j < t.vertices.size(); ++j)
                if (j != i) face.vertices.push_back(t.vertices[j]);
            b.terms.push_back(std::move(face));
        }
    }
    return b;
}

struct MassReport {
    std::vector<Rat> squared_volumes;  // per term: Gram determinant / (k!)^2
    std::vector<Rat> abs_coeffs;
    double mass = 0.0;  // sum |coeff| sqrt(squared volume), the only float in the library
};

inline Rat gram_determinant(const std::vector<QVec>& verts) {
    std::size_t q = verts.size() - 1, m = verts[0].size();
    QMat d = zero_matrix(m, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < m; ++i) d[i][j] = verts[j + 1][i] - verts[0][i];
    QMat g = mat_mul(transpose(d), d);
    // exact determinant by elimination
    Rat det = 1;
    std::size_t n = g.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && g[p][c].is_zero()) ++p;
        if (p == n) return Rat(0);
        if (p != c) { std::swap(g[p], g[c]); det = -det; }
        det *= g[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rat f = g[i][c] / g[c][c];
            for (std::size_t j = c; j < n; ++j) g[i][j] -= f * g[c][j];
        }
    }
    return det;
}

// Lebesgue k-measure data of each simplex; the summed mass is reported as a
// float since sqrt leaves Q.
inline MassReport chain_mass(const AffineChain& c) {
    c.check();
    MassReport r;
    Int kfact = factorial(c.degree);
    for (const auto& t : c.terms) {
        Rat sq = c.degree == 0 ? Rat(1) : gram_determinant(t.vertices) / Rat(kfact * kfact);
        r.squared_volumes.push_back(sq);
        r.abs_coeffs.push_back(abs(t.coeff));
        r.mass += rat_double(abs(t.coeff)) * std::sqrt(rat_double(sq));
    }
    return r;
}

// Upper bound min(|c|, |c - del beta| + |beta|) for the flat seminorm; the
// true infimum over all beta is not computed.
inline double flat_seminorm_upper_bound(const AffineChain& c,
                                        const std::optional<AffineChain>& beta = std::nullopt) {
    double best = chain_mass(c).mass;
    if (beta) {
        AffineChain diff = c;
        AffineChain db = boundary(*beta);
        for (auto t : db.terms) {
            t.coeff = -t.coeff;
            diff.terms.push_back(std::move(t));
        }
        best = std::min(best, chain_mass(diff).mass + chain_mass(*beta).mass);
    }
    return best;
}

}  // namespace derham

#endif
