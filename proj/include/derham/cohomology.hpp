#ifndef DERHAM_COHOMOLOGY_HPP
#define DERHAM_COHOMOLOGY_HPP

#include "derham/algebra.hpp"

namespace derham {

// Rank with a fraction-free cross-check; the two eliminations are independent
// code paths, so agreement guards against arithmetic slips.
inline long checked_rank(const QMat& m) {
    long r = rank(m);
    if (bareiss_rank(m) != r) throw std::runtime_error("checked_rank: elimination mismatch");
    return r;
}

// A finite complex of Q-vector spaces C^0 -> C^1 -> ... given by matrices.
struct CochainComplexQ {
    std::vector<long> dims;  // dim C^k, k = 0..N
    std::vector<QMat> d;     // d[k]: C^k -> C^{k+1}, k = 0..N-1
};

struct BettiReport {
    std::vector<long> dims;
    std::vector<long> rank_d;  // rank of d_k, k = 0..N-1
    std::vector<long> betti;   // k = 0..N
    int truncation_bound = -1;  // -1 when the complex is not truncated
    bool stabilized = true;     // betti unchanged at bound+1 (when checked)
};

inline BettiReport betti_of_complex(const CochainComplexQ& c) {
    std::size_t n = c.dims.size();
    if (c.d.size() + 1 != n) throw std::invalid_argument("betti_of_complex: shape mismatch");
    for (std::size_t k = 0; k + 1 < n; ++k) {
        long rows = static_cast<long>(c.d[k].size());
        long cols = rows ? static_cast<long>(c.d[k][0].size()) : 0;
        if ((rows && rows != c.dims[k + 1]) || (rows && cols != c.dims[k]) ||
            (!rows && c.dims[k + 1] != 0 && c.dims[k] != 0))
            throw std::invalid_argument("betti_of_complex: matrix shape mismatch");
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
        if (c.d[k].empty() || c.d[k + 1].empty()) continue;
        QMat comp = mat_mul(c.d[k + 1], c.d[k]);
        for (const auto& row : comp)
            for (const auto& v : row)
                if (!v.is_zero()) throw std::runtime_error("betti_of_complex: d o d != 0");
    }
    BettiReport r;
    r.dims = c.dims;
    for (std::size_t k = 0; k + 1 < n; ++k)
        r.rank_d.push_back(c.d[k].empty() ? 0 : checked_rank(c.d[k]));
    for (std::size_t k = 0; k < n; ++k) {
        long out = (k + 1 < n) ? r.rank_d[k] : 0;
        long in = (k > 0) ? r.rank_d[k - 1] : 0;
        r.betti.push_back(c.dims[k] - out - in);
    }
    return r;
}

// Simplicial cohomology of the complex over Q.
inline BettiReport simplicial_cohomology(const Polyhedron& k) {
    int n = k.dim();
    if (n < 0) throw std::invalid_argument("simplicial_cohomology: empty complex");
    CochainComplexQ c;
    for (int q = 0; q <= n; ++q)
        c.dims.push_back(static_cast<long>(simplices_of_dim(k, q).size()));
    for (int q = 0; q + 1 <= n; ++q) c.d.push_back(coboundary_matrix(k, q));
    return betti_of_complex(c);
}

namespace detail {

// Monomial basis of intrinsic k-forms on one maximal simplex: pairs (e, I)
// with |e| + k <= bound. d lowers |e| by one and raises k by one, so the
// truncation is d-stable.
struct PwTruncBasis {
    std::vector<Simplex> maxs;
    std::vector<std::vector<std::pair<Exponent, IndexTuple>>> items;  // per simplex
    std::vector<std::size_t> offset;                                  // block start per simplex
    std::vector<std::map<std::pair<Exponent, IndexTuple>, std::size_t>> pos;
    std::size_t total = 0;
};

inline PwTruncBasis pw_trunc_basis(const std::vector<Simplex>& maxs, int deg, int bound) {
    PwTruncBasis b;
    b.maxs = maxs;
    for (const auto& s : maxs) {
        int q = static_cast<int>(s.size()) - 1;
        b.offset.push_back(b.total);
        b.items.emplace_back();
        b.pos.emplace_back();
        if (deg <= q && bound - deg >= 0) {
            FinPresAlgebra poly = FinPresAlgebra::polynomial(q);
            auto tuples = increasing_tuples(q, deg);
            for (const auto& e : exponent_box(q, 0, bound - deg, false, poly, bound - deg))
                for (const auto& t : tuples) b.items.back().emplace_back(e, t);
        }
        for (std::size_t i = 0; i < b.items.back().size(); ++i)
            b.pos.back()[b.items.back()[i]] = i;
        b.total += b.items.back().size();
    }
    return b;
}

// Block-diagonal matrix of d on the per-simplex truncated spaces.
inline QMat pw_trunc_d(const PwTruncBasis& from, const PwTruncBasis& to) {
    QMat m = zero_matrix(to.total, from.total);
    for (std::size_t si = 0; si < from.maxs.size(); ++si) {
        int q = static_cast<int>(from.maxs[si].size()) - 1;
        for (std::size_t j = 0; j < from.items[si].size(); ++j) {
            const auto& [e, idx] = from.items[si][j];
            PolyForm f(q, static_cast<int>(idx.size()));
            Poly mono(q);
            mono.add_term(e, Rat(1));
            f.add_term(idx, mono);
            PolyForm df = form_d(f);
            for (const auto& [di, dc] : df.terms())
                for (const auto& [de, c] : dc.terms()) {
                    auto it = to.pos[si].find({de, di});
                    if (it == to.pos[si].end())
                        throw std::logic_error("pw_trunc_d: image escapes truncation");
                    m[to.offset[si] + it->second][from.offset[si] + j] += c;
                }
        }
    }
    return m;
}

// Columns spanning the compatible subspace: kernel of the face-agreement
// constraints between every pair of maximal simplices sharing a face of
// dimension >= deg (lower-dimensional faces kill k-forms on pullback anyway).
inline std::vector<QVec> pw_compatible_kernel(const Polyhedron& k, const PwTruncBasis& b,
                                              int deg) {
    const auto& maxs = b.maxs;
    // Pairwise agreement on s_i cap s_j, grouped by the shared face: equality
    // is transitive on a fixed face, so one reference simplex per face gives
    // the same solution set with far fewer rows.
    std::set<Simplex> faces;
    for (std::size_t i = 0; i < maxs.size(); ++i)
        for (std::size_t j = i + 1; j < maxs.size(); ++j) {
            Simplex shared;
            std::set_intersection(maxs[i].begin(), maxs[i].end(), maxs[j].begin(),
                                  maxs[j].end(), std::back_inserter(shared));
            if (static_cast<int>(shared.size()) >= deg + 1) faces.insert(std::move(shared));
        }
    QMat constraints;
    for (const auto& shared : faces) {
        std::vector<std::size_t> holders;
        for (std::size_t i = 0; i < maxs.size(); ++i)
            if (std::includes(maxs[i].begin(), maxs[i].end(), shared.begin(), shared.end()))
                holders.push_back(i);
        AffineMap pf = param_map(k, shared);
        auto accumulate = [&](std::size_t block, const AffineMap& inc, const Rat& sgn,
                              std::map<std::pair<Exponent, IndexTuple>, QVec>& rows) {
            int q = static_cast<int>(maxs[block].size()) - 1;
            for (std::size_t c = 0; c < b.items[block].size(); ++c) {
                const auto& [e, idx] = b.items[block][c];
                PolyForm f(q, deg);
                Poly mono(q);
                mono.add_term(e, Rat(1));
                f.add_term(idx, mono);
                PolyForm pb = form_pullback_affine(f, inc);
                for (const auto& [pi, pc] : pb.terms())
                    for (const auto& [pe, cc] : pc.terms()) {
                        auto it = rows.try_emplace({pe, pi}, QVec(b.total, Rat(0))).first;
                        it->second[b.offset[block] + c] += sgn * cc;
                    }
            }
        };
        AffineMap inc_ref = param_inverse(k, maxs[holders[0]]).compose(pf);
        for (std::size_t h = 1; h < holders.size(); ++h) {
            AffineMap inc_h = param_inverse(k, maxs[holders[h]]).compose(pf);
            std::map<std::pair<Exponent, IndexTuple>, QVec> rows;
            accumulate(holders[0], inc_ref, Rat(1), rows);
            accumulate(holders[h], inc_h, Rat(-1), rows);
            for (auto& [key, row] : rows) constraints.push_back(std::move(row));
        }
    }
    if (constraints.empty()) {
        std::vector<QVec> id;
        for (std::size_t c = 0; c < b.total; ++c) {
            QVec v(b.total, Rat(0));
            v[c] = 1;
            id.push_back(std::move(v));
        }
        return id;
    }
    return kernel_basis(constraints);
}

inline BettiReport pw_derham_core(const Polyhedron& k, int bound) {
    int n = k.dim();
    if (n < 0) throw std::invalid_argument("truncated_pw_derham: empty complex");
    auto maxs = maximal_simplices(k);

    std::vector<PwTruncBasis> bases;
    std::vector<QMat> subspaces;  // columns = compatible basis over the big basis
    BettiReport r;
    r.truncation_bound = bound;
    for (int q = 0; q <= n + 1; ++q) bases.push_back(pw_trunc_basis(maxs, q, bound));
    for (int q = 0; q <= n; ++q) {
        auto ker = pw_compatible_kernel(k, bases[static_cast<std::size_t>(q)], q);
        QMat bm = zero_matrix(bases[static_cast<std::size_t>(q)].total, ker.size());
        for (std::size_t c = 0; c < ker.size(); ++c)
            for (std::size_t row = 0; row < ker[c].size(); ++row) bm[row][c] = ker[c][row];
        r.dims.push_back(static_cast<long>(ker.size()));
        subspaces.push_back(std::move(bm));
    }
    for (int q = 0; q < n; ++q) {
        QMat dq = pw_trunc_d(bases[static_cast<std::size_t>(q)],
                             bases[static_cast<std::size_t>(q) + 1]);
        QMat img = mat_mul(dq, subspaces[static_cast<std::size_t>(q)]);
        r.rank_d.push_back(img.empty() ? 0 : checked_rank(img));
    }
    for (int q = 0; q <= n; ++q) {
        long out = (q < n) ? r.rank_d[static_cast<std::size_t>(q)] : 0;
        long in = (q > 0) ? r.rank_d[static_cast<std::size_t>(q) - 1] : 0;
        r.betti.push_back(r.dims[static_cast<std::size_t>(q)] - out - in);
    }
    return r;
}

}  // namespace detail

// Cohomology of the compatible piecewise polynomial complex truncated at
// per-simplex total degree <= bound. With check_stabilization the computation
// is repeated at bound+1 and the Betti numbers are compared.
inline BettiReport truncated_pw_derham(const Polyhedron& k, int bound,
                                       bool check_stabilization = true) {
    BettiReport r = detail::pw_derham_core(k, bound);
    if (check_stabilization) {
        BettiReport next = detail::pw_derham_core(k, bound + 1);
        r.stabilized = (r.betti == next.betti);
    } else {
        r.stabilized = false;
    }
    return r;
}

// Laurent de Rham complex truncated by combined multidegree in [-bound,bound]^n.
// d preserves the multidegree, so the complex splits into finite blocks that
// are computed independently and exactly.
inline BettiReport truncated_laurent_derham(int n, int bound, bool check_stabilization = true) {
    if (n < 1) throw std::invalid_argument("truncated_laurent_derham: n must be >= 1");
    auto core = [&](int d) {
        BettiReport r;
        r.truncation_bound = d;
        FinPresAlgebra laur = FinPresAlgebra::laurent(n);
        std::vector<std::vector<IndexTuple>> tuples;
        for (int q = 0; q <= n; ++q) tuples.push_back(detail::increasing_tuples(n, q));
        r.dims.assign(static_cast<std::size_t>(n) + 1, 0);
        r.betti.assign(static_cast<std::size_t>(n) + 1, 0);
        r.rank_d.assign(static_cast<std::size_t>(n), 0);
        for (const auto& m : detail::exponent_box(n, -d, d, false, laur, -1)) {
            std::vector<long> rk(static_cast<std::size_t>(n) + 1, 0);
            for (int q = 0; q <= n; ++q)
                r.dims[static_cast<std::size_t>(q)] +=
                    static_cast<long>(tuples[static_cast<std::size_t>(q)].size());
            for (int q = 0; q < n; ++q) {
                // block matrix of d from (m - e_I, I) to (m - e_J, J)
                const auto& from = tuples[static_cast<std::size_t>(q)];
                const auto& to = tuples[static_cast<std::size_t>(q) + 1];
                std::map<IndexTuple, std::size_t> row_of;
                for (std::size_t i = 0; i < to.size(); ++i) row_of[to[i]] = i;
                QMat blk = zero_matrix(to.size(), from.size());
                IndexTuple merged;
                for (std::size_t c = 0; c < from.size(); ++c)
                    for (int i = 0; i < n; ++i) {
                        int s = detail::merge_indices({i}, from[c], merged);
                        if (s == 0) continue;
                        blk[row_of.at(merged)][c] +=
                            Rat(s * m[static_cast<std::size_t>(i)]);
                    }
                rk[static_cast<std::size_t>(q)] = checked_rank(blk);
                r.rank_d[static_cast<std::size_t>(q)] += rk[static_cast<std::size_t>(q)];
            }
            for (int q = 0; q <= n; ++q) {
                long out = (q < n) ? rk[static_cast<std::size_t>(q)] : 0;
                long in = (q > 0) ? rk[static_cast<std::size_t>(q) - 1] : 0;
                r.betti[static_cast<std::size_t>(q)] +=
                    static_cast<long>(tuples[static_cast<std::size_t>(q)].size()) - out - in;
            }
        }
        return r;
    };
    BettiReport r = core(bound);
    if (check_stabilization) {
        BettiReport next = core(bound + 1);
        r.stabilized = (r.betti == next.betti);
    } else {
        r.stabilized = false;
    }
    return r;
}

// Agreement of the Whitney and integration maps: Psi o Lambda is the identity
// on cochains, Lambda is a chain map, and every Whitney form is compatible.
struct LambdaPsiReport {
    bool psi_lambda_identity = true;
    bool lambda_chain_map = true;
    bool whitney_compatible = true;
    std::vector<QMat> psi_lambda;  // matrix per degree, should be the identity
};

inline LambdaPsiReport compare_lambda_psi(const Polyhedron& k) {
    LambdaPsiReport rep;
    int n = k.dim();
    for (int q = 0; q <= n; ++q) {
        auto basis = simplices_of_dim(k, q);
        QMat m = zero_matrix(basis.size(), basis.size());
        std::map<Simplex, std::size_t> row_of;
        for (std::size_t i = 0; i < basis.size(); ++i) row_of[basis[i]] = i;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            SimplicialCochain c = SimplicialCochain::indicator(k, basis[j]);
            PiecewiseForm w = whitney(c);
            if (!pw_validate(w).valid) rep.whitney_compatible = false;
            SimplicialCochain back = derham_map(w);
            for (const auto& [s, v] : back.values) m[row_of.at(s)][j] = v;
            if (q < n) {
                SimplicialCochain dc = coboundary(c);
                if (!pw_equal(pw_d(w), whitney(dc))) rep.lambda_chain_map = false;
            }
        }
        if (m != identity_matrix(basis.size())) rep.psi_lambda_identity = false;
        rep.psi_lambda.push_back(std::move(m));
    }
    return rep;
}

// f0* w - f1* w = d h(w) + h(dw) for adjacent rectilinear maps, verified as an
// exact identity of piecewise forms.
struct HomotopyReport {
    bool identity_holds = false;
    PiecewiseForm h;
};

inline HomotopyReport homotopy_invariance_check(const RectilinearMap& f0,
                                                const RectilinearMap& f1,
                                                const PiecewiseForm& w) {
    PiecewiseForm hdw = adjacency_homotopy(f0, f1, pw_d(w));
    PiecewiseForm lhs = pw_sub(rectilinear_pullback(w, f0), rectilinear_pullback(w, f1));
    HomotopyReport rep{false, adjacency_homotopy(f0, f1, w)};
    PiecewiseForm rhs = (w.degree == 0) ? hdw : pw_add(pw_d(rep.h), hdw);
    rep.identity_holds = pw_equal(lhs, rhs);
    return rep;
}

// H^0 counts connected components; checked against the union-find count.
struct H0Report {
    long betti0 = 0;
    int components = 0;
    bool match = false;
};

inline H0Report h0_report(const Polyhedron& k, int bound) {
    BettiReport b = truncated_pw_derham(k, bound, false);
    Components c = connected_components(k);
    return {b.betti.empty() ? 0 : b.betti[0], c.count,
            !b.betti.empty() && b.betti[0] == c.count};
}

}  // namespace derham

#endif
