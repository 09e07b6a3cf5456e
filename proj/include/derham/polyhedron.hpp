#ifndef DERHAM_POLYHEDRON_HPP
#define DERHAM_POLYHEDRON_HPP

#include <functional>
#include <set>

#include "derham/affine.hpp"
#include "derham/lp.hpp"

namespace derham {

using Simplex = std::vector<int>;  // sorted ascending vertex indices

// Finite geometric simplicial complex with rational vertex coordinates.
struct Polyhedron {
    int ambient_dim = 0;
    std::vector<QVec> vertices;
    std::set<Simplex> simplices;

    int dim() const {
        int d = -1;
        for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

    std::vector<QVec> simplex_points(const Simplex& s) const {
        std::vector<QVec> pts;
        pts.reserve(s.size());
        for (int v : s) {
            if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
                throw std::invalid_argument("Polyhedron: vertex index out of range");
            pts.push_back(vertices[static_cast<std::size_t>(v)]);
        }
        return pts;
    }

    QVec barycenter(const Simplex& s) const {
        QVec c(static_cast<std::size_t>(ambient_dim), Rat(0));
        for (int v : s)
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += vertices[static_cast<std::size_t>(v)][i];
        Rat n(static_cast<int>(s.size()));
        for (auto& x : c) x /= n;
        return c;
    }

    bool operator==(const Polyhedron& o) const = default;
};

struct Star {
    Polyhedron base;
    int center;
};

inline void close_faces(Polyhedron& k) {
    std::set<Simplex> closed;
    for (const auto& s : k.simplices) {
        // all nonempty subsets
        std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            closed.insert(std::move(f));
        }
    }
    k.simplices = std::move(closed);
}

inline std::vector<Simplex> maximal_simplices(const Polyhedron& k) {
    std::vector<Simplex> maxs;
    for (const auto& s : k.simplices) {
        bool maximal = true;
        for (const auto& t : k.simplices) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) { maximal = false; break; }
        }
        if (maximal) maxs.push_back(s);
    }
    return maxs;
}

inline std::vector<int> used_vertices(const Polyhedron& k) {
    std::set<int> used;
    for (const auto& s : k.simplices) used.insert(s.begin(), s.end());
    return {used.begin(), used.end()};
}

inline bool affinely_independent(const std::vector<QVec>& pts) {
    if (pts.empty()) return false;
    std::size_t m = pts[0].size(), kk = pts.size() - 1;
    QMat d = zero_matrix(m, kk);
    for (std::size_t j = 0; j < kk; ++j)
        for (std::size_t i = 0; i < m; ++i) d[i][j] = pts[j + 1][i] - pts[0][i];
    return rank(d) == static_cast<long>(kk);
}

// Canonical parametrization of a simplex: standard coordinates -> ambient,
// t |-> w0 + sum t_j (w_j - w0), vertices taken in ascending index order.
inline AffineMap param_map(const Polyhedron& k, const Simplex& s) {
    auto pts = k.simplex_points(s);
    std::size_t m = static_cast<std::size_t>(k.ambient_dim), q = pts.size() - 1;
    QMat a = zero_matrix(m, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][j] = pts[j + 1][i] - pts[0][i];
    return {std::move(a), pts[0]};
}

// Affine left inverse of param_map (normal-equation projection); restricted to
// the affine hull of the simplex it inverts the parametrization exactly.
inline AffineMap param_inverse(const Polyhedron& k, const Simplex& s) {
    auto pts = k.simplex_points(s);
    std::vector<QVec> images;
    std::size_t q = pts.size() - 1;
    images.push_back(QVec(q, Rat(0)));
    for (std::size_t j = 0; j < q; ++j) {
        QVec e(q, Rat(0));
        e[j] = 1;
        images.push_back(std::move(e));
    }
    return affine_through_points(pts, images);
}

// Barycentric coordinates of x in conv(s); nullopt when x is off the affine
// hull. Exact; a point is in the simplex iff all coordinates are >= 0.
inline std::optional<QVec> barycentric_coords(const Polyhedron& k, const Simplex& s,
                                              const QVec& x) {
    auto pts = k.simplex_points(s);
    std::size_t m = static_cast<std::size_t>(k.ambient_dim);
    QMat a = zero_matrix(m + 1, pts.size());
    QVec b(m + 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i) a[i][j] = pts[j][i];
        a[m][j] = 1;
    }
    for (std::size_t i = 0; i < m; ++i) b[i] = x[i];
    b[m] = 1;
    return solve_linear(a, b);
}

inline bool point_in_simplex(const Polyhedron& k, const Simplex& s, const QVec& x) {
    auto bc = barycentric_coords(k, s, x);
    if (!bc) return false;
    return std::all_of(bc->begin(), bc->end(), [](const Rat& l) { return l >= 0; });
}

inline std::optional<Simplex> find_containing_simplex(const Polyhedron& k, const QVec& x) {
    for (const auto& s : maximal_simplices(k))
        if (point_in_simplex(k, s, x)) return s;
    return std::nullopt;
}

struct ValidityReport {
    bool valid = true;
    std::vector<std::pair<Simplex, Simplex>> violating_pairs;
    std::vector<std::string> messages;
};

namespace detail {

inline std::string simplex_str(const Simplex& s) {
    std::string r = "[";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "]";
}

// Intersection of two simplices must be conv(shared vertices). Feasibility and
// the "no mass on non-shared vertices" conditions are exact LPs in barycentric
// coordinates.
inline bool pair_intersects_properly(const Polyhedron& k, const Simplex& s, const Simplex& t) {
    auto ps = k.simplex_points(s), pt = k.simplex_points(t);
    std::size_t m = static_cast<std::size_t>(k.ambient_dim);
    std::size_t ns = ps.size(), nt = pt.size();
    QMat a = zero_matrix(m + 2, ns + nt);
    QVec b(m + 2, Rat(0));
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][j] = ps[j][i];
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][ns + j] = -pt[j][i];
    for (std::size_t j = 0; j < ns; ++j) a[m][j] = 1;
    for (std::size_t j = 0; j < nt; ++j) a[m + 1][ns + j] = 1;
    b[m] = 1;
    b[m + 1] = 1;

    std::set<int> shared;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                          std::inserter(shared, shared.begin()));

    auto check_zero_max = [&](std::size_t col) {
        QVec c(ns + nt, Rat(0));
        c[col] = 1;
        LpResult r = lp_maximize(a, b, c);
        if (r.status == LpResult::Status::Infeasible) return true;  // empty intersection
        return r.status == LpResult::Status::Optimal && r.value.is_zero();
    };
    for (std::size_t j = 0; j < ns; ++j)
        if (!shared.count(s[j]) && !check_zero_max(j)) return false;
    for (std::size_t j = 0; j < nt; ++j)
        if (!shared.count(t[j]) && !check_zero_max(ns + j)) return false;
    return true;
}

}  // namespace detail

inline ValidityReport validate_polyhedron(const Polyhedron& k) {
    ValidityReport rep;
    auto fail = [&](const Simplex& a, const Simplex& b, const std::string& msg) {
        rep.valid = false;
        rep.violating_pairs.emplace_back(a, b);
        rep.messages.push_back(msg);
    };
    for (const auto& s : k.simplices) {
        if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end()) {
            fail(s, s, "simplex " + detail::simplex_str(s) + " not a sorted vertex set");
            continue;
        }
        if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= k.vertices.size()) {
            fail(s, s, "simplex " + detail::simplex_str(s) + " has out-of-range vertex");
            continue;
        }
        if (!affinely_independent(k.simplex_points(s)))
            fail(s, s, "simplex " + detail::simplex_str(s) + " is affinely dependent");
        // face closure
        std::size_t n = s.size();
        for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            if (f.size() < n && !k.simplices.count(f))
                fail(s, f, "missing face " + detail::simplex_str(f) + " of " +
                               detail::simplex_str(s));
        }
    }
    if (!rep.valid) return rep;
    std::vector<Simplex> all(k.simplices.begin(), k.simplices.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            // a face of the other always meets it in itself
            if (std::includes(all[j].begin(), all[j].end(), all[i].begin(), all[i].end()) ||
                std::includes(all[i].begin(), all[i].end(), all[j].begin(), all[j].end()))
                continue;
            if (!detail::pair_intersects_properly(k, all[i], all[j]))
                fail(all[i], all[j],
                     "simplices " + detail::simplex_str(all[i]) + " and " +
                         detail::simplex_str(all[j]) + " do not meet in a common face");
        }
    return rep;
}

// Barycentric subdivision: one new vertex per simplex (its barycenter), one
// simplex per chain in the face poset.
inline Polyhedron barycentric_subdivide(const Polyhedron& k) {
    Polyhedron out;
    out.ambient_dim = k.ambient_dim;
    std::map<Simplex, int> vertex_of;
    for (const auto& s : k.simplices) {
        vertex_of[s] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(k.barycenter(s));
    }
    // chains of strict face inclusions
    std::vector<std::vector<Simplex>> stack;
    for (const auto& s : k.simplices) stack.push_back({s});
    while (!stack.empty()) {
        auto chain = std::move(stack.back());
        stack.pop_back();
        Simplex nodes;
        for (const auto& s : chain) nodes.push_back(vertex_of[s]);
        std::sort(nodes.begin(), nodes.end());
        out.simplices.insert(nodes);
        const Simplex& top = chain.back();
        for (const auto& t : k.simplices) {
            if (t.size() <= top.size()) continue;
            if (std::includes(t.begin(), t.end(), top.begin(), top.end())) {
                auto ext = chain;
                ext.push_back(t);
                stack.push_back(std::move(ext));
            }
        }
    }
    return out;
}

inline bool is_star(const Polyhedron& k, int center) {
    if (!k.simplices.count({center})) return false;
    for (const auto& s : maximal_simplices(k))
        if (!std::binary_search(s.begin(), s.end(), center)) return false;
    return true;
}

// Closed vertex star: all simplices containing v, plus their faces.
inline Star star_neighborhood(const Polyhedron& k, int v) {
    if (!k.simplices.count({v}))
        throw std::invalid_argument("star_neighborhood: not a vertex of the complex");
    Star st;
    st.center = v;
    st.base.ambient_dim = k.ambient_dim;
    st.base.vertices = k.vertices;
    for (const auto& s : k.simplices)
        if (std::binary_search(s.begin(), s.end(), v)) st.base.simplices.insert(s);
    close_faces(st.base);
    return st;
}

struct Components {
    int count = 0;
    std::map<int, int> component_of;  // used vertex -> component id
};

inline Components connected_components(const Polyhedron& k) {
    auto verts = used_vertices(k);
    std::map<int, int> parent;
    for (int v : verts) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& s : k.simplices)
        for (std::size_t i = 1; i < s.size(); ++i) parent[find(s[0])] = find(s[i]);
    Components c;
    std::map<int, int> label;
    for (int v : verts) {
        int r = find(v);
        auto [it, inserted] = label.emplace(r, c.count);
        if (inserted) ++c.count;
        c.component_of[v] = it->second;
    }
    return c;
}

}  // namespace derham

#endif
