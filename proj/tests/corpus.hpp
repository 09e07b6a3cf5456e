#ifndef DERHAM_TESTS_CORPUS_HPP
#define DERHAM_TESTS_CORPUS_HPP

#include "derham/polyhedron.hpp"

namespace corpus {

using namespace derham;

inline Polyhedron make(int ambient, std::vector<QVec> verts,
                       std::vector<Simplex> top_simplices) {
    Polyhedron k;
    k.ambient_dim = ambient;
    k.vertices = std::move(verts);
    for (auto& s : top_simplices) {
        std::sort(s.begin(), s.end());
        k.simplices.insert(std::move(s));
    }
    close_faces(k);
    return k;
}

inline Polyhedron single_point() { return make(1, {{Rat(0)}}, {{0}}); }

inline Polyhedron interval() { return make(1, {{Rat(0)}, {Rat(1)}}, {{0, 1}}); }

// A path complex along given 1-d coordinates (already sorted).
inline Polyhedron path(const std::vector<Rat>& coords) {
    std::vector<QVec> verts;
    std::vector<Simplex> edges;
    for (const auto& c : coords) verts.push_back({c});
    for (int i = 0; i + 1 < static_cast<int>(coords.size()); ++i) edges.push_back({i, i + 1});
    return make(1, std::move(verts), std::move(edges));
}

inline Polyhedron triangle_boundary() {
    return make(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
                {{0, 1}, {1, 2}, {0, 2}});
}

inline Polyhedron full_triangle() {
    return make(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {{0, 1, 2}});
}

inline Polyhedron tetrahedron_boundary() {
    return make(3,
                {{Rat(0), Rat(0), Rat(0)},
                 {Rat(1), Rat(0), Rat(0)},
                 {Rat(0), Rat(1), Rat(0)},
                 {Rat(0), Rat(0), Rat(1)}},
                {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// 7-vertex triangulated torus (Moebius-Kantor pattern), realized on the
// vertices of the standard 6-simplex so every simplex is a genuine face and
// the common-face condition holds automatically.
inline Polyhedron torus7() {
    std::vector<QVec> verts;
    for (int v = 0; v < 7; ++v) {
        QVec p(6, Rat(0));
        if (v > 0) p[static_cast<std::size_t>(v - 1)] = 1;
        verts.push_back(std::move(p));
    }
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return make(6, std::move(verts), std::move(tris));
}

inline Polyhedron two_triangles() {
    return make(2,
                {{Rat(0), Rat(0)},
                 {Rat(1), Rat(0)},
                 {Rat(0), Rat(1)},
                 {Rat(3), Rat(0)},
                 {Rat(4), Rat(0)},
                 {Rat(3), Rat(1)}},
                {{0, 1, 2}, {3, 4, 5}});
}

// Cone over the 1-skeleton of a complex: lift into one more dimension and
// join to an apex off the base hyperplane. Joins of valid complexes with an
// affinely independent apex stay valid.
inline Star cone_over_1skeleton(const Polyhedron& base) {
    Star st;
    st.base.ambient_dim = base.ambient_dim + 1;
    for (const auto& v : base.vertices) {
        QVec p = v;
        p.push_back(Rat(0));
        st.base.vertices.push_back(std::move(p));
    }
    QVec apex(static_cast<std::size_t>(base.ambient_dim), Rat(0));
    apex.push_back(Rat(1));
    int apex_idx = static_cast<int>(st.base.vertices.size());
    st.base.vertices.push_back(std::move(apex));
    st.center = apex_idx;
    st.base.simplices.insert({apex_idx});
    for (const auto& s : base.simplices) {
        if (s.size() > 2) continue;  // 1-skeleton
        st.base.simplices.insert(s);
        Simplex coned = s;
        coned.push_back(apex_idx);
        st.base.simplices.insert(coned);
    }
    close_faces(st.base);
    return st;
}

inline std::vector<Polyhedron> betti_corpus() {
    return {interval(),
            triangle_boundary(),
            full_triangle(),
            tetrahedron_boundary(),
            torus7(),
            two_triangles()};
}

inline std::vector<std::vector<long>> betti_expected() {
    return {{1, 0}, {1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 2, 1}, {2, 0, 0}};
}

inline std::vector<Star> star_corpus() {
    return {cone_over_1skeleton(interval()),
            cone_over_1skeleton(triangle_boundary()),
            cone_over_1skeleton(full_triangle()),
            cone_over_1skeleton(tetrahedron_boundary()),
            cone_over_1skeleton(torus7())};
}

}  // namespace corpus

#endif
