#ifndef DERHAM_RECTILINEAR_HPP
#define DERHAM_RECTILINEAR_HPP

#include "derham/polyhedron.hpp"

namespace derham {

// A map of polyhedra that is affine on each simplex. Determined by the images
// of the vertices; each simplex must land inside some target simplex.
struct RectilinearMap {
    Polyhedron source;
    Polyhedron target;
    std::vector<QVec> vertex_images;  // one point in the target ambient per source vertex

    QVec image_of_vertex(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_images.size())
            throw std::invalid_argument("RectilinearMap: vertex index out of range");
        return vertex_images[static_cast<std::size_t>(v)];
    }

    // Some target simplex containing the image of s, or nullopt.
    std::optional<Simplex> assigned_simplex(const Simplex& s) const {
        for (const auto& t : maximal_simplices(target)) {
            bool ok = true;
            for (int v : s)
                if (!point_in_simplex(target, t, image_of_vertex(v))) { ok = false; break; }
            if (ok) return t;
        }
        return std::nullopt;
    }

    bool is_valid() const {
        if (vertex_images.size() != source.vertices.size()) return false;
        for (const auto& s : maximal_simplices(source))
            if (!assigned_simplex(s)) return false;
        return true;
    }

    // Ambient affine extension of f restricted to simplex s.
    AffineMap affine_on(const Simplex& s) const {
        std::vector<QVec> imgs;
        imgs.reserve(s.size());
        for (int v : s) imgs.push_back(image_of_vertex(v));
        return affine_through_points(source.simplex_points(s), imgs);
    }

    QVec apply(const QVec& x) const {
        auto s = find_containing_simplex(source, x);
        if (!s) throw std::invalid_argument("RectilinearMap: point outside |K|");
        return affine_on(*s).apply(x);
    }

    static RectilinearMap identity(const Polyhedron& k) {
        RectilinearMap f;
        f.source = k;
        f.target = k;
        f.vertex_images = k.vertices;
        return f;
    }

    // Collapse of a star to its center; constant on every simplex.
    static RectilinearMap collapse_to_vertex(const Polyhedron& k, int v) {
        RectilinearMap f;
        f.source = k;
        f.target = k;
        f.vertex_images.assign(k.vertices.size(), k.vertices[static_cast<std::size_t>(v)]);
        return f;
    }
};

// True iff for every source simplex a there is one target simplex containing
// f(a) and g(a) together.
inline bool are_adjacent(const RectilinearMap& f, const RectilinearMap& g) {
    if (f.source != g.source || f.target != g.target)
        throw std::invalid_argument("are_adjacent: source/target mismatch");
    for (const auto& a : f.source.simplices) {
        bool found = false;
        for (const auto& t : maximal_simplices(f.target)) {
            bool ok = true;
            for (int v : a) {
                if (!point_in_simplex(f.target, t, f.image_of_vertex(v)) ||
                    !point_in_simplex(f.target, t, g.image_of_vertex(v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace derham

#endif
