#ifndef DERHAM_COCHAIN_HPP
#define DERHAM_COCHAIN_HPP

#include "derham/polyhedron.hpp"

namespace derham {

namespace detail {
// Sign of the permutation sorting an index tuple; 0 if it has repeats.
inline int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) { std::swap(v[i], v[j]); sign = -sign; }
        }
    return sign;
}
}  // namespace detail

// Rational simplicial cochain; values stored on ascending vertex tuples and
// extended antisymmetrically to arbitrary orderings.
struct SimplicialCochain {
    Polyhedron base;
    int degree = 0;
    std::map<Simplex, Rat> values;  // keys sorted ascending, zero values omitted

    static SimplicialCochain zero(const Polyhedron& k, int degree) {
        return {k, degree, {}};
    }

    static SimplicialCochain indicator(const Polyhedron& k, const Simplex& s) {
        SimplicialCochain c{k, static_cast<int>(s.size()) - 1, {}};
        c.set(s, Rat(1));
        return c;
    }

    void set(const Simplex& oriented, const Rat& val) {
        Simplex s = oriented;
        int sign = detail::sort_sign(s);
        if (sign == 0) throw std::invalid_argument("SimplicialCochain: degenerate simplex");
        if (!base.simplices.count(s))
            throw std::invalid_argument("SimplicialCochain: simplex not in complex");
        Rat v = Rat(sign) * val;
        if (v.is_zero()) values.erase(s);
        else values[s] = v;
    }

    Rat value(const Simplex& oriented) const {
        Simplex s = oriented;
        int sign = detail::sort_sign(s);
        if (sign == 0) return Rat(0);
        auto it = values.find(s);
        if (it == values.end()) return Rat(0);
        return Rat(sign) * it->second;
    }

    friend SimplicialCochain operator+(const SimplicialCochain& a, const SimplicialCochain& b) {
        if (a.degree != b.degree || a.base != b.base)
            throw std::invalid_argument("SimplicialCochain: mismatch");
        SimplicialCochain r = a;
        for (const auto& [s, v] : b.values) {
            Rat nv = r.value(s) + v;
            if (nv.is_zero()) r.values.erase(s);
            else r.values[s] = nv;
        }
        return r;
    }
    friend SimplicialCochain operator*(const Rat& c, const SimplicialCochain& a) {
        SimplicialCochain r{a.base, a.degree, {}};
        if (c.is_zero()) return r;
        for (const auto& [s, v] : a.values) r.values[s] = c * v;
        return r;
    }

    bool operator==(const SimplicialCochain& o) const {
        return degree == o.degree && values == o.values;
    }
};

inline std::vector<Simplex> simplices_of_dim(const Polyhedron& k, int d) {
    std::vector<Simplex> out;
    for (const auto& s : k.simplices)
        if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
    return out;
}

// (delta c)([v_0..v_{k+1}]) = sum (-1)^i c(face omitting v_i)
inline SimplicialCochain coboundary(const SimplicialCochain& c) {
    SimplicialCochain d{c.base, c.degree + 1, {}};
    for (const auto& s : simplices_of_dim(c.base, c.degree + 1)) {
        Rat v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            Rat term = c.value(face);
            v += (i % 2 == 0) ? term : -term;
        }
        if (!v.is_zero()) d.values[s] = v;
    }
    return d;
}

// Matrix of delta from k-cochains to (k+1)-cochains in the ascending-simplex
// bases.
inline QMat coboundary_matrix(const Polyhedron& k, int degree) {
    auto rows_s = simplices_of_dim(k, degree + 1);
    auto cols_s = simplices_of_dim(k, degree);
    std::map<Simplex, std::size_t> col_of;
    for (std::size_t j = 0; j < cols_s.size(); ++j) col_of[cols_s[j]] = j;
    QMat m = zero_matrix(rows_s.size(), cols_s.size());
    for (std::size_t r = 0; r < rows_s.size(); ++r) {
        const Simplex& s = rows_s[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            auto it = col_of.find(face);
            if (it != col_of.end()) m[r][it->second] += (i % 2 == 0) ? Rat(1) : Rat(-1);
        }
    }
    return m;
}

}  // namespace derham

#endif
