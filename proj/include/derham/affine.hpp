#ifndef DERHAM_AFFINE_HPP
#define DERHAM_AFFINE_HPP

#include "derham/linalg.hpp"
#include "derham/poly.hpp"

namespace derham {

// x |-> matrix * x + offset, exact.
struct AffineMap {
    QMat matrix;  // n_out x n_in
    QVec offset;  // n_out

    AffineMap() = default;
    AffineMap(QMat m, QVec b) : matrix(std::move(m)), offset(std::move(b)) {
        if (matrix.size() != offset.size())
            throw std::invalid_argument("AffineMap: matrix/offset row mismatch");
        for (const auto& row : matrix)
            if (row.size() != n_in()) throw std::invalid_argument("AffineMap: ragged matrix");
    }

    std::size_t n_out() const { return offset.size(); }
    std::size_t n_in() const { return matrix.empty() ? 0 : matrix[0].size(); }

    static AffineMap identity(std::size_t n) { return {identity_matrix(n), QVec(n, Rat(0))}; }

    QVec apply(const QVec& x) const {
        QVec y = mat_vec(matrix, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
        return y;
    }

    // this after g: (this o g)(x) = this(g(x)).
    AffineMap compose(const AffineMap& g) const {
        if (n_in() != g.n_out()) throw std::invalid_argument("AffineMap: composition mismatch");
        return {mat_mul(matrix, g.matrix), apply(g.offset)};
    }

    // Coordinate functions as degree-1 polynomials in the input variables.
    std::vector<Poly> coordinate_polys() const {
        std::vector<Poly> comps;
        int nin = static_cast<int>(n_in());
        for (std::size_t r = 0; r < n_out(); ++r) {
            Poly p = Poly::constant(nin, offset[r]);
            for (int j = 0; j < nin; ++j)
                p = p + Poly::monomial(nin, j, 1, matrix[r][static_cast<std::size_t>(j)]);
            comps.push_back(std::move(p));
        }
        return comps;
    }

    bool operator==(const AffineMap& o) const = default;
};

// The affine map determined by prescribed values at affinely independent
// points: F(points[i]) = images[i]. When the points do not span the ambient
// space, F is the normal-equation extension F(x) = z0 + E (D^T D)^{-1} D^T (x - w0),
// which restricts correctly to the affine hull of the points.
inline AffineMap affine_through_points(const std::vector<QVec>& points,
                                       const std::vector<QVec>& images) {
    if (points.empty() || points.size() != images.size())
        throw std::invalid_argument("affine_through_points: point/image count mismatch");
    std::size_t m = points[0].size();
    std::size_t mo = images[0].size();
    std::size_t k = points.size() - 1;
    QMat d = zero_matrix(m, k), e = zero_matrix(mo, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < m; ++i) d[i][j] = points[j + 1][i] - points[0][i];
        for (std::size_t i = 0; i < mo; ++i) e[i][j] = images[j + 1][i] - images[0][i];
    }
    QMat b;
    if (k == 0) {
        b = zero_matrix(mo, m);
    } else {
        QMat dt = transpose(d);
        QMat gram = mat_mul(dt, d);  // invertible iff points affinely independent
        b = mat_mul(e, mat_mul(mat_inverse(gram), dt));
    }
    QVec off = images[0];
    QVec bw0 = mat_vec(b, points[0]);
    for (std::size_t i = 0; i < mo; ++i) off[i] -= bw0[i];
    return {std::move(b), std::move(off)};
}

}  // namespace derham

#endif
