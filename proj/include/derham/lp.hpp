#ifndef DERHAM_LP_HPP
#define DERHAM_LP_HPP

#include "derham/linalg.hpp"

namespace derham {

// Exact simplex method over Q for small dense programs:
//   maximize c.x  subject to  A x = b, x >= 0.
// Bland's rule, so termination is guaranteed.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status;
    Rat value;
    QVec x;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(QMat a, QVec b) : a_(std::move(a)), b_(std::move(b)) {
        m_ = a_.size();
        n_ = m_ ? a_[0].size() : 0;
        basis_.assign(m_, -1);
        for (std::size_t i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
    }

    std::size_t cols() const { return n_; }
    std::size_t rows() const { return m_; }

    void append_artificials() {
        art_start_ = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t r = 0; r < m_; ++r) a_[r].push_back(r == i ? Rat(1) : Rat(0));
            basis_[i] = static_cast<int>(n_);
            ++n_;
        }
    }

    // Maximize the given cost vector from the current basic feasible point.
    // Returns false on unboundedness.
    bool optimize(const QVec& cost) {
        QVec obj;
        canonicalize(cost, obj);
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (obj[j] > 0) { enter = j; break; }  // Bland: first improving column
            if (enter == n_) return true;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat ratio = b_[i] / a_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter, obj);
        }
    }

    Rat objective_value(const QVec& cost) const {
        Rat v = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t bi = static_cast<std::size_t>(basis_[i]);
            if (bi < cost.size() && !cost[bi].is_zero()) v += cost[bi] * b_[i];
        }
        return v;
    }

    // Pivot artificial variables out of the basis where possible; rows whose
    // artificial cannot leave are redundant zero rows.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (static_cast<std::size_t>(basis_[i]) < art_start_) continue;
            std::size_t j = 0;
            while (j < art_start_ && a_[i][j].is_zero()) ++j;
            if (j < art_start_) {
                QVec dummy(n_, Rat(0));
                pivot(i, j, dummy);
            }
        }
        for (std::size_t r = 0; r < m_; ++r) a_[r].resize(art_start_);
        n_ = art_start_;
    }

    QVec solution() const {
        QVec x(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t bi = static_cast<std::size_t>(basis_[i]);
            if (bi < n_) x[bi] = b_[i];
        }
        return x;
    }

private:
    void canonicalize(const QVec& cost, QVec& obj) {
        obj.assign(n_, Rat(0));
        for (std::size_t j = 0; j < n_ && j < cost.size(); ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t bi = static_cast<std::size_t>(basis_[i]);
            Rat cb = bi < cost.size() ? cost[bi] : Rat(0);
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) obj[j] -= cb * a_[i][j];
        }
    }

    void pivot(std::size_t r, std::size_t c, QVec& obj) {
        Rat inv = a_[r][c];
        for (std::size_t j = 0; j < n_; ++j) a_[r][j] /= inv;
        b_[r] /= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || a_[i][c].is_zero()) continue;
            Rat f = a_[i][c];
            for (std::size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
        }
        if (!obj[c].is_zero()) {
            Rat f = obj[c];
            for (std::size_t j = 0; j < n_; ++j) obj[j] -= f * a_[r][j];
        }
        basis_[r] = static_cast<int>(c);
    }

    QMat a_;
    QVec b_;
    std::vector<int> basis_;
    std::size_t m_, n_, art_start_ = 0;
};

}  // namespace detail

inline LpResult lp_maximize(const QMat& a, const QVec& b, const QVec& c) {
    if (a.size() != b.size()) throw std::invalid_argument("lp_maximize: shape mismatch");
    std::size_t n = a.empty() ? c.size() : a[0].size();
    if (c.size() != n) throw std::invalid_argument("lp_maximize: cost arity mismatch");

    detail::SimplexTableau t(a, b);
    t.append_artificials();
    QVec phase1(t.cols(), Rat(0));
    for (std::size_t j = n; j < t.cols(); ++j) phase1[j] = -1;
    t.optimize(phase1);  // bounded by construction
    if (!t.objective_value(phase1).is_zero())
        return {LpResult::Status::Infeasible, Rat(0), {}};
    t.expel_artificials();

    if (!t.optimize(c)) return {LpResult::Status::Unbounded, Rat(0), {}};
    return {LpResult::Status::Optimal, t.objective_value(c), t.solution()};
}

}  // namespace derham

#endif
