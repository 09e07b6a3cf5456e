#ifndef DERHAM_FORM_HPP
#define DERHAM_FORM_HPP

#include "derham/affine.hpp"
#include "derham/poly.hpp"

namespace derham {

using IndexTuple = std::vector<int>;  // strictly increasing dx indices

// Exterior form with polynomial coefficients on one affine chart. Terms are
// keyed by strictly increasing dx-index tuples, so equality is structural.
class PolyForm {
public:
    using TermMap = std::map<IndexTuple, Poly>;

    PolyForm() : nvars_(0), degree_(0) {}
    PolyForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (nvars < 0 || degree < 0) throw std::invalid_argument("PolyForm: bad shape");
    }

    static PolyForm from_function(const Poly& p) {
        PolyForm f(p.num_vars(), 0);
        f.add_term({}, p);
        return f;
    }
    static PolyForm dx(int nvars, int i) {
        PolyForm f(nvars, 1);
        f.add_term({i}, Poly::constant(nvars, Rat(1)));
        return f;
    }
    static PolyForm zero(int nvars, int degree) { return PolyForm(nvars, degree); }

    int num_vars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IndexTuple& idx, const Poly& coeff) {
        if (idx.size() != static_cast<std::size_t>(degree_))
            throw std::invalid_argument("PolyForm: index tuple length != degree");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= nvars_)
                throw std::invalid_argument("PolyForm: dx index out of range");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw std::invalid_argument("PolyForm: dx indices not strictly increasing");
        }
        if (coeff.num_vars() != nvars_)
            throw std::invalid_argument("PolyForm: coefficient variable-count mismatch");
        if (coeff.is_zero()) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PolyForm operator+(const PolyForm& a, const PolyForm& b) {
        a.check_compatible(b);
        PolyForm r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, c);
        return r;
    }
    friend PolyForm operator-(const PolyForm& a, const PolyForm& b) {
        a.check_compatible(b);
        PolyForm r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, -c);
        return r;
    }
    friend PolyForm operator-(const PolyForm& a) {
        PolyForm r(a.nvars_, a.degree_);
        for (const auto& [i, c] : a.terms_) r.terms_.emplace(i, -c);
        return r;
    }
    friend PolyForm operator*(const Rat& c, const PolyForm& a) {
        PolyForm r(a.nvars_, a.degree_);
        if (c.is_zero()) return r;
        for (const auto& [i, p] : a.terms_) r.terms_.emplace(i, c * p);
        return r;
    }
    friend PolyForm operator*(const Poly& c, const PolyForm& a) {
        PolyForm r(a.nvars_, a.degree_);
        for (const auto& [i, p] : a.terms_) r.add_term(i, c * p);
        return r;
    }

    bool operator==(const PolyForm& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const PolyForm& o) const { return !(*this == o); }

    // Max over terms of coefficient term degree + form degree.
    long max_total_degree() const {
        long d = 0;
        for (const auto& [i, c] : terms_)
            for (const auto& [e, coeff] : c.terms())
                d = std::max(d, std::accumulate(e.begin(), e.end(), 0L) +
                                    static_cast<long>(degree_));
        return d;
    }

private:
    void check_compatible(const PolyForm& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("PolyForm: variable-count mismatch");
        if (degree_ != o.degree_) throw std::invalid_argument("PolyForm: degree mismatch");
    }

    int nvars_;
    int degree_;
    TermMap terms_;
};

namespace detail {
// Merge two strictly increasing tuples; returns sign of the shuffle or 0 if
// they overlap.
inline int merge_indices(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            // moving b[j] past the remaining a-entries
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        } else {
            return 0;  // repeated index
        }
    }
    return sign;
}
}  // namespace detail

inline PolyForm form_wedge(const PolyForm& a, const PolyForm& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("form_wedge: variable-count mismatch");
    PolyForm r(a.num_vars(), a.degree() + b.degree());
    IndexTuple merged;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            int s = detail::merge_indices(ia, ib, merged);
            if (s == 0) continue;
            r.add_term(merged, Rat(s) * (ca * cb));
        }
    return r;
}

// d(p dx_I) = sum_i dp/dx_i dx_i ^ dx_I
inline PolyForm form_d(const PolyForm& a) {
    PolyForm r(a.num_vars(), a.degree() + 1);
    IndexTuple merged;
    for (const auto& [idx, coeff] : a.terms())
        for (int i = 0; i < a.num_vars(); ++i) {
            Poly dc = coeff.partial(i);
            if (dc.is_zero()) continue;
            int s = detail::merge_indices({i}, idx, merged);
            if (s == 0) continue;
            r.add_term(merged, Rat(s) * dc);
        }
    return r;
}

// Pullback along a polynomial map y_j = comps[j](x); requires polynomial
// (non-Laurent) coefficients.
inline PolyForm form_pullback(const PolyForm& a, const std::vector<Poly>& comps, int nvars_in) {
    if (comps.size() != static_cast<std::size_t>(a.num_vars()))
        throw std::invalid_argument("form_pullback: component count mismatch");
    for (const auto& c : comps)
        if (c.num_vars() != nvars_in)
            throw std::invalid_argument("form_pullback: component arity mismatch");
    // differentials of the components
    std::vector<PolyForm> dcomp;
    dcomp.reserve(comps.size());
    for (const auto& c : comps) dcomp.push_back(form_d(PolyForm::from_function(c)));

    PolyForm r(nvars_in, a.degree());
    for (const auto& [idx, coeff] : a.terms()) {
        PolyForm t = PolyForm::from_function(coeff.substitute(comps));
        for (int i : idx) t = form_wedge(t, dcomp[static_cast<std::size_t>(i)]);
        r = r + t;
    }
    return r;
}

inline PolyForm form_pullback_affine(const PolyForm& a, const AffineMap& f) {
    if (f.n_out() != static_cast<std::size_t>(a.num_vars()))
        throw std::invalid_argument("form_pullback_affine: dimension mismatch");
    return form_pullback(a, f.coordinate_polys(), static_cast<int>(f.n_in()));
}

}  // namespace derham

#endif
