#ifndef DERHAM_POLY_HPP
#define DERHAM_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>

#include "derham/rational.hpp"

namespace derham {

using Exponent = std::vector<int>;

// Graded lexicographic: total degree first, then lex. Works unchanged for
// Laurent exponents (entries may be negative).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

// Multivariate polynomial over Q with a canonical term order, so equality of
// values is structural equality. Negative exponents are admitted, which makes
// the same representation serve as LaurentPoly; constructors of the polynomial
// algebra kinds enforce non-negativity where it is required.
class Poly {
public:
    using TermMap = std::map<Exponent, Rat, GradedLex>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Poly: negative variable count");
    }

    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static Poly variable(int nvars, int i) { return monomial(nvars, i, 1, Rat(1)); }
    static Poly monomial(int nvars, int i, int power, const Rat& c) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("Poly: variable index out of range");
        Poly p(nvars);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = power;
        p.add_term(e, c);
        return p;
    }
    static Poly from_terms(int nvars, const TermMap& terms) {
        Poly p(nvars);
        for (const auto& [e, c] : terms) p.add_term(e, c);
        return p;
    }

    int num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_polynomial() const {  // no negative exponents
        for (const auto& [e, c] : terms_)
            for (int k : e)
                if (k < 0) return false;
        return true;
    }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exponent& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::invalid_argument("Poly: not a constant");
        return terms_.begin()->second;
    }

    // Maximum total degree over stored terms; 0 for the zero polynomial.
    long total_degree() const {
        long d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
        return d;
    }

    void add_term(const Exponent& e, const Rat& c) {
        if (e.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("Poly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) {
        Poly r(a.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, coeff] : a.terms_) r.terms_.emplace(e, c * coeff);
        return r;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int n) const {
        if (n < 0) throw std::invalid_argument("Poly: negative power");
        Poly r = constant(nvars_, Rat(1));
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    Rat eval(const QVec& x) const {
        if (x.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("poly_eval: point arity mismatch");
        Rat v = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (e[i] == 0) continue;
                if (e[i] > 0) {
                    for (int k = 0; k < e[i]; ++k) t *= x[i];
                } else {
                    if (x[i].is_zero())
                        throw std::invalid_argument("poly_eval: negative power at zero");
                    for (int k = 0; k < -e[i]; ++k) t /= x[i];
                }
            }
            v += t;
        }
        return v;
    }

    Poly partial(int i) const {
        if (i < 0 || i >= nvars_) throw std::invalid_argument("poly_partial: index out of range");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            Exponent d = e;
            Rat k(d[static_cast<std::size_t>(i)]);
            d[static_cast<std::size_t>(i)] -= 1;
            r.add_term(d, k * c);
        }
        return r;
    }

    // Substitute variable i -> comps[i]. Requires non-negative exponents.
    Poly substitute(const std::vector<Poly>& comps) const {
        if (comps.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("Poly::substitute: component count mismatch");
        if (!is_polynomial())
            throw std::invalid_argument("Poly::substitute: negative exponents not substitutable");
        int out_vars = comps.empty() ? 0 : comps[0].num_vars();
        Poly r(out_vars);
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(out_vars, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * comps[i].pow(e[i]);
            r = r + t;
        }
        return r;
    }

private:
    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("Poly: variable-count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

using MultiPoly = Poly;
using LaurentPoly = Poly;

inline Rat poly_eval(const Poly& p, const QVec& x) { return p.eval(x); }
inline Poly poly_partial(const Poly& p, int i) { return p.partial(i); }

}  // namespace derham

#endif
