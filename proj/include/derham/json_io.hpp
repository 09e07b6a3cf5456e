#ifndef DERHAM_JSON_IO_HPP
#define DERHAM_JSON_IO_HPP

#include <fstream>

#include <nlohmann/json.hpp>

#include "derham/cohomology.hpp"

namespace derham {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& where, const std::string& what)
        : std::invalid_argument(where + ": " + what) {}
};

namespace jio {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, "missing field '" + key + "'");
    return *it;
}

inline int to_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
    return j.get<int>();
}

inline Rat to_rat(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw ParseError(where, "expected a rational string \"p/q\"");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where, e.what());
    }
}

inline std::vector<int> to_int_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of integers");
    std::vector<int> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_int(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline QVec to_qvec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of rationals");
    QVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_rat(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

}  // namespace jio

inline Json rat_to_json(const Rat& q) { return rat_str(q); }

inline Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", e}, {"c", rat_str(c)}});
    return {{"vars", p.num_vars()}, {"terms", terms}};
}

inline Poly poly_from_json(const Json& j, const std::string& where = "polynomial") {
    int nv = jio::to_int(jio::field(j, "vars", where), where + ".vars");
    Poly p(nv);
    const Json& terms = jio::field(j, "terms", where);
    if (!terms.is_array()) throw ParseError(where + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string w = where + ".terms[" + std::to_string(i) + "]";
        Exponent e = jio::to_int_vec(jio::field(terms[i], "exp", w), w + ".exp");
        Rat c = jio::to_rat(jio::field(terms[i], "c", w), w + ".c");
        if (e.size() != static_cast<std::size_t>(nv))
            throw ParseError(w + ".exp", "exponent length != vars");
        p.add_term(e, c);
    }
    return p;
}

inline Json form_to_json(const PolyForm& f) {
    Json terms = Json::array();
    for (const auto& [idx, coeff] : f.terms())
        for (const auto& [e, c] : coeff.terms())
            terms.push_back({{"exp", e}, {"c", rat_str(c)}, {"dvars", idx}});
    return {{"vars", f.num_vars()}, {"degree", f.degree()}, {"terms", terms}};
}

inline PolyForm form_from_json(const Json& j, const std::string& where = "form") {
    int nv = jio::to_int(jio::field(j, "vars", where), where + ".vars");
    int deg = jio::to_int(jio::field(j, "degree", where), where + ".degree");
    PolyForm f(nv, deg);
    const Json& terms = jio::field(j, "terms", where);
    if (!terms.is_array()) throw ParseError(where + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string w = where + ".terms[" + std::to_string(i) + "]";
        Exponent e = jio::to_int_vec(jio::field(terms[i], "exp", w), w + ".exp");
        Rat c = jio::to_rat(jio::field(terms[i], "c", w), w + ".c");
        IndexTuple idx = jio::to_int_vec(jio::field(terms[i], "dvars", w), w + ".dvars");
        if (e.size() != static_cast<std::size_t>(nv))
            throw ParseError(w + ".exp", "exponent length != vars");
        Poly mono(nv);
        mono.add_term(e, c);
        try {
            f.add_term(idx, mono);
        } catch (const std::exception& ex) {
            throw ParseError(w, ex.what());
        }
    }
    return f;
}

inline Json polyhedron_to_json(const Polyhedron& k) {
    Json verts = Json::array();
    for (const auto& v : k.vertices) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(rat_str(c));
        verts.push_back(row);
    }
    Json simps = Json::array();
    for (const auto& s : k.simplices) simps.push_back(s);  // std::set iterates sorted
    return {{"ambient_dim", k.ambient_dim}, {"vertices", verts}, {"simplices", simps}};
}

inline Polyhedron polyhedron_from_json(const Json& j, const std::string& where = "polyhedron") {
    Polyhedron k;
    k.ambient_dim = jio::to_int(jio::field(j, "ambient_dim", where), where + ".ambient_dim");
    const Json& verts = jio::field(j, "vertices", where);
    if (!verts.is_array()) throw ParseError(where + ".vertices", "expected an array");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string w = where + ".vertices[" + std::to_string(i) + "]";
        QVec v = jio::to_qvec(verts[i], w);
        if (v.size() != static_cast<std::size_t>(k.ambient_dim))
            throw ParseError(w, "vertex length != ambient_dim");
        k.vertices.push_back(std::move(v));
    }
    const Json& simps = jio::field(j, "simplices", where);
    if (!simps.is_array()) throw ParseError(where + ".simplices", "expected an array");
    for (std::size_t i = 0; i < simps.size(); ++i) {
        std::string w = where + ".simplices[" + std::to_string(i) + "]";
        Simplex s = jio::to_int_vec(simps[i], w);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.empty())
            throw ParseError(w, "simplex must be a nonempty set of distinct vertices");
        for (int v : s)
            if (v < 0 || static_cast<std::size_t>(v) >= k.vertices.size())
                throw ParseError(w, "vertex index out of range");
        k.simplices.insert(std::move(s));
    }
    close_faces(k);  // faces may be omitted on input
    return k;
}

inline Json chain_to_json(const AffineChain& c) {
    Json terms = Json::array();
    for (const auto& t : c.terms) {
        Json verts = Json::array();
        for (const auto& v : t.vertices) {
            Json row = Json::array();
            for (const auto& x : v) row.push_back(rat_str(x));
            verts.push_back(row);
        }
        terms.push_back({{"c", rat_str(t.coeff)}, {"vertices", verts}});
    }
    return {{"ambient_dim", c.ambient_dim}, {"degree", c.degree}, {"terms", terms}};
}

inline AffineChain chain_from_json(const Json& j, const std::string& where = "chain") {
    AffineChain c;
    c.ambient_dim = jio::to_int(jio::field(j, "ambient_dim", where), where + ".ambient_dim");
    c.degree = jio::to_int(jio::field(j, "degree", where), where + ".degree");
    const Json& terms = jio::field(j, "terms", where);
    if (!terms.is_array()) throw ParseError(where + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string w = where + ".terms[" + std::to_string(i) + "]";
        AffineChain::Term t;
        t.coeff = jio::to_rat(jio::field(terms[i], "c", w), w + ".c");
        const Json& verts = jio::field(terms[i], "vertices", w);
        if (!verts.is_array()) throw ParseError(w + ".vertices", "expected an array");
        for (std::size_t vi = 0; vi < verts.size(); ++vi)
            t.vertices.push_back(
                jio::to_qvec(verts[vi], w + ".vertices[" + std::to_string(vi) + "]"));
        c.terms.push_back(std::move(t));
    }
    try {
        c.check();
    } catch (const std::exception& ex) {
        throw ParseError(where, ex.what());
    }
    return c;
}

inline Json algebra_to_json(const FinPresAlgebra& a) {
    Json j{{"kind", kind_name(a.kind)}, {"vars", a.nvars}};
    if (a.kind == AlgKind::MonomialQuotient) {
        Json gens = Json::array();
        for (const auto& g : a.ideal_monomials) gens.push_back(g);
        j["ideal_monomials"] = gens;
    }
    if (a.kind == AlgKind::UnivariateQuotient) j["modulus"] = poly_to_json(a.modulus);
    return j;
}

inline FinPresAlgebra algebra_from_json(const Json& j, const std::string& where = "algebra") {
    std::string kind = jio::field(j, "kind", where).is_string()
                           ? jio::field(j, "kind", where).get<std::string>()
                           : throw ParseError(where + ".kind", "expected a string");
    int nv = jio::to_int(jio::field(j, "vars", where), where + ".vars");
    try {
        if (kind == "polynomial") return FinPresAlgebra::polynomial(nv);
        if (kind == "laurent") return FinPresAlgebra::laurent(nv);
        if (kind == "monomial_quotient") {
            const Json& gens = jio::field(j, "ideal_monomials", where);
            if (!gens.is_array()) throw ParseError(where + ".ideal_monomials", "expected an array");
            std::vector<Exponent> idl;
            for (std::size_t i = 0; i < gens.size(); ++i)
                idl.push_back(jio::to_int_vec(
                    gens[i], where + ".ideal_monomials[" + std::to_string(i) + "]"));
            return FinPresAlgebra::monomial_quotient(nv, std::move(idl));
        }
        if (kind == "univariate_quotient") {
            Poly mod = poly_from_json(jio::field(j, "modulus", where), where + ".modulus");
            return FinPresAlgebra::univariate_quotient(std::move(mod));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ParseError(where, ex.what());
    }
    throw ParseError(where + ".kind", "unknown kind '" + kind + "'");
}

inline Json piecewise_to_json(const PiecewiseForm& w) {
    Json pieces = Json::array();
    for (const auto& [s, f] : w.pieces)
        pieces.push_back({{"simplex", s}, {"form", form_to_json(f)}});
    return {{"polyhedron", polyhedron_to_json(w.base)},
            {"degree", w.degree},
            {"pieces", pieces}};
}

inline PiecewiseForm piecewise_from_json(const Json& j, const std::string& where = "piecewise") {
    PiecewiseForm w;
    w.base = polyhedron_from_json(jio::field(j, "polyhedron", where), where + ".polyhedron");
    w.degree = jio::to_int(jio::field(j, "degree", where), where + ".degree");
    const Json& pieces = jio::field(j, "pieces", where);
    if (!pieces.is_array()) throw ParseError(where + ".pieces", "expected an array");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string pw = where + ".pieces[" + std::to_string(i) + "]";
        Simplex s = jio::to_int_vec(jio::field(pieces[i], "simplex", pw), pw + ".simplex");
        PolyForm f = form_from_json(jio::field(pieces[i], "form", pw), pw + ".form");
        if (f.num_vars() != w.base.ambient_dim)
            throw ParseError(pw + ".form", "form variables != ambient dimension");
        if (f.degree() != w.degree) throw ParseError(pw + ".form", "piece degree mismatch");
        if (!w.base.simplices.count(s)) throw ParseError(pw + ".simplex", "not in the complex");
        w.pieces.emplace(std::move(s), std::move(f));
    }
    for (const auto& a : maximal_simplices(w.base))
        if (!w.pieces.count(a))
            throw ParseError(where, "missing piece for maximal simplex");
    return w;
}

inline Json betti_to_json(const BettiReport& r) {
    return {{"dims", r.dims},
            {"rank_d", r.rank_d},
            {"betti", r.betti},
            {"truncation_bound", r.truncation_bound},
            {"stabilized", r.stabilized}};
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path, e.what());  // nlohmann reports byte offsets
    }
}

}  // namespace derham

#endif
