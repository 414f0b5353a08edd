#include "lieder/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>

namespace lieder::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(path, std::string("missing \"") + key + "\"");
    return *it;
}

const Json* optional_field(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    const auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t size_field(const Json& j, const std::string& path, const char* key) {
    return size_from_json(field(j, path, key), child(path, key));
}

std::size_t index_from_text(std::string_view s, std::size_t bound, const std::string& path) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw ParseError(path, "bad index \"" + std::string(s) + "\"");
    }
    if (v >= bound) throw ParseError(path, "index " + std::to_string(v) + " out of range (dim " + std::to_string(bound) + ")");
    return v;
}

std::vector<std::size_t> tuple_from_key(const std::string& key, char sep, std::size_t bound, const std::string& path) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    for (;;) {
        const auto stop = key.find(sep, start);
        out.push_back(index_from_text(std::string_view(key).substr(start, stop - start), bound, path));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return out;
}

Vector vector_from_json(const Json& j, const std::string& path, std::size_t length) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    if (j.size() != length) {
        throw ParseError(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    }
    Vector v(length);
    for (std::size_t i = 0; i < length; ++i) v[i] = rational_from_json(j[i], child(path, i));
    return v;
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string tuple_key(const std::vector<std::size_t>& t, char sep) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(t[i]);
    }
    return s;
}

Cochain cochain_with_shape(const Json& j, const std::string& path, std::size_t degree, std::size_t g,
                           std::size_t v) {
    Cochain c = cochain_from_json(j, path);
    if (c.degree() != degree || c.g_dim() != g || c.v_dim() != v) {
        throw ParseError(path, "expected a degree-" + std::to_string(degree) + " cochain on dim " +
                                   std::to_string(g) + " with values in dim " + std::to_string(v));
    }
    return c;
}

LieDerPair pair_of(const Json& j, const std::string& path) { return algebra_from_json(j, path).pair; }

}  // namespace

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON at byte ") + std::to_string(e.byte));
    }
}

Json read_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("", "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_text(text);
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (!j.is_string()) throw ParseError(path, "expected a rational string such as \"3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

Json to_json(const Rational& r) { return to_string(r); }

Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw ParseError(path, "expected an array of rows");
    if (j.size() != rows) {
        throw ParseError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vector row = vector_from_json(j[r], child(path, r), cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Cochain cochain_from_json(const Json& j, const std::string& path) {
    const std::size_t degree = size_field(j, path, "degree");
    const std::size_t g = size_field(j, path, "g_dim");
    const std::size_t v = size_field(j, path, "v_dim");
    Cochain c(degree, g, v);
    const Json* values = optional_field(j, path, "values");
    if (!values) return c;
    const std::string vpath = child(path, "values");
    if (!values->is_object()) throw ParseError(vpath, "expected an object keyed by \"i^j^...\"");
    std::vector<bool> seen(c.basis().size(), false);
    for (const auto& [key, val] : values->items()) {
        const std::string kpath = child(vpath, key);
        const auto t = degree == 0 ? std::vector<std::size_t>{} : tuple_from_key(key, '^', g, kpath);
        if (degree == 0 ? !key.empty() : t.size() != degree) {
            throw ParseError(kpath, "expected " + std::to_string(degree) + " indices");
        }
        const auto r = c.basis().reduce(t);
        if (!r) throw ParseError(kpath, "repeated index");
        if (seen[r->position]) throw ParseError(kpath, "tuple given twice");
        seen[r->position] = true;
        c.set(t, vector_from_json(val, kpath, v));
    }
    return c;
}

Json to_json(const Cochain& c) {
    Json values = Json::object();
    for (std::size_t pos = 0; pos < c.basis().size(); ++pos) {
        const auto val = c.value(pos);
        if (is_zero(val)) continue;
        values[tuple_key(c.basis().tuple(pos), '^')] = to_json(Vector(val.begin(), val.end()));
    }
    return {{"degree", c.degree()}, {"g_dim", c.g_dim()}, {"v_dim", c.v_dim()}, {"values", values}};
}

CochainPair cochain_pair_from_json(const Json& j, const std::string& path) {
    const std::size_t degree = size_field(j, path, "degree");
    if (degree == 0) throw ParseError(child(path, "degree"), "LieDer cochains start in degree 1");
    Cochain f = cochain_from_json(field(j, path, "f"), child(path, "f"));
    if (f.degree() != degree) throw ParseError(child(path, "f"), "degree differs from the pair");
    if (degree == 1) {
        if (optional_field(j, path, "g")) throw ParseError(child(path, "g"), "degree-1 pairs have no g");
        return CochainPair(std::move(f));
    }
    Cochain g = cochain_with_shape(field(j, path, "g"), child(path, "g"), degree - 1, f.g_dim(), f.v_dim());
    return CochainPair(std::move(f), std::move(g));
}

Json to_json(const CochainPair& c) {
    Json out = {{"degree", c.degree()}};
    if (c.has_f()) out["f"] = to_json(c.f());
    if (c.has_g()) out["g"] = to_json(c.g());
    return out;
}

AlgebraFile algebra_from_json(const Json& j, const std::string& path) {
    const std::size_t dim = size_field(j, path, "dim");
    std::vector<std::string> names;
    if (const Json* b = optional_field(j, path, "basis")) {
        const std::string bpath = child(path, "basis");
        if (!b->is_array() || b->size() != dim) throw ParseError(bpath, "expected " + std::to_string(dim) + " names");
        for (std::size_t i = 0; i < dim; ++i) {
            if (!(*b)[i].is_string()) throw ParseError(child(bpath, i), "expected a string");
            names.push_back((*b)[i].get<std::string>());
        }
    }
    AlgebraFile out;
    out.pair.algebra = LieAlgebra(dim, std::move(names));
    if (const Json* br = optional_field(j, path, "brackets")) {
        const std::string bpath = child(path, "brackets");
        if (!br->is_object()) throw ParseError(bpath, "expected an object keyed by \"i,j\"");
        for (const auto& [key, val] : br->items()) {
            const std::string kpath = child(bpath, key);
            const auto t = tuple_from_key(key, ',', dim, kpath);
            if (t.size() != 2) throw ParseError(kpath, "expected \"i,j\"");
            if (t[0] >= t[1]) throw ParseError(kpath, "brackets are listed for i < j");
            if (!val.is_object()) throw ParseError(kpath, "expected an object keyed by output index");
            Vector v(dim);
            for (const auto& [k, coeff] : val.items()) {
                v[index_from_text(k, dim, child(kpath, k))] = rational_from_json(coeff, child(kpath, k));
            }
            out.pair.algebra.set_bracket(t[0], t[1], v);
        }
    }
    out.pair.phi = Matrix(dim, dim);
    if (const Json* d = optional_field(j, path, "derivation")) {
        out.pair.phi = matrix_from_json(*d, child(path, "derivation"), dim, dim);
    }
    if (const Json* r = optional_field(j, path, "representation")) {
        const std::string rpath = child(path, "representation");
        LieDerRepresentation rep;
        rep.dim = size_field(*r, rpath, "dim");
        rep.rho.assign(dim, Matrix(rep.dim, rep.dim));
        rep.phi = Matrix(rep.dim, rep.dim);
        if (const Json* rho = optional_field(*r, rpath, "rho")) {
            const std::string ppath = child(rpath, "rho");
            if (!rho->is_array() || rho->size() != dim) {
                throw ParseError(ppath, "expected " + std::to_string(dim) + " matrices");
            }
            for (std::size_t i = 0; i < dim; ++i) {
                rep.rho[i] = matrix_from_json((*rho)[i], child(ppath, i), rep.dim, rep.dim);
            }
        }
        if (const Json* phi = optional_field(*r, rpath, "phi")) {
            rep.phi = matrix_from_json(*phi, child(rpath, "phi"), rep.dim, rep.dim);
        }
        out.representation = std::move(rep);
    }
    return out;
}

AlgebraFile parse_algebra(std::string_view text) { return algebra_from_json(parse_text(text)); }

Json to_json(const LieAlgebra& a) {
    Json brackets = Json::object();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const Vector v = a.bracket(i, j);
            Json entry = Json::object();
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!is_zero(v[k])) entry[std::to_string(k)] = to_json(v[k]);
            if (!entry.empty()) brackets[std::to_string(i) + "," + std::to_string(j)] = entry;
        }
    return {{"dim", a.dim()}, {"basis", a.basis_names()}, {"brackets", brackets}};
}

Json to_json(const LieDerPair& p) {
    Json out = to_json(p.algebra);
    out["derivation"] = to_json(p.phi);
    return out;
}

Json to_json(const AlgebraFile& a) {
    Json out = to_json(a.pair);
    if (a.representation) {
        Json rho = Json::array();
        for (const auto& m : a.representation->rho) rho.push_back(to_json(m));
        out["representation"] = {{"dim", a.representation->dim}, {"rho", rho}, {"phi", to_json(a.representation->phi)}};
    }
    return out;
}

Json to_json(const Report& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json e = {{"rule", v.rule}, {"indices", v.indices}};
        if (!v.detail.empty()) e["detail"] = v.detail;
        violations.push_back(std::move(e));
    }
    return {{"ok", r.ok()}, {"violations", violations}};
}

Json to_json(const CohomologyReport& r) {
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(to_json(c));
    return {{"degree", r.degree},
            {"dim_cochains", r.dim_cochains},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_H", r.dim_H},
            {"representatives", reps}};
}

Json to_json(const CeCohomologyReport& r) {
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(to_json(c));
    return {{"degree", r.degree},
            {"dim_cochains", r.dim_cochains},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_H", r.dim_H},
            {"representatives", reps}};
}

TruncatedDeformation deformation_from_json(const Json& j, const std::string& path, const LieDerPair& base) {
    const std::size_t order = size_field(j, path, "order");
    const std::size_t g = base.dim();
    const Json& om = field(j, path, "omega");
    const Json& ph = field(j, path, "phi");
    const std::string opath = child(path, "omega"), ppath = child(path, "phi");
    if (!om.is_array()) throw ParseError(opath, "expected an array of cochains");
    if (!ph.is_array()) throw ParseError(ppath, "expected an array of cochains");
    if (om.size() != ph.size()) throw ParseError(path, "omega and phi have different lengths");
    std::size_t offset = 0;
    if (om.size() == order) {
        offset = 1;
    } else if (om.size() != order + 1) {
        throw ParseError(opath, "expected " + std::to_string(order) + " or " + std::to_string(order + 1) + " terms");
    }
    TruncatedDeformation d;
    if (offset == 1) {
        d.omegas.push_back(bracket_cochain(base.algebra));
        d.phis.push_back(linear_map_cochain(base.phi));
    }
    for (std::size_t i = 0; i < om.size(); ++i) {
        d.omegas.push_back(cochain_with_shape(om[i], child(opath, i), 2, g, g));
        d.phis.push_back(cochain_with_shape(ph[i], child(ppath, i), 1, g, g));
    }
    return d;
}

Json to_json(const TruncatedDeformation& d) {
    Json om = Json::array(), ph = Json::array();
    for (const auto& c : d.omegas) om.push_back(to_json(c));
    for (const auto& c : d.phis) ph.push_back(to_json(c));
    return {{"order", d.order()}, {"omega", om}, {"phi", ph}};
}

FormalIso iso_from_json(const Json& j, const std::string& path, std::size_t dim) {
    const std::size_t order = size_field(j, path, "order");
    const Json& maps = field(j, path, "maps");
    const std::string mpath = child(path, "maps");
    if (!maps.is_array()) throw ParseError(mpath, "expected an array of matrices");
    FormalIso f;
    if (maps.size() == order) {
        f.maps.push_back(Matrix::identity(dim));
    } else if (maps.size() != order + 1) {
        throw ParseError(mpath, "expected " + std::to_string(order) + " or " + std::to_string(order + 1) + " maps");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) f.maps.push_back(matrix_from_json(maps[i], child(mpath, i), dim, dim));
    return f;
}

Json to_json(const FormalIso& f) {
    Json maps = Json::array();
    for (const auto& m : f.maps) maps.push_back(to_json(m));
    return {{"order", f.order()}, {"maps", maps}};
}

CentralCocycle central_cocycle_from_json(const Json& j, const std::string& path) {
    Cochain psi = cochain_from_json(field(j, path, "psi"), child(path, "psi"));
    if (psi.degree() != 2) throw ParseError(child(path, "psi"), "expected degree 2");
    Cochain chi = cochain_with_shape(field(j, path, "chi"), child(path, "chi"), 1, psi.g_dim(), psi.v_dim());
    return {std::move(psi), std::move(chi)};
}

Json to_json(const CentralCocycle& c) { return {{"psi", to_json(c.psi)}, {"chi", to_json(c.chi)}}; }

CentralExtension central_extension_from_json(const Json& j, const std::string& path) {
    CentralExtension e;
    e.total = pair_of(field(j, path, "total"), child(path, "total")).algebra;
    e.base = pair_of(field(j, path, "base"), child(path, "base")).algebra;
    e.fiber_dim = size_field(j, path, "fiber_dim");
    e.projection = matrix_from_json(field(j, path, "projection"), child(path, "projection"), e.base.dim(), e.total.dim());
    e.inclusion = matrix_from_json(field(j, path, "inclusion"), child(path, "inclusion"), e.total.dim(), e.fiber_dim);
    return e;
}

LieDerCentralExtension lieder_central_extension_from_json(const Json& j, const std::string& path) {
    LieDerCentralExtension e;
    e.algebras = central_extension_from_json(j, path);
    e.phi_total = pair_of(field(j, path, "total"), child(path, "total")).phi;
    e.phi_base = pair_of(field(j, path, "base"), child(path, "base")).phi;
    e.phi_fiber = Matrix(e.algebras.fiber_dim, e.algebras.fiber_dim);
    if (const Json* f = optional_field(j, path, "fiber_phi")) {
        e.phi_fiber = matrix_from_json(*f, child(path, "fiber_phi"), e.algebras.fiber_dim, e.algebras.fiber_dim);
    }
    return e;
}

Json to_json(const CentralExtension& e) {
    return {{"total", to_json(e.total)},
            {"base", to_json(e.base)},
            {"fiber_dim", e.fiber_dim},
            {"projection", to_json(e.projection)},
            {"inclusion", to_json(e.inclusion)}};
}

Json to_json(const LieDerCentralExtension& e) {
    Json out = to_json(e.algebras);
    out["total"] = to_json(e.total_pair());
    out["base"] = to_json(e.base_pair());
    out["fiber_phi"] = to_json(e.phi_fiber);
    return out;
}

SkeletalLie2 skeletal_from_json(const Json& j, const std::string& path) {
    SkeletalLie2 s;
    s.dim0 = size_field(j, path, "dim0");
    s.dim1 = size_field(j, path, "dim1");
    s.l2_00 = cochain_with_shape(field(j, path, "l2_00"), child(path, "l2_00"), 2, s.dim0, s.dim0);
    const Json& act = field(j, path, "l2_01");
    const std::string apath = child(path, "l2_01");
    if (!act.is_array() || act.size() != s.dim0) throw ParseError(apath, "expected " + std::to_string(s.dim0) + " matrices");
    for (std::size_t i = 0; i < s.dim0; ++i) s.l2_01.push_back(matrix_from_json(act[i], child(apath, i), s.dim1, s.dim1));
    s.l3 = cochain_with_shape(field(j, path, "l3"), child(path, "l3"), 3, s.dim0, s.dim1);
    return s;
}

Json to_json(const SkeletalLie2& s) {
    Json act = Json::array();
    for (const auto& m : s.l2_01) act.push_back(to_json(m));
    return {{"dim0", s.dim0}, {"dim1", s.dim1}, {"l2_00", to_json(s.l2_00)}, {"l2_01", act}, {"l3", to_json(s.l3)}};
}

Lie2Derivation lie2_derivation_from_json(const Json& j, const std::string& path) {
    Lie2Derivation d;
    const Json& x0 = field(j, path, "X0");
    const Json& x1 = field(j, path, "X1");
    const std::size_t n0 = x0.is_array() ? x0.size() : 0, n1 = x1.is_array() ? x1.size() : 0;
    d.X0 = matrix_from_json(x0, child(path, "X0"), n0, n0);
    d.X1 = matrix_from_json(x1, child(path, "X1"), n1, n1);
    d.lX = cochain_with_shape(field(j, path, "lX"), child(path, "lX"), 2, n0, n1);
    return d;
}

Json to_json(const Lie2Derivation& d) { return {{"X0", to_json(d.X0)}, {"X1", to_json(d.X1)}, {"lX", to_json(d.lX)}}; }

Triple triple_from_json(const Json& j, const std::string& path) {
    const std::string apath = child(path, "algebra");
    AlgebraFile a = algebra_from_json(field(j, path, "algebra"), apath);
    if (!a.representation) throw ParseError(apath, "missing \"representation\"");
    const std::string cpath = child(path, "cocycle");
    CochainPair c = cochain_pair_from_json(field(j, path, "cocycle"), cpath);
    if (c.degree() != 3 || c.g_dim() != a.pair.dim() || c.v_dim() != a.representation->dim) {
        throw ParseError(cpath, "expected a degree-3 pair over the algebra with values in the representation");
    }
    return {std::move(a.pair), std::move(*a.representation), std::move(c)};
}

Json to_json(const Triple& t) { return {{"algebra", to_json(AlgebraFile{t.pair, t.rep})}, {"cocycle", to_json(t.cocycle)}}; }

EquivalenceWitness witness_from_json(const Json& j, const std::string& path) {
    EquivalenceWitness w;
    w.gamma = cochain_from_json(field(j, path, "gamma"), child(path, "gamma"));
    if (w.gamma.degree() != 2) throw ParseError(child(path, "gamma"), "expected degree 2");
    const std::size_t g = w.gamma.g_dim(), v = w.gamma.v_dim();
    w.alpha = matrix_from_json(field(j, path, "alpha"), child(path, "alpha"), g, g);
    w.beta = matrix_from_json(field(j, path, "beta"), child(path, "beta"), v, v);
    w.eta = matrix_from_json(field(j, path, "eta"), child(path, "eta"), v, g);
    return w;
}

Json to_json(const EquivalenceWitness& w) {
    return {{"alpha", to_json(w.alpha)}, {"beta", to_json(w.beta)}, {"gamma", to_json(w.gamma)}, {"eta", to_json(w.eta)}};
}

}  // namespace lieder::io
