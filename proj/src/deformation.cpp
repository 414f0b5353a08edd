#include "lieder/deformation.hpp"

#include "lieder/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace lieder {

namespace {

Vector ev2(const Cochain& w, const Vector& x, const Vector& y) {
    return evaluate(w, std::vector<Vector>{x, y});
}

void validate_shape(const LieDerPair& p, const TruncatedDeformation& d) {
    const std::size_t g = p.dim();
    if (d.omegas.empty() || d.omegas.size() != d.phis.size()) {
        throw std::invalid_argument("deformation needs equally many omega and phi terms, at least one");
    }
    for (std::size_t i = 0; i < d.omegas.size(); ++i) {
        const Cochain& w = d.omegas[i];
        const Cochain& f = d.phis[i];
        if (w.degree() != 2 || w.g_dim() != g || w.v_dim() != g) {
            throw std::invalid_argument("omega_" + std::to_string(i) + " is not a g-valued 2-cochain");
        }
        if (f.degree() != 1 || f.g_dim() != g || f.v_dim() != g) {
            throw std::invalid_argument("phi_" + std::to_string(i) + " is not a g-valued 1-cochain");
        }
    }
    if (d.omegas[0] != bracket_cochain(p.algebra)) {
        throw std::invalid_argument("omega_0 differs from the bracket of the base pair");
    }
    if (d.phis[0] != linear_map_cochain(p.phi)) {
        throw std::invalid_argument("phi_0 differs from the derivation of the base pair");
    }
}

void require_valid(const LieDerPair& p, const TruncatedDeformation& d) {
    const Report r = check_deformation(p, d);
    if (!r.ok()) throw PreconditionError("not a valid deformation", r);
}

Matrix padded(const FormalIso& f, std::size_t k, std::size_t dim) {
    if (k < f.maps.size()) return f.maps[k];
    return Matrix(dim, dim);
}

/// sum_{i+j=total, i,j>=1} omega_i(omega_j(x,y),z) + cyclic
Vector jacobi_sum(const TruncatedDeformation& d, std::size_t total, std::size_t lo, const Vector& x,
                  const Vector& y, const Vector& z) {
    Vector s(x.size());
    for (std::size_t i = lo; i + lo <= total; ++i) {
        const std::size_t j = total - i;
        if (i >= d.omegas.size() || j >= d.omegas.size()) continue;
        const Cochain& wi = d.omegas[i];
        const Cochain& wj = d.omegas[j];
        s = add(s, ev2(wi, ev2(wj, x, y), z));
        s = add(s, ev2(wi, ev2(wj, y, z), x));
        s = add(s, ev2(wi, ev2(wj, z, x), y));
    }
    return s;
}

/// sum_{i+j=total} phi_i omega_j(x,y) - omega_j(phi_i x,y) - omega_j(x,phi_i y)
Vector derivation_sum(const TruncatedDeformation& d, std::size_t total, std::size_t lo, const Vector& x,
                      const Vector& y) {
    Vector s(x.size());
    for (std::size_t i = lo; i + lo <= total; ++i) {
        const std::size_t j = total - i;
        if (i >= d.phis.size() || j >= d.omegas.size()) continue;
        const Cochain& fi = d.phis[i];
        const Cochain& wj = d.omegas[j];
        s = add(s, evaluate(fi, std::vector<Vector>{ev2(wj, x, y)}));
        s = subtract(s, ev2(wj, evaluate(fi, std::vector<Vector>{x}), y));
        s = subtract(s, ev2(wj, x, evaluate(fi, std::vector<Vector>{y})));
    }
    return s;
}

void assert_closed(const LieDerPair& p, const CochainPair& c, const char* what) {
    if (!partial(c, p, adjoint_representation(p)).is_zero()) {
        throw std::logic_error(std::string(what) + " is not closed");
    }
}

}  // namespace

TruncatedDeformation trivial_deformation(const LieDerPair& p, std::size_t order) {
    const std::size_t g = p.dim();
    TruncatedDeformation d;
    d.omegas.push_back(bracket_cochain(p.algebra));
    d.phis.push_back(linear_map_cochain(p.phi));
    for (std::size_t i = 1; i <= order; ++i) {
        d.omegas.emplace_back(2, g, g);
        d.phis.emplace_back(1, g, g);
    }
    return d;
}

FormalIso identity_iso(std::size_t dim, std::size_t order) {
    FormalIso f;
    f.maps.push_back(Matrix::identity(dim));
    for (std::size_t i = 1; i <= order; ++i) f.maps.emplace_back(dim, dim);
    return f;
}

FormalIso compose(const FormalIso& f, const FormalIso& g) {
    if (f.maps.empty() || g.maps.empty()) throw std::invalid_argument("empty formal isomorphism");
    const std::size_t dim = f.maps[0].rows();
    const std::size_t n = std::max(f.order(), g.order());
    FormalIso out;
    for (std::size_t k = 0; k <= n; ++k) {
        Matrix m(dim, dim);
        for (std::size_t i = 0; i <= k; ++i) m += padded(f, i, dim) * padded(g, k - i, dim);
        out.maps.push_back(std::move(m));
    }
    return out;
}

FormalIso inverse(const FormalIso& f) {
    if (f.maps.empty()) throw std::invalid_argument("empty formal isomorphism");
    const std::size_t dim = f.maps[0].rows();
    if (f.maps[0] != Matrix::identity(dim)) throw std::invalid_argument("formal isomorphism must start with Id");
    FormalIso out;
    out.maps.push_back(Matrix::identity(dim));
    for (std::size_t k = 1; k <= f.order(); ++k) {
        Matrix m(dim, dim);
        for (std::size_t j = 1; j <= k; ++j) m -= f.maps[j] * out.maps[k - j];
        out.maps.push_back(std::move(m));
    }
    return out;
}

Report check_deformation(const LieDerPair& p, const TruncatedDeformation& d) {
    validate_shape(p, d);
    Report report;
    const std::size_t g = p.dim();
    for (std::size_t i = 0; i <= d.order(); ++i) {
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = a + 1; b < g; ++b) {
                const Vector x = basis_vector(g, a), y = basis_vector(g, b);
                if (!is_zero(derivation_sum(d, i, 0, x, y))) {
                    report.add("derivation", {i, a, b}, "coefficient of t^" + std::to_string(i));
                }
                for (std::size_t c = b + 1; c < g; ++c) {
                    if (!is_zero(jacobi_sum(d, i, 0, x, y, basis_vector(g, c)))) {
                        report.add("jacobi", {i, a, b, c}, "coefficient of t^" + std::to_string(i));
                    }
                }
            }
    }
    return report;
}

CochainPair infinitesimal(const LieDerPair& p, const TruncatedDeformation& d) {
    require_valid(p, d);
    if (d.order() < 1) throw std::invalid_argument("infinitesimal needs a deformation of order >= 1");
    CochainPair out(d.omegas[1], d.phis[1]);
    assert_closed(p, out, "infinitesimal");
    return out;
}

TruncatedDeformation apply_iso(const LieDerPair& p, const TruncatedDeformation& d, const FormalIso& f) {
    validate_shape(p, d);
    const std::size_t g = p.dim();
    const std::size_t n = d.order();
    if (f.maps.empty() || f.maps[0] != Matrix::identity(g)) {
        throw std::invalid_argument("formal isomorphism must start with Id of the right size");
    }
    FormalIso phi;
    for (std::size_t k = 0; k <= n; ++k) phi.maps.push_back(padded(f, k, g));
    const FormalIso psi = inverse(phi);

    std::vector<Matrix> ph;
    for (const auto& c : d.phis) ph.push_back(cochain_matrix(c));

    TruncatedDeformation out;
    for (std::size_t m = 0; m <= n; ++m) {
        out.omegas.emplace_back(2, g, g);
        Matrix pm(g, g);
        for (std::size_t a = 0; a <= m; ++a)
            for (std::size_t b = 0; a + b <= m; ++b) pm += psi.maps[a] * ph[b] * phi.maps[m - a - b];
        out.phis.push_back(linear_map_cochain(pm));
    }

    const auto& basis = wedge_basis(g, 2);
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& t = basis.tuple(pos);
        // W_k = sum_{b+c+e=k} omega_b(Phi_c x, Phi_e y)
        std::vector<Vector> w(n + 1, Vector(g));
        for (std::size_t c = 0; c <= n; ++c) {
            const Vector x = phi.maps[c].column(t[0]);
            if (is_zero(x)) continue;
            for (std::size_t e = 0; c + e <= n; ++e) {
                const Vector y = phi.maps[e].column(t[1]);
                if (is_zero(y)) continue;
                for (std::size_t b = 0; b + c + e <= n; ++b) w[b + c + e] = add(w[b + c + e], ev2(d.omegas[b], x, y));
            }
        }
        for (std::size_t m = 0; m <= n; ++m) {
            Vector v(g);
            for (std::size_t a = 0; a <= m; ++a) v = add(v, psi.maps[a].apply(w[m - a]));
            std::copy(v.begin(), v.end(), out.omegas[m].value(pos).begin());
        }
    }
    return out;
}

CochainPair obstruction(const LieDerPair& p, const TruncatedDeformation& d) {
    require_valid(p, d);
    const std::size_t g = p.dim();
    const std::size_t total = d.order() + 1;
    Cochain ob3(3, g, g);
    Cochain ob2(2, g, g);
    for (std::size_t pos = 0; pos < ob3.basis().size(); ++pos) {
        const auto& t = ob3.basis().tuple(pos);
        const Vector v = jacobi_sum(d, total, 1, basis_vector(g, t[0]), basis_vector(g, t[1]),
                                    basis_vector(g, t[2]));
        std::copy(v.begin(), v.end(), ob3.value(pos).begin());
    }
    for (std::size_t pos = 0; pos < ob2.basis().size(); ++pos) {
        const auto& t = ob2.basis().tuple(pos);
        const Vector v = derivation_sum(d, total, 1, basis_vector(g, t[0]), basis_vector(g, t[1]));
        std::copy(v.begin(), v.end(), ob2.value(pos).begin());
    }
    CochainPair out(ob3, ob2);
    assert_closed(p, out, "obstruction");
    return out;
}

CochainPair obstruction_nr(const LieDerPair& p, const TruncatedDeformation& d) {
    require_valid(p, d);
    const std::size_t g = p.dim();
    const std::size_t total = d.order() + 1;
    Cochain ob3(3, g, g);
    Cochain ob2(2, g, g);
    for (std::size_t i = 1; i < total; ++i) {
        const std::size_t j = total - i;
        ob3 += nr_bracket(d.omegas[i], d.omegas[j]);
        ob2 += nr_bracket(d.phis[i], d.omegas[j]);
    }
    return CochainPair(Rational(1, 2) * ob3, ob2);
}

std::optional<DeformationExtension> extend_deformation(const LieDerPair& p, const TruncatedDeformation& d) {
    const CochainPair ob = obstruction(p, d);
    const auto x = solve(coboundary_matrix(p, adjoint_representation(p), 2), ob.to_vector());
    if (!x) return std::nullopt;
    DeformationExtension out{CochainPair::from_vector(2, p.dim(), p.dim(), *x), d};
    out.extended.omegas.push_back(out.terms.f());
    out.extended.phis.push_back(out.terms.g());
    return out;
}

Trivialization trivialization(const LieDerPair& p, const TruncatedDeformation& d, std::size_t max_order) {
    require_valid(p, d);
    const std::size_t g = p.dim();
    const std::size_t n = d.order();
    max_order = std::min(max_order, n);
    const auto rep = adjoint_representation(p);
    const Matrix d1 = coboundary_matrix(p, rep, 1);

    FormalIso total = identity_iso(g, n);
    TruncatedDeformation current = d;
    for (std::size_t k = 1; k <= max_order; ++k) {
        const CochainPair term(current.omegas[k], current.phis[k]);
        if (term.is_zero()) continue;
        const auto x = solve(d1, scale(-1, term.to_vector()));
        if (!x) return {total, term, k};
        FormalIso step = identity_iso(g, n);
        step.maps[k] = cochain_matrix(Cochain(1, g, g, *x));
        current = apply_iso(p, current, step);
        total = compose(total, step);
    }
    return {total, std::nullopt, 0};
}

std::optional<FormalIso> trivialize(const LieDerPair& p, const TruncatedDeformation& d, std::size_t max_order) {
    Trivialization t = trivialization(p, d, max_order);
    if (!t.complete()) return std::nullopt;
    return std::move(t.iso);
}

bool is_rigid(const LieDerPair& p) {
    return lieder_cohomology(p, adjoint_representation(p), 2).dim_H == 0;
}

}  // namespace lieder
