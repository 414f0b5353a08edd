#include "lieder/extension.hpp"

#include <stdexcept>
#include <string>

namespace lieder {

namespace {

Representation trivial_module(std::size_t g_dim, std::size_t fiber_dim) {
    Representation r;
    r.dim = fiber_dim;
    r.rho.assign(g_dim, Matrix(fiber_dim, fiber_dim));
    return r;
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
}

void require_section(const CentralExtension& e, const Matrix& s) {
    require_shape(s, e.total.dim(), e.base.dim(), "section");
    if (e.projection * s != Matrix::identity(e.base.dim())) {
        Report r;
        r.add("section", {}, "p s != Id");
        throw PreconditionError("not a section of the projection", r);
    }
}

/// h-coordinates of a total-space vector lying in the image of the inclusion.
Vector fiber_coordinates(const CentralExtension& e, const Vector& v) {
    const auto h = solve(e.inclusion, v);
    if (!h) throw std::logic_error("vector expected in the image of the inclusion");
    return *h;
}

}  // namespace

LieDerRepresentation fiber_representation(const LieDerPair& base, const Matrix& phi_fiber) {
    return trivial_representation(base.dim(), phi_fiber);
}

Report verify_central_cocycle(const LieDerPair& base, const Matrix& phi_fiber, const CentralCocycle& c) {
    const std::size_t g = base.dim();
    const std::size_t k = phi_fiber.rows();
    require_shape(phi_fiber, k, k, "phi_h");
    if (c.psi.degree() != 2 || c.chi.degree() != 1 || c.psi.g_dim() != g || c.chi.g_dim() != g ||
        c.psi.v_dim() != k || c.chi.v_dim() != k) {
        throw std::invalid_argument("central cocycle shapes do not match base and fiber");
    }
    Report report;
    const auto ev = [](const Cochain& f, std::vector<Vector> args) { return evaluate(f, args); };
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            const Vector x = basis_vector(g, a), y = basis_vector(g, b);
            Vector p2 = ev(c.chi, {base.algebra.bracket(a, b)});
            p2 = add(p2, phi_fiber.apply(ev(c.psi, {x, y})));
            p2 = subtract(p2, ev(c.psi, {base.phi.column(a), y}));
            p2 = subtract(p2, ev(c.psi, {x, base.phi.column(b)}));
            if (!is_zero(p2)) report.add("p2", {a, b});
            for (std::size_t cc = b + 1; cc < g; ++cc) {
                const Vector z = basis_vector(g, cc);
                Vector p1 = ev(c.psi, {base.algebra.bracket(a, b), z});
                p1 = add(p1, ev(c.psi, {base.algebra.bracket(b, cc), x}));
                p1 = add(p1, ev(c.psi, {base.algebra.bracket(cc, a), y}));
                if (!is_zero(p1)) report.add("p1", {a, b, cc});
            }
        }
    return report;
}

LieDerCentralExtension build_central_extension(const LieDerPair& base, const Matrix& phi_fiber,
                                               const CentralCocycle& c) {
    const Report base_check = verify_pair(base);
    if (!base_check.ok()) throw PreconditionError("base is not a LieDer pair", base_check);
    const Report check = verify_central_cocycle(base, phi_fiber, c);
    if (!check.ok()) {
        std::string which = check.has_rule("p1") ? "p1" : "p2";
        if (check.has_rule("p1") && check.has_rule("p2")) which = "p1, p2";
        throw PreconditionError("central cocycle violates " + which, check);
    }
    const std::size_t g = base.dim();
    const std::size_t k = phi_fiber.rows();
    std::vector<std::string> names = base.algebra.basis_names();
    for (std::size_t i = 0; i < k; ++i) names.push_back("h" + std::to_string(i + 1));

    LieDerCentralExtension e;
    e.algebras.total = LieAlgebra(g + k, std::move(names));
    e.algebras.base = base.algebra;
    e.algebras.fiber_dim = k;
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            Vector v(g + k);
            const Vector br = base.algebra.bracket(a, b);
            const Vector ps = c.psi.at({a, b});
            std::copy(br.begin(), br.end(), v.begin());
            std::copy(ps.begin(), ps.end(), v.begin() + static_cast<std::ptrdiff_t>(g));
            e.algebras.total.set_bracket(a, b, v);
        }
    e.algebras.projection = Matrix(g, g + k);
    e.algebras.inclusion = Matrix(g + k, k);
    for (std::size_t a = 0; a < g; ++a) e.algebras.projection(a, a) = 1;
    for (std::size_t i = 0; i < k; ++i) e.algebras.inclusion(g + i, i) = 1;

    e.phi_total = Matrix(g + k, g + k);
    for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = 0; b < g; ++b) e.phi_total(a, b) = base.phi(a, b);
        const Vector chi = c.chi.at({a});
        for (std::size_t i = 0; i < k; ++i) e.phi_total(g + i, a) = chi[i];
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) e.phi_total(g + i, g + j) = phi_fiber(i, j);
    e.phi_base = base.phi;
    e.phi_fiber = phi_fiber;
    return e;
}

Report verify_central_extension(const CentralExtension& e) {
    const std::size_t n = e.total.dim();
    const std::size_t g = e.base.dim();
    const std::size_t k = e.fiber_dim;
    require_shape(e.projection, g, n, "projection");
    require_shape(e.inclusion, n, k, "inclusion");
    Report report = verify_lie(e.total);
    if (n != g + k || rank(e.projection) != g || rank(e.inclusion) != k || !(e.projection * e.inclusion).is_zero()) {
        report.add("exact", {}, "0 -> h -> total -> base -> 0 is not exact");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Vector h = e.inclusion.column(i);
        for (std::size_t a = 0; a < n; ++a)
            if (!is_zero(e.total.bracket(h, basis_vector(n, a)))) report.add("central", {i, a});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vector lhs = e.projection.apply(e.total.bracket(a, b));
            const Vector rhs = e.base.bracket(e.projection.column(a), e.projection.column(b));
            if (lhs != rhs) report.add("projection", {a, b});
        }
    return report;
}

Report verify_central_extension(const LieDerCentralExtension& e) {
    Report report = verify_central_extension(e.algebras);
    const std::size_t n = e.algebras.total.dim();
    const std::size_t k = e.algebras.fiber_dim;
    require_shape(e.phi_total, n, n, "phi_total");
    require_shape(e.phi_base, e.algebras.base.dim(), e.algebras.base.dim(), "phi_base");
    require_shape(e.phi_fiber, k, k, "phi_fiber");
    report.merge(verify_derivation(e.algebras.total, e.phi_total));
    report.merge(verify_derivation(e.algebras.base, e.phi_base));
    if (e.phi_total * e.algebras.inclusion != e.algebras.inclusion * e.phi_fiber) report.add("fiber", {});
    if (e.algebras.projection * e.phi_total != e.phi_base * e.algebras.projection) report.add("base", {});
    return report;
}

Matrix canonical_section(const CentralExtension& e) {
    const std::size_t g = e.base.dim();
    Matrix s(e.total.dim(), g);
    for (std::size_t a = 0; a < g; ++a) {
        const auto col = solve(e.projection, basis_vector(g, a));
        if (!col) throw PreconditionError("projection is not surjective");
        s.set_column(a, *col);
    }
    return s;
}

Cochain section_psi(const CentralExtension& e, const Matrix& section) {
    require_section(e, section);
    const std::size_t g = e.base.dim();
    Cochain psi(2, g, e.fiber_dim);
    for (std::size_t pos = 0; pos < psi.basis().size(); ++pos) {
        const auto& t = psi.basis().tuple(pos);
        Vector v = e.total.bracket(section.column(t[0]), section.column(t[1]));
        v = subtract(v, section.apply(e.base.bracket(t[0], t[1])));
        const Vector h = fiber_coordinates(e, v);
        std::copy(h.begin(), h.end(), psi.value(pos).begin());
    }
    return psi;
}

CentralCocycle section_to_cocycle(const LieDerCentralExtension& e, const Matrix& section) {
    CentralCocycle c{section_psi(e.algebras, section), Cochain(1, e.algebras.base.dim(), e.algebras.fiber_dim)};
    for (std::size_t a = 0; a < e.algebras.base.dim(); ++a) {
        Vector v = e.phi_total.apply(section.column(a));
        v = subtract(v, section.apply(e.phi_base.column(a)));
        const Vector h = fiber_coordinates(e.algebras, v);
        std::copy(h.begin(), h.end(), c.chi.value(a).begin());
    }
    return c;
}

CohomologyReport classify_central_extensions(const LieDerPair& base, const Matrix& phi_fiber) {
    return lieder_cohomology(base, fiber_representation(base, phi_fiber), 2);
}

Matrix shear_isomorphism(std::size_t base_dim, const Matrix& phi) {
    const std::size_t k = phi.rows();
    require_shape(phi, k, base_dim, "shear map");
    Matrix z = Matrix::identity(base_dim + k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < base_dim; ++a) z(base_dim + i, a) = phi(i, a);
    return z;
}

Cochain derivation_pair_obstruction(const CentralExtension& e, const Matrix& phi_fiber, const Matrix& phi_base,
                                    const Matrix& section) {
    require_shape(phi_fiber, e.fiber_dim, e.fiber_dim, "phi_h");
    const Report check = verify_derivation(e.base, phi_base);
    if (!check.ok()) throw PreconditionError("phi_g is not a derivation of the base", check);
    // Ob = -delta psi for the trivial action on h
    return Rational(-1) * delta(phi_base, phi_fiber, section_psi(e, section));
}

DerivationPairExtension extend_derivation_pair(const CentralExtension& e, const Matrix& phi_fiber,
                                               const Matrix& phi_base, std::optional<Matrix> section) {
    const Matrix s = section ? *section : canonical_section(e);
    const std::size_t g = e.base.dim();
    const std::size_t n = e.total.dim();
    DerivationPairExtension out{derivation_pair_obstruction(e, phi_fiber, phi_base, s), std::nullopt, std::nullopt};
    const auto lambda = is_ce_coboundary(out.obstruction, e.base, trivial_module(g, e.fiber_dim));
    if (!lambda) return out;
    out.lambda = *lambda;

    const Matrix lam = cochain_matrix(*lambda);
    Matrix phi(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const Vector u = basis_vector(n, a);
        const Vector x = e.projection.apply(u);
        const Vector h = fiber_coordinates(e, subtract(u, s.apply(x)));
        Vector image = s.apply(phi_base.apply(x));
        image = add(image, e.inclusion.apply(add(lam.apply(x), phi_fiber.apply(h))));
        phi.set_column(a, image);
    }
    out.phi_total = std::move(phi);
    return out;
}

ThetaMap theta_map(const LieAlgebra& base, std::size_t fiber_dim, const Matrix& phi_fiber, const Matrix& phi_base) {
    require_shape(phi_fiber, fiber_dim, fiber_dim, "phi_h");
    const Report check = verify_derivation(base, phi_base);
    if (!check.ok()) throw PreconditionError("phi_g is not a derivation of the base", check);
    const std::size_t g = base.dim();
    const Representation triv = trivial_module(g, fiber_dim);
    const CeCohomologyReport h2 = ce_cohomology(base, triv, 2);
    const Matrix d1 = ce_matrix(base, triv, 1);
    const std::size_t len = cochain_dim(g, fiber_dim, 2);

    const auto theta = [&](const Cochain& psi) { return Rational(-1) * delta(phi_base, phi_fiber, psi); };

    SpanBasis exact(len);
    for (std::size_t j = 0; j < d1.cols(); ++j) exact.add(d1.column(j));
    for (std::size_t j = 0; j < d1.cols(); ++j) {
        if (!exact.contains(theta(Cochain(2, g, fiber_dim, d1.column(j))).coefficients())) {
            throw std::logic_error("Theta does not preserve coboundaries");
        }
    }

    // coordinates in [representatives | coboundaries]
    std::vector<Vector> cols;
    for (const auto& z : h2.representatives) cols.push_back(z.coefficients());
    for (std::size_t j = 0; j < d1.cols(); ++j) cols.push_back(d1.column(j));
    const Matrix frame = Matrix::from_columns(cols, len);

    ThetaMap out{Matrix(h2.dim_H, h2.dim_H), h2.representatives};
    for (std::size_t j = 0; j < h2.dim_H; ++j) {
        const auto x = solve(frame, theta(h2.representatives[j]).coefficients());
        if (!x) throw std::logic_error("Theta image is not a cocycle");
        for (std::size_t i = 0; i < h2.dim_H; ++i) out.matrix(i, j) = (*x)[i];
    }
    return out;
}

}  // namespace lieder
