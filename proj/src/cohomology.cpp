#include "lieder/cohomology.hpp"

#include <stdexcept>

namespace lieder {

namespace {

template <class Op>
Matrix operator_matrix(std::size_t in_dim, std::size_t out_dim, Op op) {
    Matrix m(out_dim, in_dim);
    Vector unit(in_dim);
    for (std::size_t j = 0; j < in_dim; ++j) {
        unit[j] = 1;
        const Vector col = op(unit);
        if (col.size() != out_dim) throw std::logic_error("operator output has wrong length");
        m.set_column(j, col);
        unit[j] = 0;
    }
    return m;
}

void place(Matrix& target, const Matrix& block, std::size_t row, std::size_t col, const Rational& s) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) target(row + i, col + j) = s * block(i, j);
}

struct Quotient {
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::vector<Vector> representatives;
};

/// Z = ker(out), B = im(in); representatives extend a basis of B inside Z.
Quotient quotient(const Matrix& out, const Matrix& in) {
    Quotient q;
    const auto kernel = kernel_basis(out);
    q.cocycles = kernel.size();
    SpanBasis span(out.cols());
    for (std::size_t j = 0; j < in.cols(); ++j) span.add(in.column(j));
    q.coboundaries = span.rank();
    for (const auto& z : kernel) {
        if (span.add(z)) q.representatives.push_back(z);
    }
    return q;
}

}  // namespace

Matrix ce_matrix(const LieAlgebra& a, const Representation& r, std::size_t n) {
    const std::size_t g = a.dim();
    return operator_matrix(cochain_dim(g, r.dim, n), cochain_dim(g, r.dim, n + 1), [&](const Vector& c) {
        return ce_differential(a, r, Cochain(n, g, r.dim, c)).coefficients();
    });
}

Matrix delta_matrix(const Matrix& phi_g, const Matrix& phi_v, std::size_t n) {
    const std::size_t g = phi_g.rows();
    const std::size_t v = phi_v.rows();
    return operator_matrix(cochain_dim(g, v, n), cochain_dim(g, v, n), [&](const Vector& c) {
        return delta(phi_g, phi_v, Cochain(n, g, v, c)).coefficients();
    });
}

Matrix coboundary_matrix(const LieDerPair& p, const LieDerRepresentation& r, std::size_t n) {
    const std::size_t g = p.dim();
    const std::size_t v = r.dim;
    Matrix m(lieder_cochain_dim(g, v, n + 1), lieder_cochain_dim(g, v, n));
    if (n == 0) return m;
    const std::size_t top = cochain_dim(g, v, n + 1);
    const Rational sign = n % 2 == 0 ? 1 : -1;
    place(m, ce_matrix(p.algebra, r, n), 0, 0, 1);
    place(m, delta_matrix(p.phi, r.phi, n), top, 0, sign);
    if (n >= 2) place(m, ce_matrix(p.algebra, r, n - 1), top, cochain_dim(g, v, n), 1);
    return m;
}

CohomologyReport lieder_cohomology(const LieDerPair& p, const LieDerRepresentation& r, std::size_t n) {
    const Report check = verify_representation(p, r);
    if (!check.ok()) throw PreconditionError("cohomology of an unverified representation", check);
    CohomologyReport report;
    report.degree = n;
    if (n == 0) return report;
    report.dim_cochains = lieder_cochain_dim(p.dim(), r.dim, n);
    const Quotient q = quotient(coboundary_matrix(p, r, n), coboundary_matrix(p, r, n - 1));
    report.dim_cocycles = q.cocycles;
    report.dim_coboundaries = q.coboundaries;
    report.dim_H = q.representatives.size();
    for (const auto& z : q.representatives)
        report.representatives.push_back(CochainPair::from_vector(n, p.dim(), r.dim, z));
    return report;
}

CeCohomologyReport ce_cohomology(const LieAlgebra& a, const Representation& r, std::size_t n) {
    const Report check = verify_module(a, r);
    if (!check.ok()) throw PreconditionError("cohomology of an unverified module", check);
    CeCohomologyReport report;
    report.degree = n;
    report.dim_cochains = cochain_dim(a.dim(), r.dim, n);
    const Matrix in = n == 0 ? Matrix(report.dim_cochains, 0) : ce_matrix(a, r, n - 1);
    const Quotient q = quotient(ce_matrix(a, r, n), in);
    report.dim_cocycles = q.cocycles;
    report.dim_coboundaries = q.coboundaries;
    report.dim_H = q.representatives.size();
    for (const auto& z : q.representatives) report.representatives.emplace_back(n, a.dim(), r.dim, z);
    return report;
}

std::optional<CochainPair> is_coboundary(const CochainPair& z, const LieDerPair& p,
                                         const LieDerRepresentation& r) {
    if (z.degree() == 0) return CochainPair::zero(0, p.dim(), r.dim);
    if (!partial(z, p, r).is_zero()) {
        Report report;
        report.add("cocycle", {z.degree()}, "partial(z) != 0");
        throw PreconditionError("not a cocycle", report);
    }
    if (z.degree() == 1) {
        if (z.is_zero()) return CochainPair::zero(0, p.dim(), r.dim);
        return std::nullopt;
    }
    const auto x = solve(coboundary_matrix(p, r, z.degree() - 1), z.to_vector());
    if (!x) return std::nullopt;
    return CochainPair::from_vector(z.degree() - 1, p.dim(), r.dim, *x);
}

std::optional<Cochain> is_ce_coboundary(const Cochain& z, const LieAlgebra& a, const Representation& r) {
    if (!ce_differential(a, r, z).is_zero()) {
        Report report;
        report.add("cocycle", {z.degree()}, "d z != 0");
        throw PreconditionError("not a cocycle", report);
    }
    if (z.degree() == 0) {
        if (z.is_zero()) return Cochain(0, a.dim(), r.dim);
        return std::nullopt;
    }
    const auto x = solve(ce_matrix(a, r, z.degree() - 1), z.coefficients());
    if (!x) return std::nullopt;
    return Cochain(z.degree() - 1, a.dim(), r.dim, *x);
}

}  // namespace lieder
