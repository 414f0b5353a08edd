#include "lieder/lie_algebra.hpp"

#include <stdexcept>
#include <string>

namespace lieder {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(n) + "x" +
                                    std::to_string(n) + ", got " + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()));
    }
}

std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), table_(dim * (dim == 0 ? 0 : dim - 1) / 2, Vector(dim)) {
    if (names_.empty()) {
        for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
    }
    if (names_.size() != dim) throw std::invalid_argument("basis name count differs from dim");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value) {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("bracket index out of range");
    if (value.size() != dim_) throw std::invalid_argument("bracket value has wrong length");
    if (i == j) {
        if (!is_zero(value)) throw std::invalid_argument("[e_i, e_i] must be zero");
        return;
    }
    if (i < j) {
        table_[pair_index(i, j)] = Vector(value.begin(), value.end());
    } else {
        table_[pair_index(j, i)] = scale(-1, value);
    }
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("bracket index out of range");
    if (i == j) return Vector(dim_);
    if (i < j) return table_[pair_index(i, j)];
    return scale(-1, table_[pair_index(j, i)]);
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket argument length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || sgn(y[j]) == 0) continue;
            const Rational coeff = x[i] * y[j];
            if (i < j) {
                axpy(coeff, table_[pair_index(i, j)], out);
            } else {
                axpy(-coeff, table_[pair_index(j, i)], out);
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(i, j));
    return m;
}

Matrix LieAlgebra::ad(std::span<const Rational> x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(x, basis_vector(dim_, j)));
    return m;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& v : table_)
        if (!is_zero(v)) return false;
    return true;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = 1;
    return v;
}

Report verify_lie(const LieAlgebra& a) {
    Report report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = basis_vector(n, i), ej = basis_vector(n, j),
                             ek = basis_vector(n, k);
                Vector sum = a.bracket(a.bracket(i, j), ek);
                sum = add(sum, a.bracket(a.bracket(j, k), ei));
                sum = add(sum, a.bracket(a.bracket(k, i), ej));
                if (!is_zero(sum)) report.add("jacobi", {i, j, k}, "jacobiator " + vector_text(sum));
            }
    return report;
}

Report verify_derivation(const LieAlgebra& a, const Matrix& d) {
    require_square(d, a.dim(), "derivation matrix");
    Report report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = d.apply(a.bracket(i, j));
            Vector rhs = a.bracket(d.column(i), basis_vector(n, j));
            rhs = add(rhs, a.bracket(basis_vector(n, i), d.column(j)));
            if (lhs != rhs) {
                report.add("leibniz", {i, j},
                           "phi[e_i,e_j] = " + vector_text(lhs) + " but [phi e_i,e_j]+[e_i,phi e_j] = " +
                               vector_text(rhs));
            }
        }
    return report;
}

Report verify_pair(const LieDerPair& p) {
    Report report = verify_lie(p.algebra);
    report.merge(verify_derivation(p.algebra, p.phi));
    return report;
}

Report verify_module(const LieAlgebra& a, const Representation& r) {
    if (r.rho.size() != a.dim()) {
        throw std::invalid_argument("representation needs one matrix per basis element");
    }
    for (const auto& m : r.rho) require_square(m, r.dim, "rho matrix");
    Report report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector c = a.bracket(i, j);
            Matrix lhs(r.dim, r.dim);
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(c[k]) != 0) lhs += c[k] * r.rho[k];
            }
            const Matrix rhs = r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i];
            if (lhs != rhs) report.add("morphism", {i, j}, "rho([e_i,e_j]) != [rho(e_i), rho(e_j)]");
        }
    return report;
}

Report verify_representation(const LieDerPair& p, const LieDerRepresentation& r) {
    require_square(p.phi, p.dim(), "derivation matrix");
    require_square(r.phi, r.dim, "phi_V");
    Report report = verify_module(p.algebra, r);
    const std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector phi_x = p.phi.column(i);
        Matrix rho_phi_x(r.dim, r.dim);
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(phi_x[k]) != 0) rho_phi_x += phi_x[k] * r.rho[k];
        }
        if (r.phi * r.rho[i] != rho_phi_x + r.rho[i] * r.phi) {
            report.add("rep1", {i}, "phi_V rho(x) != rho(phi x) + rho(x) phi_V");
        }
    }
    return report;
}

LieDerRepresentation adjoint_representation(const LieDerPair& p) {
    LieDerRepresentation r;
    r.dim = p.dim();
    for (std::size_t i = 0; i < p.dim(); ++i) r.rho.push_back(p.algebra.ad(i));
    r.phi = p.phi;
    return r;
}

LieDerRepresentation trivial_representation(std::size_t g_dim, const Matrix& phi_v) {
    require_square(phi_v, phi_v.rows(), "phi_V");
    LieDerRepresentation r;
    r.dim = phi_v.rows();
    r.rho.assign(g_dim, Matrix(r.dim, r.dim));
    r.phi = phi_v;
    return r;
}

LieDerPair semidirect_product(const LieDerPair& p, const LieDerRepresentation& r) {
    const Report check = verify_representation(p, r);
    if (!check.ok()) throw PreconditionError("semidirect product of an unverified representation", check);

    const std::size_t n = p.dim();
    const std::size_t m = r.dim;
    std::vector<std::string> names = p.algebra.basis_names();
    for (std::size_t k = 0; k < m; ++k) names.push_back("v" + std::to_string(k + 1));
    LieAlgebra total(n + m, std::move(names));

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v(n + m);
            const Vector c = p.algebra.bracket(i, j);
            std::copy(c.begin(), c.end(), v.begin());
            total.set_bracket(i, j, v);
        }
        // [e_i, v_k] = rho(e_i) v_k
        for (std::size_t k = 0; k < m; ++k) {
            Vector v(n + m);
            for (std::size_t a = 0; a < m; ++a) v[n + a] = r.rho[i](a, k);
            total.set_bracket(i, n + k, v);
        }
    }

    Matrix phi(n + m, n + m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) phi(a, b) = p.phi(a, b);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) phi(n + a, n + b) = r.phi(a, b);
    return {std::move(total), std::move(phi)};
}

Report verify_pair_morphism(const LieDerPair& source, const LieDerPair& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) {
        throw std::invalid_argument("morphism matrix has wrong shape");
    }
    Report report;
    const std::size_t n = source.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = f.apply(source.algebra.bracket(i, j));
            const Vector rhs = target.algebra.bracket(f.column(i), f.column(j));
            if (lhs != rhs) report.add("bracket", {i, j}, "f[e_i,e_j] != [f e_i, f e_j]");
        }
    if (f * source.phi != target.phi * f) report.add("intertwine", {}, "f phi != phi' f");
    return report;
}

}  // namespace lieder
