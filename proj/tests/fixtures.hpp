#pragma once

#include "lieder/cochain.hpp"
#include "lieder/cohomology.hpp"
#include "lieder/deformation.hpp"
#include "lieder/lie_algebra.hpp"
#include "lieder/matrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fx {

using namespace lieder;

inline Rational q(const char* s) { return parse_rational(s); }

struct Bracket {
    std::size_t i, j;
    Vector value;
};

inline LieAlgebra algebra(std::size_t dim, const std::vector<Bracket>& table) {
    LieAlgebra a(dim);
    for (const auto& b : table) a.set_bracket(b.i, b.j, b.value);
    return a;
}

inline Matrix diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// abelian 2-dim, zero derivation
inline LieDerPair abelian2() { return {LieAlgebra(2), Matrix(2, 2)}; }

// abelian 2-dim with phi = id
inline LieDerPair abelian2_id() { return {LieAlgebra(2), Matrix::identity(2)}; }

// aff(1): [e1,e2] = e2, phi = ad_{e1}
inline LieDerPair aff1() {
    auto a = algebra(2, {{0, 1, {0, 1}}});
    return {a, a.ad(0)};
}

// Heisenberg: [e1,e2] = e3, grading derivation diag(1,1,2)
inline LieDerPair heisenberg() {
    return {algebra(3, {{0, 1, {0, 0, 1}}}), diagonal({1, 1, 2})};
}

// sl2 with basis (e,f,h): [e,f]=h, [e,h]=-2e, [f,h]=2f, phi = ad_h
inline LieAlgebra sl2_algebra() {
    return algebra(3, {{0, 1, {0, 0, 1}}, {0, 2, {-2, 0, 0}}, {1, 2, {0, 2, 0}}});
}
inline LieDerPair sl2() {
    auto a = sl2_algebra();
    return {a, a.ad(2)};
}

// [e4,e1]=e1, [e4,e2]=e2, [e4,e3]=2e3, [e1,e2]=e3, phi = diag(1,0,1,0)
inline LieDerPair solv4() {
    auto a = algebra(4, {{3, 0, {1, 0, 0, 0}},
                         {3, 1, {0, 1, 0, 0}},
                         {3, 2, {0, 0, 2, 0}},
                         {0, 1, {0, 0, 1, 0}}});
    return {a, diagonal({1, 0, 1, 0})};
}

inline LieDerPair with_zero_derivation(LieDerPair p) {
    p.phi = Matrix(p.dim(), p.dim());
    return p;
}

struct Named {
    std::string name;
    LieDerPair pair;
};

inline std::vector<Named> standard_pairs() {
    return {{"abelian2", abelian2_id()}, {"aff1", aff1()}, {"heisenberg", heisenberg()},
            {"sl2", sl2()}, {"solv4", solv4()}};
}

inline std::vector<Named> zero_derivation_pairs() {
    std::vector<Named> out;
    for (auto& n : standard_pairs()) out.push_back({n.name + "/phi=0", with_zero_derivation(n.pair)});
    return out;
}

/// Trivial 1-dim representation with phi_V = c.
inline LieDerRepresentation trivial1(std::size_t g_dim, const Rational& c) {
    return trivial_representation(g_dim, Matrix{{c}});
}

// ---------------------------------------------------------------------------
// Hand-rolled generators

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational small() {
        const long num = integer(-5, 5);
        const long den = integer(1, 3);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    /// Mostly small, sometimes zero, to exercise sparsity paths.
    Rational sparse() { return integer(0, 3) == 0 ? Rational(0) : small(); }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = sparse();
        return v;
    }
    Matrix matrix(std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = sparse();
        return m;
    }
    Cochain cochain(std::size_t degree, std::size_t g_dim, std::size_t v_dim) {
        Cochain c(degree, g_dim, v_dim);
        for (auto& x : c.coefficients()) x = sparse();
        return c;
    }
    CochainPair pair(std::size_t degree, std::size_t g_dim, std::size_t v_dim) {
        if (degree == 1) return CochainPair(cochain(1, g_dim, v_dim));
        return CochainPair(cochain(degree, g_dim, v_dim), cochain(degree - 1, g_dim, v_dim));
    }
    /// Random combination of the given vectors.
    Vector combination(const std::vector<Vector>& basis, std::size_t length) {
        Vector v(length);
        for (const auto& b : basis) axpy(sparse(), b, v);
        return v;
    }
    /// Random degree-n cocycle of the LieDer complex.
    CochainPair cocycle(const LieDerPair& p, const LieDerRepresentation& r, std::size_t n) {
        const auto k = kernel_basis(coboundary_matrix(p, r, n));
        return CochainPair::from_vector(n, p.dim(), r.dim, combination(k, lieder_cochain_dim(p.dim(), r.dim, n)));
    }
    /// Random valid order-1 deformation: (omega_1, phi_1) a random 2-cocycle.
    TruncatedDeformation deformation1(const LieDerPair& p) {
        TruncatedDeformation d = trivial_deformation(p, 0);
        const CochainPair c = cocycle(p, adjoint_representation(p), 2);
        d.omegas.push_back(c.f());
        d.phis.push_back(c.g());
        return d;
    }
    /// Random valid deformation of the given order, or of lower order when an
    /// obstruction is met along the way.
    TruncatedDeformation deformation(const LieDerPair& p, std::size_t order) {
        TruncatedDeformation d = deformation1(p);
        while (d.order() < order) {
            auto e = extend_deformation(p, d);
            if (!e) break;
            const CochainPair c = cocycle(p, adjoint_representation(p), 2);
            e->extended.omegas.back() += c.f();
            e->extended.phis.back() += c.g();
            d = std::move(e->extended);
        }
        return d;
    }
    FormalIso iso(std::size_t dim, std::size_t order) {
        FormalIso f = identity_iso(dim, order);
        for (std::size_t k = 1; k <= order; ++k) f.maps[k] = matrix(dim, dim);
        return f;
    }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Independent oracles: evaluate definitions through multilinear evaluation on
// explicit argument vectors rather than through wedge-basis bookkeeping.

inline std::vector<Vector> unit_args(std::size_t dim, const std::vector<std::size_t>& idx) {
    std::vector<Vector> args;
    for (auto i : idx) args.push_back(basis_vector(dim, i));
    return args;
}

/// (df)(x_0..x_n) by the textbook formula, with rho applied as matrices.
inline Cochain oracle_d(const LieAlgebra& a, const Representation& r, const Cochain& f) {
    const std::size_t n = f.degree();
    const std::size_t g = a.dim();
    Cochain out(n + 1, g, r.dim);
    for (std::size_t pos = 0; pos < out.basis().size(); ++pos) {
        const auto t = out.basis().tuple(pos);
        const auto x = unit_args(g, t);
        Vector acc(r.dim);
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Vector> rest;
            for (std::size_t m = 0; m <= n; ++m)
                if (m != k) rest.push_back(x[m]);
            Matrix rho_x(r.dim, r.dim);
            for (std::size_t b = 0; b < g; ++b) rho_x += x[k][b] * r.rho[b];
            const Vector term = rho_x.apply(evaluate(f, rest));
            acc = (k % 2 == 0) ? add(acc, term) : subtract(acc, term);
        }
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t l = k + 1; l <= n; ++l) {
                std::vector<Vector> args{a.bracket(x[k], x[l])};
                for (std::size_t m = 0; m <= n; ++m)
                    if (m != k && m != l) args.push_back(x[m]);
                const Vector term = evaluate(f, args);
                acc = ((k + l) % 2 == 0) ? add(acc, term) : subtract(acc, term);
            }
        std::copy(acc.begin(), acc.end(), out.value(pos).begin());
    }
    return out;
}

/// delta f = sum_slot f(.., phi_g x, ..) - phi_V f, slot by slot.
inline Cochain oracle_delta(const Matrix& phi_g, const Matrix& phi_v, const Cochain& f) {
    Cochain out(f.degree(), f.g_dim(), f.v_dim());
    for (std::size_t pos = 0; pos < out.basis().size(); ++pos) {
        const auto t = out.basis().tuple(pos);
        auto x = unit_args(f.g_dim(), t);
        Vector acc = scale(-1, phi_v.apply(evaluate(f, x)));
        for (std::size_t s = 0; s < x.size(); ++s) {
            auto y = x;
            y[s] = phi_g.apply(x[s]);
            acc = add(acc, evaluate(f, y));
        }
        std::copy(acc.begin(), acc.end(), out.value(pos).begin());
    }
    return out;
}

/// Brute-force Jacobiator on every ordered triple of coordinate vectors.
inline bool oracle_jacobi(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
                Vector s = a.bracket(x, a.bracket(y, z));
                s = add(s, a.bracket(y, a.bracket(z, x)));
                s = add(s, a.bracket(z, a.bracket(x, y)));
                if (!is_zero(s)) return false;
            }
    return true;
}

/// dim H^1 as ker d_1 intersected with {f : f phi_g = phi_V f}, by
/// dim U + dim W - dim(U + W).
inline std::size_t h1_oracle(const LieDerPair& p, const LieDerRepresentation& r) {
    const std::size_t g = p.dim(), v = r.dim, n = g * v;
    // U = ker d_1, d assembled through the evaluation oracle
    Matrix d1(cochain_dim(g, v, 2), n);
    for (std::size_t j = 0; j < n; ++j) {
        Cochain e(1, g, v);
        e.coefficients()[j] = 1;
        d1.set_column(j, oracle_d(p.algebra, r, e).coefficients());
    }
    // W = ker(f -> f phi_g - phi_V f), f stored as column-major v x g
    Matrix comm(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix f(v, g);
        f(j % v, j / v) = 1;
        const Matrix c = f * p.phi - r.phi * f;
        for (std::size_t col = 0; col < g; ++col)
            for (std::size_t row = 0; row < v; ++row) comm(col * v + row, j) = c(row, col);
    }
    const auto u = kernel_basis(d1);
    const auto w = kernel_basis(comm);
    std::vector<Vector> both = u;
    both.insert(both.end(), w.begin(), w.end());
    const std::size_t sum = both.empty() ? 0 : rank(Matrix::from_columns(both, n));
    return u.size() + w.size() - sum;
}

}  // namespace fx
