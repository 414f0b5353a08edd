#pragma once

#include "lieder/matrix.hpp"
#include "lieder/report.hpp"

#include <span>
#include <string>
#include <vector>

namespace lieder {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// Only pairs i < j are stored; [e_j, e_i] is read back with the opposite sign
/// and [e_i, e_i] is zero, so antisymmetry holds by construction. The Jacobi
/// identity is not enforced; check it with verify_lie.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// Sets [e_i, e_j] = value (and therefore [e_j, e_i] = -value).
    void set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value);

    /// Coordinates of [e_i, e_j].
    Vector bracket(std::size_t i, std::size_t j) const;
    /// Bracket of two coordinate vectors.
    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

    /// ad of e_i as a dim x dim matrix.
    Matrix ad(std::size_t i) const;
    Matrix ad(std::span<const Rational> x) const;

    bool is_abelian() const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const { return j * (j - 1) / 2 + i; }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Vector> table_;  // indexed by pair_index(i, j), i < j
};

/// A Lie algebra together with a derivation (column j = image of e_j).
struct LieDerPair {
    LieAlgebra algebra;
    Matrix phi;

    std::size_t dim() const { return algebra.dim(); }
    friend bool operator==(const LieDerPair&, const LieDerPair&) = default;
};

/// Lie algebra representation: rho[i] is the action of e_i on V.
struct Representation {
    std::size_t dim = 0;
    std::vector<Matrix> rho;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Representation of a LieDer pair: rho plus phi_V with
/// phi_V rho(x) = rho(phi_g x) + rho(x) phi_V.
struct LieDerRepresentation : Representation {
    Matrix phi;

    friend bool operator==(const LieDerRepresentation&, const LieDerRepresentation&) = default;
};

Vector basis_vector(std::size_t dim, std::size_t i);

/// Jacobi identity on every basis triple i < j < k.
Report verify_lie(const LieAlgebra& a);

/// Leibniz rule on every basis pair i < j. Throws std::invalid_argument when
/// the matrix is not dim x dim.
Report verify_derivation(const LieAlgebra& a, const Matrix& d);

/// verify_lie plus verify_derivation.
Report verify_pair(const LieDerPair& p);

/// rho is a Lie algebra morphism into gl(V).
Report verify_module(const LieAlgebra& a, const Representation& r);

/// Morphism property plus phi_V rho(x) = rho(phi_g x) + rho(x) phi_V on
/// every basis element.
Report verify_representation(const LieDerPair& p, const LieDerRepresentation& r);

/// Adjoint representation (ad, g, phi_g).
LieDerRepresentation adjoint_representation(const LieDerPair& p);

/// rho = 0 on a space of dimension dim_v with the given phi_V.
LieDerRepresentation trivial_representation(std::size_t g_dim, const Matrix& phi_v);

/// Semidirect product g + V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u and
/// derivation phi_g + phi_V. Basis: g first, then V. Throws
/// PreconditionError when r is not a representation of p.
LieDerPair semidirect_product(const LieDerPair& p, const LieDerRepresentation& r);

/// Checks that f (target.dim x source.dim) preserves brackets and intertwines
/// the derivations.
Report verify_pair_morphism(const LieDerPair& source, const LieDerPair& target, const Matrix& f);

}  // namespace lieder
