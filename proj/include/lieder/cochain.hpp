#pragma once

#include "lieder/lie_algebra.hpp"
#include "lieder/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lieder {

std::size_t binomial(std::size_t n, std::size_t k);

/// Strictly increasing index tuples (i_1 < ... < i_n) drawn from
/// {0, ..., g_dim-1}, enumerated in colexicographic order.
///
/// The position of a tuple is sum_k C(i_k, k+1) (0-based k), so all tuples
/// with entries below m form a prefix of the enumeration.
class WedgeBasis {
public:
    WedgeBasis(std::size_t g_dim, std::size_t degree);

    std::size_t g_dim() const { return g_dim_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return tuples_.size(); }

    const std::vector<std::size_t>& tuple(std::size_t position) const { return tuples_[position]; }

    /// Position of a strictly increasing tuple.
    std::size_t position(std::span<const std::size_t> sorted) const;

    struct Reduced {
        std::size_t position;
        int sign;
    };
    /// Sorts an arbitrary tuple, returning its position and the sign of the
    /// sorting permutation; nullopt when an index repeats.
    std::optional<Reduced> reduce(std::span<const std::size_t> indices) const;

private:
    std::size_t g_dim_;
    std::size_t degree_;
    std::vector<std::vector<std::size_t>> tuples_;
};

/// Shared immutable basis for (g_dim, degree); safe to call concurrently.
const WedgeBasis& wedge_basis(std::size_t g_dim, std::size_t degree);

/// Alternating n-linear map from g (dimension g_dim) to V (dimension v_dim),
/// stored by its values on the wedge basis: coefficient (position, a) is
/// the a-th V-coordinate of f(e_I).
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t g_dim, std::size_t v_dim);
    Cochain(std::size_t degree, std::size_t g_dim, std::size_t v_dim, Vector coefficients);

    std::size_t degree() const { return degree_; }
    std::size_t g_dim() const { return g_dim_; }
    std::size_t v_dim() const { return v_dim_; }
    std::size_t size() const { return coeffs_.size(); }
    const WedgeBasis& basis() const { return wedge_basis(g_dim_, degree_); }

    const Vector& coefficients() const { return coeffs_; }
    Vector& coefficients() { return coeffs_; }

    std::span<const Rational> value(std::size_t position) const {
        return std::span<const Rational>(coeffs_).subspan(position * v_dim_, v_dim_);
    }
    std::span<Rational> value(std::size_t position) {
        return std::span<Rational>(coeffs_).subspan(position * v_dim_, v_dim_);
    }

    /// Value on basis vectors in any order; zero when an index repeats.
    Vector at(std::span<const std::size_t> indices) const;
    Vector at(std::initializer_list<std::size_t> indices) const {
        return at(std::span<const std::size_t>(indices.begin(), indices.size()));
    }
    /// Sets f(e_{i_1}, ..., e_{i_n}) = value, adjusting for the tuple order.
    void set(std::span<const std::size_t> indices, std::span<const Rational> value);
    void set(std::initializer_list<std::size_t> indices, std::span<const Rational> value) {
        set(std::span<const std::size_t>(indices.begin(), indices.size()), value);
    }

    bool is_zero() const { return lieder::is_zero(coeffs_); }
    bool same_shape(const Cochain& other) const {
        return degree_ == other.degree_ && g_dim_ == other.g_dim_ && v_dim_ == other.v_dim_;
    }

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a);
    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    std::size_t degree_ = 0;
    std::size_t g_dim_ = 0;
    std::size_t v_dim_ = 0;
    Vector coeffs_;
};

/// Element (f_n, g_{n-1}) of the LieDer cochain space. Degree 1 carries only
/// f; degree 0 is the zero space and carries nothing.
class CochainPair {
public:
    CochainPair() = default;
    explicit CochainPair(Cochain f);
    CochainPair(Cochain f, Cochain g);

    static CochainPair zero(std::size_t degree, std::size_t g_dim, std::size_t v_dim);
    static CochainPair from_vector(std::size_t degree, std::size_t g_dim, std::size_t v_dim,
                                   std::span<const Rational> coordinates);

    std::size_t degree() const { return degree_; }
    std::size_t g_dim() const { return g_dim_; }
    std::size_t v_dim() const { return v_dim_; }

    bool has_f() const { return f_.has_value(); }
    bool has_g() const { return g_.has_value(); }
    const Cochain& f() const;
    const Cochain& g() const;
    Cochain& f();
    Cochain& g();

    /// Coordinates of f followed by those of g.
    Vector to_vector() const;
    bool is_zero() const;

    friend CochainPair operator+(const CochainPair& a, const CochainPair& b);
    friend CochainPair operator-(const CochainPair& a, const CochainPair& b);
    friend CochainPair operator*(const Rational& s, const CochainPair& a);
    friend bool operator==(const CochainPair&, const CochainPair&) = default;

private:
    std::size_t degree_ = 0;
    std::size_t g_dim_ = 0;
    std::size_t v_dim_ = 0;
    std::optional<Cochain> f_;
    std::optional<Cochain> g_;
};

/// Dimension of C^n(g; V).
std::size_t cochain_dim(std::size_t g_dim, std::size_t v_dim, std::size_t degree);
/// Dimension of C^n_LieDer(g; V): 0 for n = 0, C^1 for n = 1, C^n + C^{n-1} otherwise.
std::size_t lieder_cochain_dim(std::size_t g_dim, std::size_t v_dim, std::size_t degree);

/// Multilinear alternating evaluation on coordinate vectors. Throws
/// std::invalid_argument on arity or length mismatch.
Vector evaluate(const Cochain& f, std::span<const Vector> args);

/// Degree-1 cochain with the same values as a linear map (column j = f(e_j)).
Cochain linear_map_cochain(const Matrix& m);
/// Inverse of linear_map_cochain.
Matrix cochain_matrix(const Cochain& f);
/// The bracket of g as a g-valued 2-cochain.
Cochain bracket_cochain(const LieAlgebra& a);

/// Chevalley-Eilenberg coboundary, degree n -> n+1, n >= 0:
/// (df)(x_1..x_{n+1}) = sum_i (-1)^{i+1} rho(x_i) f(..x_i^..)
///                    + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x_i^..x_j^..).
Cochain ce_differential(const LieAlgebra& a, const Representation& r, const Cochain& f);

/// delta f = sum_i f(.., phi_g x_i, ..) - phi_V f, degree preserving.
Cochain delta(const Matrix& phi_g, const Matrix& phi_v, const Cochain& f);

Cochain d(const Cochain& f, const LieDerPair& p, const LieDerRepresentation& r);
Cochain delta(const Cochain& f, const LieDerPair& p, const LieDerRepresentation& r);

/// LieDer coboundary: d f_1 paired with -delta f_1 in degree 1, and
/// (d f_n, d g_{n-1} + (-1)^n delta f_n) for n >= 2. Degree 0 maps to zero.
CochainPair partial(const CochainPair& c, const LieDerPair& p, const LieDerRepresentation& r);

/// Composition P o Q (P of degree p+1, Q of degree q+1, both g-valued):
/// sum over (q+1, p)-unshuffles s of sign(s) P(Q(x_s(1..q+1)), x_s(q+2..)).
Cochain nr_compose(const Cochain& p, const Cochain& q);

/// Nijenhuis-Richardson bracket [P, Q] = P o Q - (-1)^{pq} Q o P. Throws
/// std::invalid_argument when either cochain is not g-valued.
Cochain nr_bracket(const Cochain& p, const Cochain& q);

}  // namespace lieder
