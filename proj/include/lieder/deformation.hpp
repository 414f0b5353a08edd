#pragma once

#include "lieder/cochain.hpp"
#include "lieder/lie_algebra.hpp"
#include "lieder/report.hpp"

#include <optional>
#include <vector>

namespace lieder {

/// Deformation of order n: omega_t = sum omegas[i] t^i (g-valued 2-cochains)
/// and phi_t = sum phis[i] t^i (g-valued 1-cochains), truncated mod t^{n+1}.
/// Entry 0 must be the base bracket and derivation.
struct TruncatedDeformation {
    std::vector<Cochain> omegas;
    std::vector<Cochain> phis;

    std::size_t order() const { return omegas.empty() ? 0 : omegas.size() - 1; }
    friend bool operator==(const TruncatedDeformation&, const TruncatedDeformation&) = default;
};

/// Formal isomorphism Phi_t = sum maps[i] t^i with maps[0] = Id.
struct FormalIso {
    std::vector<Matrix> maps;

    std::size_t order() const { return maps.empty() ? 0 : maps.size() - 1; }
    friend bool operator==(const FormalIso&, const FormalIso&) = default;
};

/// The deformation whose higher terms all vanish.
TruncatedDeformation trivial_deformation(const LieDerPair& p, std::size_t order);

FormalIso identity_iso(std::size_t dim, std::size_t order);

/// Product of power series F * G, truncated at the larger order.
FormalIso compose(const FormalIso& f, const FormalIso& g);

/// Truncated inverse series: psi_0 = Id, psi_k = -sum_{j=1..k} phi_j psi_{k-j}.
FormalIso inverse(const FormalIso& f);

/// Coefficient equations of t^i for 0 <= i <= order on every basis tuple:
///   sum_{j+k=i} omega_j(omega_k(x,y),z) + cyclic = 0            (rule "jacobi")
///   sum_{j+k=i} phi_j omega_k(x,y) - omega_k(phi_j x,y) - omega_k(x,phi_j y) = 0
///                                                                (rule "derivation")
/// Violation indices are (i, basis tuple...). Throws std::invalid_argument
/// when shapes are wrong or entry 0 differs from the base pair.
Report check_deformation(const LieDerPair& p, const TruncatedDeformation& d);

/// (omega_1, phi_1) of a valid deformation of order >= 1. Throws
/// PreconditionError for invalid input.
CochainPair infinitesimal(const LieDerPair& p, const TruncatedDeformation& d);

/// Equivalent deformation omega' = Phi^{-1} omega (Phi x Phi),
/// phi' = Phi^{-1} phi Phi, truncated at the order of d. Missing terms of f
/// beyond its order count as zero.
TruncatedDeformation apply_iso(const LieDerPair& p, const TruncatedDeformation& d, const FormalIso& f);

/// Obstruction (Ob3, Ob2) to extending an order-n deformation, by direct
/// summation over i + j = n + 1, i, j >= 1:
///   Ob3(x,y,z) = sum omega_i(omega_j(x,y),z) + cyclic,
///   Ob2(x,y)   = sum phi_i omega_j(x,y) - omega_j(phi_i x,y) - omega_j(x,phi_i y).
/// Throws PreconditionError for an invalid deformation.
CochainPair obstruction(const LieDerPair& p, const TruncatedDeformation& d);

/// Same obstruction via Nijenhuis-Richardson brackets:
/// Ob3 = 1/2 sum [omega_i, omega_j], Ob2 = sum [phi_i, omega_j].
CochainPair obstruction_nr(const LieDerPair& p, const TruncatedDeformation& d);

struct DeformationExtension {
    CochainPair terms;  // (omega_{n+1}, phi_{n+1})
    TruncatedDeformation extended;
};

/// Solves partial(omega_{n+1}, phi_{n+1}) = obstruction with free variables
/// zero; nullopt exactly when the obstruction is not exact.
std::optional<DeformationExtension> extend_deformation(const LieDerPair& p, const TruncatedDeformation& d);

/// Kills the terms of orders 1..max_order one at a time: the lowest nonzero
/// term (omega_k, phi_k) is a cocycle, and Id + psi t^k with
/// partial(psi) = -(omega_k, phi_k) removes it. Returns the accumulated
/// isomorphism (of the order of d), or nullopt when some term is not exact.
/// max_order is clamped to the order of d.
std::optional<FormalIso> trivialize(const LieDerPair& p, const TruncatedDeformation& d, std::size_t max_order);

/// The same procedure, keeping the partial isomorphism when it stops.
struct Trivialization {
    FormalIso iso;
    /// Lowest surviving term of apply_iso(d, iso) when it is not exact;
    /// a 2-cocycle outside the image of partial.
    std::optional<CochainPair> blocking;
    std::size_t blocking_order = 0;
    bool complete() const { return !blocking; }
};
Trivialization trivialization(const LieDerPair& p, const TruncatedDeformation& d, std::size_t max_order);

/// True when H^2_LieDer(g; g) = 0 for the adjoint representation, in which
/// case every deformation is equivalent to the trivial one at all orders.
bool is_rigid(const LieDerPair& p);

}  // namespace lieder
