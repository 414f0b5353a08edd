#pragma once

#include "lieder/cochain.hpp"
#include "lieder/cohomology.hpp"
#include "lieder/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace lieder {

/// Central extension 0 -> h -> total -> base -> 0 of Lie algebras.
/// projection is base.dim x total.dim, inclusion is total.dim x fiber_dim.
struct CentralExtension {
    LieAlgebra total;
    LieAlgebra base;
    std::size_t fiber_dim = 0;
    Matrix projection;
    Matrix inclusion;
};

/// Central extension of LieDer pairs: the plain extension together with
/// derivations on all three terms.
struct LieDerCentralExtension {
    CentralExtension algebras;
    Matrix phi_total;
    Matrix phi_base;
    Matrix phi_fiber;

    LieDerPair total_pair() const { return {algebras.total, phi_total}; }
    LieDerPair base_pair() const { return {algebras.base, phi_base}; }
};

/// psi : wedge^2 g -> h and chi : g -> h.
struct CentralCocycle {
    Cochain psi;
    Cochain chi;

    CochainPair as_pair() const { return CochainPair(psi, chi); }
    static CentralCocycle from_pair(const CochainPair& c) { return {c.f(), c.g()}; }
    friend bool operator==(const CentralCocycle&, const CentralCocycle&) = default;
};

/// Trivial representation (rho = 0, h, phi_h) used for all central-extension
/// cohomology.
LieDerRepresentation fiber_representation(const LieDerPair& base, const Matrix& phi_fiber);

/// Conditions for (psi, chi) to define a LieDer pair on g + h:
///   "p1": psi([x,y],z) + psi([y,z],x) + psi([z,x],y) = 0,
///   "p2": chi([x,y]) + phi_h psi(x,y) - psi(phi_g x,y) - psi(x,phi_g y) = 0.
Report verify_central_cocycle(const LieDerPair& base, const Matrix& phi_fiber, const CentralCocycle& c);

/// Bracket [x+h, y+l] = [x,y] + psi(x,y) and derivation
/// phi(x+h) = phi_g x + chi x + phi_h h on the basis (g, then h). Throws
/// PreconditionError naming "p1"/"p2" when the cocycle conditions fail.
LieDerCentralExtension build_central_extension(const LieDerPair& base, const Matrix& phi_fiber,
                                               const CentralCocycle& c);

/// Exactness ("exact"), centrality ("central"), the bracket being a Lie
/// bracket ("jacobi") and p preserving brackets ("projection").
Report verify_central_extension(const CentralExtension& e);

/// verify_central_extension plus the derivation rules ("leibniz") and the
/// commuting squares phi_total i = i phi_h ("fiber") and
/// p phi_total = phi_g p ("base").
Report verify_central_extension(const LieDerCentralExtension& e);

/// The section s with p s = Id obtained by solving with free variables zero;
/// for built extensions this is the block inclusion of g.
Matrix canonical_section(const CentralExtension& e);

/// psi(x,y) = [s x, s y] - s[x,y] in h-coordinates. Throws
/// PreconditionError ("section") unless p s = Id.
Cochain section_psi(const CentralExtension& e, const Matrix& section);

/// (psi, chi) with chi(x) = phi_total(s x) - s(phi_g x).
CentralCocycle section_to_cocycle(const LieDerCentralExtension& e, const Matrix& section);

/// H^2_LieDer(g; h) with the trivial representation (0, h, phi_h).
CohomologyReport classify_central_extensions(const LieDerPair& base, const Matrix& phi_fiber);

/// zeta(x + h) = x + phi(x) + h on g + h, phi : g -> h given as a fiber_dim x
/// g matrix. When c2 = c1 - partial(phi), zeta is an isomorphism of the
/// extensions built from c1 and c2.
Matrix shear_isomorphism(std::size_t base_dim, const Matrix& phi);

/// Ob(x,y) = phi_h psi(x,y) - psi(phi_g x,y) - psi(x,phi_g y), psi from the
/// section. Throws PreconditionError when phi_g is not a derivation of the
/// base or s is not a section; std::invalid_argument on shape mismatch.
Cochain derivation_pair_obstruction(const CentralExtension& e, const Matrix& phi_fiber, const Matrix& phi_base,
                                    const Matrix& section);

struct DerivationPairExtension {
    Cochain obstruction;
    std::optional<Cochain> lambda;    // d lambda = obstruction
    std::optional<Matrix> phi_total;  // phi(s x + i h) = s phi_g x + i(lambda x + phi_h h)

    bool extensible() const { return phi_total.has_value(); }
};

/// Lift of (phi_h, phi_g) to a derivation of the total algebra, found by
/// solving d lambda = Ob with free variables zero. Uses the canonical section
/// when none is given.
DerivationPairExtension extend_derivation_pair(const CentralExtension& e, const Matrix& phi_fiber,
                                               const Matrix& phi_base,
                                               std::optional<Matrix> section = std::nullopt);

struct ThetaMap {
    Matrix matrix;                     // column j = Theta(basis[j]) in the basis
    std::vector<Cochain> basis;        // representatives of H^2(g; h), trivial coefficients

    bool is_zero() const { return matrix.is_zero(); }
};

/// Theta[psi] = [phi_h psi - psi(phi_g ., .) - psi(., phi_g .)] on
/// H^2(g; h). Checks that coboundaries map to coboundaries.
ThetaMap theta_map(const LieAlgebra& base, std::size_t fiber_dim, const Matrix& phi_fiber,
                   const Matrix& phi_base);

}  // namespace lieder
