#pragma once

#include "lieder/cochain.hpp"
#include "lieder/lie_algebra.hpp"
#include "lieder/matrix.hpp"

#include <optional>
#include <vector>

namespace lieder {

/// Matrix of d : C^n(g;V) -> C^{n+1}(g;V) in wedge-basis coordinates.
Matrix ce_matrix(const LieAlgebra& a, const Representation& r, std::size_t n);

/// Matrix of delta on C^n(g;V).
Matrix delta_matrix(const Matrix& phi_g, const Matrix& phi_v, std::size_t n);

/// Matrix of the LieDer coboundary C^n_LieDer -> C^{n+1}_LieDer, assembled
/// from blocks [[D_n, 0], [(-1)^n Delta_n, D_{n-1}]] (only the first block
/// column when n = 1; the empty map when n = 0).
Matrix coboundary_matrix(const LieDerPair& p, const LieDerRepresentation& r, std::size_t n);

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_H = 0;
    std::vector<CochainPair> representatives;
};

struct CeCohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_H = 0;
    std::vector<Cochain> representatives;
};

/// H^n_LieDer(g;V). Representatives are the kernel-basis vectors of the
/// degree-n coboundary that enlarge the span of the coboundaries, taken in
/// canonical order. Degree 0 gives the zero group. Throws PreconditionError
/// when r is not a representation of p.
CohomologyReport lieder_cohomology(const LieDerPair& p, const LieDerRepresentation& r, std::size_t n);

/// Classical H^n(g;V), n >= 0.
CeCohomologyReport ce_cohomology(const LieAlgebra& a, const Representation& r, std::size_t n);

/// A primitive c with partial(c) = z, or nullopt when z is not exact. In
/// degree 1 the only primitive space is C^0_LieDer = 0. Throws
/// PreconditionError when z is not a cocycle.
std::optional<CochainPair> is_coboundary(const CochainPair& z, const LieDerPair& p,
                                         const LieDerRepresentation& r);

/// A primitive c with d c = z in the Chevalley-Eilenberg complex, or nullopt.
/// Throws PreconditionError when d z != 0.
std::optional<Cochain> is_ce_coboundary(const Cochain& z, const LieAlgebra& a, const Representation& r);

}  // namespace lieder
