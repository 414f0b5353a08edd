#pragma once

#include "lieder/cochain.hpp"
#include "lieder/lie_algebra.hpp"
#include "lieder/report.hpp"

#include <vector>

namespace lieder {

/// Skeletal Lie 2-algebra V1 --0--> V0: l2 on V0 x V0 (l2_00), the action
/// l2(e_i, m) = l2_01[i] m of V0 on V1, and l3 : wedge^3 V0 -> V1.
/// l2(m, x) = -l2(x, m) and l2 vanishes on V1 x V1.
struct SkeletalLie2 {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    Cochain l2_00;
    std::vector<Matrix> l2_01;
    Cochain l3;

    friend bool operator==(const SkeletalLie2&, const SkeletalLie2&) = default;
};

/// Degree-0 derivation (X0, X1, l_X) with l_X : wedge^2 V0 -> V1.
struct Lie2Derivation {
    Matrix X0;
    Matrix X1;
    Cochain lX;

    friend bool operator==(const Lie2Derivation&, const Lie2Derivation&) = default;
};

/// LieDer pair, representation, and a degree-3 cochain pair (theta3, theta2).
struct Triple {
    LieDerPair pair;
    LieDerRepresentation rep;
    CochainPair cocycle;

    const Cochain& theta3() const { return cocycle.f(); }
    const Cochain& theta2() const { return cocycle.g(); }
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Axioms with l1 = 0, on basis tuples:
///   "lie2:c"  l2(x,l2(y,z)) + cyclic = 0
///   "lie2:d"  l2(x,l2(y,m)) + l2(y,l2(m,x)) + l2(m,l2(x,y)) = 0
///   "lie2:e"  the l3 identity on four elements of V0
///   "der:b"   X0 l2(x,y) = l2(X0 x,y) + l2(x,X0 y)
///   "der:c"   X1 l2(x,m) = l2(X0 x,m) + l2(x,X1 m)
///   "der:d"   X1 l3(x,y,z) = l_X(x,l2(y,z)) + l2(x,l_X(y,z)) + l3(X0 x,y,z) + cyclic
/// Antisymmetry (a) holds by storage and (b) is vacuous. Throws
/// std::invalid_argument on dimension mismatch.
Report verify_lie2der(const SkeletalLie2& s, const Lie2Derivation& d);

/// ((V0, X0), (rho = l2(., .) on V1, X1), (l3, -l_X)). Throws
/// PreconditionError when the axioms fail.
Triple pair_to_triple(const SkeletalLie2& s, const Lie2Derivation& d);

struct SkeletalLie2Der {
    SkeletalLie2 algebra;
    Lie2Derivation derivation;
};

/// l2 from the bracket and rho, l3 = theta3, X0 = phi_g, X1 = phi_V and
/// l_X = -theta2 (this sign makes der:d the second component of the
/// cocycle condition). Throws PreconditionError unless the pair, the
/// representation and the cocycle condition all check out.
SkeletalLie2Der triple_to_pair(const Triple& t);

/// alpha : g -> g', beta : V -> V', gamma : wedge^2 g -> V', eta : g -> V'.
struct EquivalenceWitness {
    Matrix alpha;
    Matrix beta;
    Cochain gamma;
    Matrix eta;
};

struct WitnessReport {
    /// Rules "alpha" (bracket), "a", "b", "c", "d", "e".
    Report conditions;
    /// Lie 2-algebra morphism ("f:bracket", "f:action", "f:l3") and
    /// derivation-isomorphism ("iso:a", "iso:b", "iso:c") conditions for
    /// f = (alpha, beta, gamma), B = eta on the associated skeletal pairs.
    Report isomorphism;

    bool ok() const { return conditions.ok(); }
    bool induces_isomorphism() const { return isomorphism.ok(); }
};

/// Checks a supplied equivalence witness between two triples. Throws
/// PreconditionError when alpha or beta is singular.
WitnessReport verify_equivalence_witness(const Triple& t, const Triple& t2, const EquivalenceWitness& w);

}  // namespace lieder
