#include "lieder/lie2.hpp"

#include "lieder/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace lieder {

namespace {

using Args = std::vector<Vector>;

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
}

void require_cochain(const Cochain& c, std::size_t degree, std::size_t g, std::size_t v, const char* what) {
    if (c.degree() != degree || c.g_dim() != g || c.v_dim() != v) {
        throw std::invalid_argument(std::string(what) + " has the wrong shape");
    }
}

/// Multilinear operations of a skeletal structure on coordinate vectors.
struct Ops {
    const Cochain& bracket;
    const std::vector<Matrix>& action;
    const Cochain& l3;

    Vector l2(const Vector& x, const Vector& y) const { return evaluate(bracket, Args{x, y}); }
    /// l2(x, m) for x in V0, m in V1
    Vector act(const Vector& x, const Vector& m) const {
        Vector out(m.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(x[i]) != 0) out = add(out, scale(x[i], action[i].apply(m)));
        return out;
    }
    Vector t3(const Vector& x, const Vector& y, const Vector& z) const { return evaluate(l3, Args{x, y, z}); }
};

}  // namespace

Report verify_lie2der(const SkeletalLie2& s, const Lie2Derivation& d) {
    const std::size_t n0 = s.dim0, n1 = s.dim1;
    require_cochain(s.l2_00, 2, n0, n0, "l2 on V0");
    require_cochain(s.l3, 3, n0, n1, "l3");
    require_cochain(d.lX, 2, n0, n1, "l_X");
    if (s.l2_01.size() != n0) throw std::invalid_argument("l2 on V0 x V1 needs one matrix per basis element of V0");
    for (const auto& m : s.l2_01) require_shape(m, n1, n1, "action matrix");
    require_shape(d.X0, n0, n0, "X0");
    require_shape(d.X1, n1, n1, "X1");

    const Ops op{s.l2_00, s.l2_01, s.l3};
    const auto e0 = [&](std::size_t i) { return basis_vector(n0, i); };
    const auto e1 = [&](std::size_t i) { return basis_vector(n1, i); };
    const auto lx = [&](const Vector& x, const Vector& y) { return evaluate(d.lX, Args{x, y}); };
    Report report;

    for (std::size_t a = 0; a < n0; ++a)
        for (std::size_t b = a + 1; b < n0; ++b) {
            const Vector x = e0(a), y = e0(b);
            const Vector lhs = d.X0.apply(op.l2(x, y));
            const Vector rhs = add(op.l2(d.X0.apply(x), y), op.l2(x, d.X0.apply(y)));
            if (lhs != rhs) report.add("der:b", {a, b});
            for (std::size_t c = b + 1; c < n0; ++c) {
                const Vector z = e0(c);
                Vector jac = op.l2(x, op.l2(y, z));
                jac = add(jac, op.l2(y, op.l2(z, x)));
                jac = add(jac, op.l2(z, op.l2(x, y)));
                if (!is_zero(jac)) report.add("lie2:c", {a, b, c});

                const auto term = [&](const Vector& p, const Vector& q, const Vector& r) {
                    Vector t = lx(p, op.l2(q, r));
                    t = add(t, op.act(p, lx(q, r)));
                    return add(t, op.t3(d.X0.apply(p), q, r));
                };
                Vector rhs3 = term(x, y, z);
                rhs3 = add(rhs3, term(y, z, x));
                rhs3 = add(rhs3, term(z, x, y));
                if (d.X1.apply(op.t3(x, y, z)) != rhs3) report.add("der:d", {a, b, c});

                for (std::size_t f = c + 1; f < n0; ++f) {
                    const Vector& w = x;
                    const Vector& xx = y;
                    const Vector& yy = z;
                    const Vector zz = e0(f);
                    // l2(m, v) = -l2(v, m) for m in V1, v in V0
                    const auto l2_m0 = [&](const Vector& m, const Vector& v) { return scale(-1, op.act(v, m)); };
                    Vector lhs4 = op.t3(op.l2(w, xx), yy, zz);
                    lhs4 = add(lhs4, l2_m0(op.t3(w, xx, zz), yy));
                    lhs4 = add(lhs4, op.t3(w, op.l2(xx, zz), yy));
                    lhs4 = add(lhs4, op.t3(op.l2(w, zz), xx, yy));
                    Vector rhs4 = l2_m0(op.t3(w, xx, yy), zz);
                    rhs4 = add(rhs4, op.t3(op.l2(w, yy), xx, zz));
                    rhs4 = add(rhs4, op.t3(w, op.l2(xx, yy), zz));
                    rhs4 = add(rhs4, op.act(w, op.t3(xx, yy, zz)));
                    rhs4 = add(rhs4, l2_m0(op.t3(w, yy, zz), xx));
                    rhs4 = add(rhs4, op.t3(w, op.l2(yy, zz), xx));
                    if (lhs4 != rhs4) report.add("lie2:e", {a, b, c, f});
                }
            }
            for (std::size_t m = 0; m < n1; ++m) {
                const Vector u = e1(m);
                // l2(x,l2(y,m)) + l2(y,l2(m,x)) + l2(m,l2(x,y))
                Vector s4 = op.act(x, op.act(y, u));
                s4 = subtract(s4, op.act(y, op.act(x, u)));
                s4 = subtract(s4, op.act(op.l2(x, y), u));
                if (!is_zero(s4)) report.add("lie2:d", {a, b, m});
            }
        }
    for (std::size_t a = 0; a < n0; ++a)
        for (std::size_t m = 0; m < n1; ++m) {
            const Vector x = e0(a), u = e1(m);
            const Vector lhs = d.X1.apply(op.act(x, u));
            const Vector rhs = add(op.act(d.X0.apply(x), u), op.act(x, d.X1.apply(u)));
            if (lhs != rhs) report.add("der:c", {a, m});
        }
    return report;
}

Triple pair_to_triple(const SkeletalLie2& s, const Lie2Derivation& d) {
    const Report check = verify_lie2der(s, d);
    if (!check.ok()) throw PreconditionError("not a skeletal Lie 2-algebra with derivation", check);
    Triple t;
    t.pair.algebra = LieAlgebra(s.dim0);
    const auto& basis = s.l2_00.basis();
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& tup = basis.tuple(pos);
        t.pair.algebra.set_bracket(tup[0], tup[1], s.l2_00.value(pos));
    }
    t.pair.phi = d.X0;
    t.rep.dim = s.dim1;
    t.rep.rho = s.l2_01;
    t.rep.phi = d.X1;
    t.cocycle = CochainPair(s.l3, Rational(-1) * d.lX);
    if (!partial(t.cocycle, t.pair, t.rep).is_zero()) throw std::logic_error("(l3, -l_X) is not closed");
    return t;
}

SkeletalLie2Der triple_to_pair(const Triple& t) {
    const std::size_t g = t.pair.dim();
    Report check = verify_representation(t.pair, t.rep);
    check.merge(verify_pair(t.pair));
    if (t.cocycle.degree() != 3 || t.cocycle.g_dim() != g || t.cocycle.v_dim() != t.rep.dim) {
        throw std::invalid_argument("triple cocycle must be a degree-3 pair over (g, V)");
    }
    if (check.ok() && !partial(t.cocycle, t.pair, t.rep).is_zero()) check.add("cocycle", {3}, "partial != 0");
    if (!check.ok()) throw PreconditionError("not a valid triple", check);

    SkeletalLie2Der out;
    out.algebra.dim0 = g;
    out.algebra.dim1 = t.rep.dim;
    out.algebra.l2_00 = bracket_cochain(t.pair.algebra);
    out.algebra.l2_01 = t.rep.rho;
    out.algebra.l3 = t.theta3();
    out.derivation.X0 = t.pair.phi;
    out.derivation.X1 = t.rep.phi;
    out.derivation.lX = Rational(-1) * t.theta2();
    return out;
}

WitnessReport verify_equivalence_witness(const Triple& t, const Triple& t2, const EquivalenceWitness& w) {
    const std::size_t g = t.pair.dim(), g2 = t2.pair.dim();
    const std::size_t v = t.rep.dim, v2 = t2.rep.dim;
    require_shape(w.alpha, g2, g, "alpha");
    require_shape(w.beta, v2, v, "beta");
    require_shape(w.eta, v2, g, "eta");
    require_cochain(w.gamma, 2, g, v2, "gamma");
    if (!inverse(w.alpha) || !inverse(w.beta)) {
        Report r;
        r.add("invertible", {});
        throw PreconditionError("alpha and beta must be invertible", r);
    }

    const Cochain b1 = bracket_cochain(t.pair.algebra);
    const Cochain b2 = bracket_cochain(t2.pair.algebra);
    const Ops op{b1, t.rep.rho, t.theta3()};
    const Ops op2{b2, t2.rep.rho, t2.theta3()};
    const auto gam = [&](const Vector& x, const Vector& y) { return evaluate(w.gamma, Args{x, y}); };
    const auto th2 = [&](const Vector& x, const Vector& y) { return evaluate(t.theta2(), Args{x, y}); };
    const auto th2b = [&](const Vector& x, const Vector& y) { return evaluate(t2.theta2(), Args{x, y}); };
    const Matrix& A = w.alpha;
    const Matrix& B = w.beta;

    WitnessReport out;
    Report& c = out.conditions;
    if (t2.pair.phi * A != A * t.pair.phi) c.add("a", {});
    if (t2.rep.phi * B != B * t.rep.phi) c.add("b", {});
    for (std::size_t i = 0; i < g; ++i) {
        const Vector x = basis_vector(g, i);
        for (std::size_t m = 0; m < v; ++m) {
            const Vector u = basis_vector(v, m);
            if (B.apply(op.act(x, u)) != op2.act(A.apply(x), B.apply(u))) c.add("c", {i, m});
        }
    }

    // gamma(x,y) evaluated on the pair
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            const Vector x = basis_vector(g, i), y = basis_vector(g, j);
            if (A.apply(op.l2(x, y)) != op2.l2(A.apply(x), A.apply(y))) c.add("alpha", {i, j});

            Vector lhs = scale(-1, B.apply(th2(x, y)));
            lhs = add(lhs, gam(t.pair.phi.apply(x), y));
            lhs = add(lhs, gam(x, t.pair.phi.apply(y)));
            lhs = subtract(lhs, t2.rep.phi.apply(gam(x, y)));
            lhs = add(lhs, th2b(A.apply(x), A.apply(y)));
            Vector rhs = scale(-1, op2.act(A.apply(y), w.eta.apply(x)));
            rhs = add(rhs, op2.act(A.apply(x), w.eta.apply(y)));
            rhs = subtract(rhs, w.eta.apply(op.l2(x, y)));
            if (lhs != rhs) c.add("e", {i, j});

            for (std::size_t k = j + 1; k < g; ++k) {
                const Vector z = basis_vector(g, k);
                Vector l = op2.act(A.apply(x), gam(y, z));
                l = add(l, op2.act(A.apply(y), gam(z, x)));
                l = add(l, op2.act(A.apply(z), gam(x, y)));
                l = add(l, op2.t3(A.apply(x), A.apply(y), A.apply(z)));
                Vector r = gam(op.l2(x, y), z);
                r = add(r, gam(op.l2(y, z), x));
                r = add(r, gam(op.l2(z, x), y));
                r = add(r, B.apply(op.t3(x, y, z)));
                if (l != r) c.add("d", {i, j, k});
            }
        }

    // The same data read as f = (alpha, beta, gamma), B = eta between the
    // associated skeletal pairs.
    const SkeletalLie2Der p = triple_to_pair(t);
    const SkeletalLie2Der p2 = triple_to_pair(t2);
    const Ops s1{p.algebra.l2_00, p.algebra.l2_01, p.algebra.l3};
    const Ops s2{p2.algebra.l2_00, p2.algebra.l2_01, p2.algebra.l3};
    const auto lx = [&](const Vector& x, const Vector& y) { return evaluate(p.derivation.lX, Args{x, y}); };
    const auto lx2 = [&](const Vector& x, const Vector& y) { return evaluate(p2.derivation.lX, Args{x, y}); };
    // l2'(m, x) = -l2'(x, m)
    const auto l2m0 = [&](const Vector& m, const Vector& x) { return scale(-1, s2.act(x, m)); };
    Report& iso = out.isomorphism;
    if (p2.derivation.X0 * A - A * p.derivation.X0 != Matrix(g2, g)) iso.add("iso:a", {});
    if (p2.derivation.X1 * B - B * p.derivation.X1 != Matrix(v2, v)) iso.add("iso:b", {});
    for (std::size_t i = 0; i < g; ++i) {
        const Vector x = basis_vector(g, i);
        for (std::size_t m = 0; m < v; ++m) {
            const Vector u = basis_vector(v, m);
            if (!is_zero(subtract(B.apply(s1.act(x, u)), s2.act(A.apply(x), B.apply(u))))) iso.add("f:action", {i, m});
        }
        for (std::size_t j = i + 1; j < g; ++j) {
            const Vector y = basis_vector(g, j);
            if (!is_zero(subtract(A.apply(s1.l2(x, y)), s2.l2(A.apply(x), A.apply(y))))) iso.add("f:bracket", {i, j});
            Vector lhs = B.apply(lx(x, y));
            lhs = add(lhs, gam(p.derivation.X0.apply(x), y));
            lhs = add(lhs, gam(x, p.derivation.X0.apply(y)));
            lhs = subtract(lhs, p2.derivation.X1.apply(gam(x, y)));
            lhs = subtract(lhs, lx2(A.apply(x), A.apply(y)));
            Vector rhs = l2m0(w.eta.apply(x), A.apply(y));
            rhs = add(rhs, s2.act(A.apply(x), w.eta.apply(y)));
            rhs = subtract(rhs, w.eta.apply(s1.l2(x, y)));
            if (lhs != rhs) iso.add("iso:c", {i, j});
            for (std::size_t k = j + 1; k < g; ++k) {
                const Vector z = basis_vector(g, k);
                Vector l = s2.act(A.apply(x), gam(y, z));
                l = add(l, s2.act(A.apply(y), gam(z, x)));
                l = add(l, s2.act(A.apply(z), gam(x, y)));
                l = add(l, s2.t3(A.apply(x), A.apply(y), A.apply(z)));
                Vector r = gam(s1.l2(x, y), z);
                r = add(r, gam(s1.l2(y, z), x));
                r = add(r, gam(s1.l2(z, x), y));
                r = add(r, B.apply(s1.t3(x, y, z)));
                if (l != r) iso.add("f:l3", {i, j, k});
            }
        }
    }
    return out;
}

}  // namespace lieder
