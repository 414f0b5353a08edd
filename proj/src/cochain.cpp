#include "lieder/cochain.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lieder {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

WedgeBasis::WedgeBasis(std::size_t g_dim, std::size_t degree) : g_dim_(g_dim), degree_(degree) {
    tuples_.resize(binomial(g_dim, degree));
    if (degree > g_dim) return;
    std::vector<std::size_t> t(degree);
    std::iota(t.begin(), t.end(), std::size_t{0});
    while (true) {
        tuples_[position(t)] = t;
        // next combination in lexicographic order; every one is visited
        std::size_t k = degree;
        while (k > 0 && t[k - 1] == g_dim - degree + k - 1) --k;
        if (k == 0) break;
        ++t[k - 1];
        for (std::size_t m = k; m < degree; ++m) t[m] = t[m - 1] + 1;
    }
}

std::size_t WedgeBasis::position(std::span<const std::size_t> sorted) const {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < sorted.size(); ++k) pos += binomial(sorted[k], k + 1);
    return pos;
}

std::optional<WedgeBasis::Reduced> WedgeBasis::reduce(std::span<const std::size_t> indices) const {
    if (indices.size() != degree_) throw std::invalid_argument("tuple length differs from degree");
    std::vector<std::size_t> t(indices.begin(), indices.end());
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return std::nullopt;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    }
    for (std::size_t x : t) {
        if (x >= g_dim_) throw std::out_of_range("basis index out of range");
    }
    return Reduced{position(t), sign};
}

const WedgeBasis& wedge_basis(std::size_t g_dim, std::size_t degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<WedgeBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{g_dim, degree}];
    if (!slot) slot = std::make_unique<WedgeBasis>(g_dim, degree);
    return *slot;
}

// ---------------------------------------------------------------------------

Cochain::Cochain(std::size_t degree, std::size_t g_dim, std::size_t v_dim)
    : degree_(degree), g_dim_(g_dim), v_dim_(v_dim),
      coeffs_(cochain_dim(g_dim, v_dim, degree)) {}

Cochain::Cochain(std::size_t degree, std::size_t g_dim, std::size_t v_dim, Vector coefficients)
    : degree_(degree), g_dim_(g_dim), v_dim_(v_dim), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != cochain_dim(g_dim, v_dim, degree)) {
        throw std::invalid_argument("cochain coefficient count " + std::to_string(coeffs_.size()) +
                                    " differs from C(" + std::to_string(g_dim) + "," +
                                    std::to_string(degree) + ")*" + std::to_string(v_dim));
    }
}

Vector Cochain::at(std::span<const std::size_t> indices) const {
    const auto r = basis().reduce(indices);
    if (!r) return Vector(v_dim_);
    const auto v = value(r->position);
    Vector out(v.begin(), v.end());
    if (r->sign < 0)
        for (auto& x : out) x = -x;
    return out;
}

void Cochain::set(std::span<const std::size_t> indices, std::span<const Rational> value_in) {
    if (value_in.size() != v_dim_) throw std::invalid_argument("cochain value has wrong length");
    const auto r = basis().reduce(indices);
    if (!r) {
        if (!lieder::is_zero(value_in))
            throw std::invalid_argument("alternating cochain must vanish on repeated arguments");
        return;
    }
    auto slot = value(r->position);
    for (std::size_t a = 0; a < v_dim_; ++a) slot[a] = r->sign > 0 ? value_in[a] : Rational(-value_in[a]);
}

Cochain& Cochain::operator+=(const Cochain& other) {
    if (!same_shape(other)) throw std::invalid_argument("cochain sum shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
    if (!same_shape(other)) throw std::invalid_argument("cochain difference shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Cochain operator*(const Rational& s, Cochain a) {
    for (auto& x : a.coeffs_) x *= s;
    return a;
}

// ---------------------------------------------------------------------------

CochainPair::CochainPair(Cochain f)
    : degree_(f.degree()), g_dim_(f.g_dim()), v_dim_(f.v_dim()), f_(std::move(f)) {
    if (degree_ != 1) throw std::invalid_argument("a lone cochain forms a pair only in degree 1");
}

CochainPair::CochainPair(Cochain f, Cochain g)
    : degree_(f.degree()), g_dim_(f.g_dim()), v_dim_(f.v_dim()), f_(std::move(f)), g_(std::move(g)) {
    if (degree_ < 2 || g_->degree() + 1 != degree_ || g_->g_dim() != g_dim_ || g_->v_dim() != v_dim_) {
        throw std::invalid_argument("cochain pair needs degrees (n, n-1), n >= 2, over the same spaces");
    }
}

CochainPair CochainPair::zero(std::size_t degree, std::size_t g_dim, std::size_t v_dim) {
    if (degree == 0) {
        CochainPair z;
        z.g_dim_ = g_dim;
        z.v_dim_ = v_dim;
        return z;
    }
    if (degree == 1) return CochainPair(Cochain(1, g_dim, v_dim));
    return CochainPair(Cochain(degree, g_dim, v_dim), Cochain(degree - 1, g_dim, v_dim));
}

CochainPair CochainPair::from_vector(std::size_t degree, std::size_t g_dim, std::size_t v_dim,
                                     std::span<const Rational> coordinates) {
    if (coordinates.size() != lieder_cochain_dim(g_dim, v_dim, degree)) {
        throw std::invalid_argument("cochain pair coordinate count mismatch");
    }
    CochainPair out = zero(degree, g_dim, v_dim);
    if (degree == 0) return out;
    const std::size_t nf = out.f_->size();
    std::copy(coordinates.begin(), coordinates.begin() + nf, out.f_->coefficients().begin());
    if (out.g_) std::copy(coordinates.begin() + nf, coordinates.end(), out.g_->coefficients().begin());
    return out;
}

const Cochain& CochainPair::f() const {
    if (!f_) throw std::logic_error("degree-0 cochain pair has no components");
    return *f_;
}
const Cochain& CochainPair::g() const {
    if (!g_) throw std::logic_error("cochain pair of degree < 2 has no second component");
    return *g_;
}
Cochain& CochainPair::f() {
    if (!f_) throw std::logic_error("degree-0 cochain pair has no components");
    return *f_;
}
Cochain& CochainPair::g() {
    if (!g_) throw std::logic_error("cochain pair of degree < 2 has no second component");
    return *g_;
}

Vector CochainPair::to_vector() const {
    Vector out;
    if (f_) out = f_->coefficients();
    if (g_) out.insert(out.end(), g_->coefficients().begin(), g_->coefficients().end());
    return out;
}

bool CochainPair::is_zero() const {
    return (!f_ || f_->is_zero()) && (!g_ || g_->is_zero());
}

CochainPair operator+(const CochainPair& a, const CochainPair& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("cochain pair degree mismatch");
    CochainPair out = a;
    if (out.f_) *out.f_ += b.f();
    if (out.g_) *out.g_ += b.g();
    return out;
}

CochainPair operator-(const CochainPair& a, const CochainPair& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("cochain pair degree mismatch");
    CochainPair out = a;
    if (out.f_) *out.f_ -= b.f();
    if (out.g_) *out.g_ -= b.g();
    return out;
}

CochainPair operator*(const Rational& s, const CochainPair& a) {
    CochainPair out = a;
    if (out.f_) *out.f_ = s * *out.f_;
    if (out.g_) *out.g_ = s * *out.g_;
    return out;
}

std::size_t cochain_dim(std::size_t g_dim, std::size_t v_dim, std::size_t degree) {
    return binomial(g_dim, degree) * v_dim;
}

std::size_t lieder_cochain_dim(std::size_t g_dim, std::size_t v_dim, std::size_t degree) {
    if (degree == 0) return 0;
    if (degree == 1) return cochain_dim(g_dim, v_dim, 1);
    return cochain_dim(g_dim, v_dim, degree) + cochain_dim(g_dim, v_dim, degree - 1);
}

// ---------------------------------------------------------------------------

namespace {

void expand(const Cochain& f, std::span<const Vector> args, std::vector<std::size_t>& idx,
            const Rational& coeff, Vector& out) {
    const std::size_t k = idx.size();
    if (k == args.size()) {
        const auto r = f.basis().reduce(idx);
        if (!r) return;
        axpy(r->sign > 0 ? coeff : Rational(-coeff), f.value(r->position), out);
        return;
    }
    for (std::size_t i = 0; i < f.g_dim(); ++i) {
        if (sgn(args[k][i]) == 0) continue;
        if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
        idx.push_back(i);
        expand(f, args, idx, coeff * args[k][i], out);
        idx.pop_back();
    }
}

void require_g_valued(const Cochain& c) {
    if (c.v_dim() != c.g_dim()) {
        throw std::invalid_argument("Nijenhuis-Richardson bracket needs g-valued cochains");
    }
}

}  // namespace

Vector evaluate(const Cochain& f, std::span<const Vector> args) {
    if (args.size() != f.degree()) {
        throw std::invalid_argument("evaluate: cochain of degree " + std::to_string(f.degree()) +
                                    " given " + std::to_string(args.size()) + " arguments");
    }
    for (const auto& a : args) {
        if (a.size() != f.g_dim()) throw std::invalid_argument("evaluate: argument length");
    }
    Vector out(f.v_dim());
    std::vector<std::size_t> idx;
    expand(f, args, idx, Rational(1), out);
    return out;
}

Cochain linear_map_cochain(const Matrix& m) {
    Cochain c(1, m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto slot = c.value(j);
        for (std::size_t a = 0; a < m.rows(); ++a) slot[a] = m(a, j);
    }
    return c;
}

Matrix cochain_matrix(const Cochain& f) {
    if (f.degree() != 1) throw std::invalid_argument("only degree-1 cochains are linear maps");
    Matrix m(f.v_dim(), f.g_dim());
    for (std::size_t j = 0; j < f.g_dim(); ++j) m.set_column(j, f.value(j));
    return m;
}

Cochain bracket_cochain(const LieAlgebra& a) {
    Cochain c(2, a.dim(), a.dim());
    const auto& basis = c.basis();
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& t = basis.tuple(pos);
        const Vector v = a.bracket(t[0], t[1]);
        std::copy(v.begin(), v.end(), c.value(pos).begin());
    }
    return c;
}

Cochain ce_differential(const LieAlgebra& a, const Representation& r, const Cochain& f) {
    if (f.g_dim() != a.dim() || f.v_dim() != r.dim || r.rho.size() != a.dim()) {
        throw std::invalid_argument("d: cochain does not match algebra/representation dimensions");
    }
    const std::size_t n = f.degree();
    Cochain out(n + 1, a.dim(), r.dim);
    const auto& basis = out.basis();
    std::vector<std::size_t> rest;
    std::vector<std::size_t> with_bracket;
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& t = basis.tuple(pos);
        auto slot = out.value(pos);

        for (std::size_t k = 0; k <= n; ++k) {
            rest.assign(t.begin(), t.end());
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            const Vector fv = f.at(rest);
            if (lieder::is_zero(fv)) continue;
            const Vector term = r.rho[t[k]].apply(fv);
            axpy(k % 2 == 0 ? Rational(1) : Rational(-1), term, slot);
        }

        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t l = k + 1; l <= n; ++l) {
                const Vector c = a.bracket(t[k], t[l]);
                if (lieder::is_zero(c)) continue;
                const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
                for (std::size_t m = 0; m < a.dim(); ++m) {
                    if (sgn(c[m]) == 0) continue;
                    with_bracket.assign(1, m);
                    for (std::size_t q = 0; q <= n; ++q)
                        if (q != k && q != l) with_bracket.push_back(t[q]);
                    const auto red = f.basis().reduce(with_bracket);
                    if (!red) continue;
                    axpy(sign * c[m] * red->sign, f.value(red->position), slot);
                }
            }
        }
    }
    return out;
}

Cochain delta(const Matrix& phi_g, const Matrix& phi_v, const Cochain& f) {
    if (phi_g.rows() != f.g_dim() || phi_g.cols() != f.g_dim() || phi_v.rows() != f.v_dim() ||
        phi_v.cols() != f.v_dim()) {
        throw std::invalid_argument("delta: derivation sizes do not match the cochain");
    }
    Cochain out(f.degree(), f.g_dim(), f.v_dim());
    const auto& basis = out.basis();
    std::vector<std::size_t> idx;
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& t = basis.tuple(pos);
        auto slot = out.value(pos);
        for (std::size_t s = 0; s < t.size(); ++s) {
            for (std::size_t m = 0; m < f.g_dim(); ++m) {
                const Rational& coeff = phi_g(m, t[s]);
                if (sgn(coeff) == 0) continue;
                idx.assign(t.begin(), t.end());
                idx[s] = m;
                const auto red = basis.reduce(idx);
                if (!red) continue;
                axpy(coeff * red->sign, f.value(red->position), slot);
            }
        }
        const Vector post = phi_v.apply(f.value(pos));
        axpy(Rational(-1), post, slot);
    }
    return out;
}

Cochain d(const Cochain& f, const LieDerPair& p, const LieDerRepresentation& r) {
    return ce_differential(p.algebra, r, f);
}

Cochain delta(const Cochain& f, const LieDerPair& p, const LieDerRepresentation& r) {
    return delta(p.phi, r.phi, f);
}

CochainPair partial(const CochainPair& c, const LieDerPair& p, const LieDerRepresentation& r) {
    const std::size_t n = c.degree();
    if (c.g_dim() != p.dim() || c.v_dim() != r.dim) {
        throw std::invalid_argument("partial: cochain pair does not match the pair/representation");
    }
    if (n == 0) return CochainPair::zero(1, p.dim(), r.dim);
    const Cochain df = d(c.f(), p, r);
    Cochain lower = delta(c.f(), p, r);
    if (n % 2 == 1) lower = Rational(-1) * lower;
    if (n >= 2) lower += d(c.g(), p, r);
    return CochainPair(df, lower);
}

Cochain nr_compose(const Cochain& p_cochain, const Cochain& q_cochain) {
    require_g_valued(p_cochain);
    require_g_valued(q_cochain);
    if (p_cochain.g_dim() != q_cochain.g_dim()) throw std::invalid_argument("NR: algebra size mismatch");
    if (p_cochain.degree() == 0 || q_cochain.degree() == 0) {
        throw std::invalid_argument("NR: cochains must have degree >= 1");
    }
    const std::size_t g = p_cochain.g_dim();
    const std::size_t q1 = q_cochain.degree();        // q + 1
    const std::size_t p = p_cochain.degree() - 1;
    const std::size_t total = p + q1;                 // p + q + 1
    Cochain out(total, g, g);
    const auto& basis = out.basis();
    if (basis.size() == 0) return out;

    // (q+1, p)-unshuffles of positions 0..total-1
    std::vector<std::vector<std::size_t>> subsets;
    {
        std::vector<bool> mask(total, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(q1), true);
        do {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < total; ++i)
                if (mask[i]) s.push_back(i);
            subsets.push_back(std::move(s));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }

    std::vector<std::size_t> inner, outer;
    for (std::size_t pos = 0; pos < basis.size(); ++pos) {
        const auto& t = basis.tuple(pos);
        auto slot = out.value(pos);
        for (const auto& s : subsets) {
            inner.clear();
            outer.assign(1, 0);
            std::size_t inversions = 0;
            std::size_t si = 0;
            for (std::size_t i = 0; i < total; ++i) {
                if (si < s.size() && s[si] == i) {
                    inner.push_back(t[i]);
                    ++si;
                } else {
                    outer.push_back(t[i]);
                    inversions += s.size() - si;  // later subset entries precede this one
                }
            }
            const auto qv = q_cochain.value(q_cochain.basis().position(inner));
            const Rational sign = inversions % 2 == 0 ? 1 : -1;
            for (std::size_t m = 0; m < g; ++m) {
                if (sgn(qv[m]) == 0) continue;
                outer[0] = m;
                const auto red = p_cochain.basis().reduce(outer);
                if (!red) continue;
                axpy(sign * qv[m] * red->sign, p_cochain.value(red->position), slot);
            }
        }
    }
    return out;
}

Cochain nr_bracket(const Cochain& p_cochain, const Cochain& q_cochain) {
    require_g_valued(p_cochain);
    require_g_valued(q_cochain);
    const std::size_t p = p_cochain.degree() - 1;
    const std::size_t q = q_cochain.degree() - 1;
    Cochain out = nr_compose(p_cochain, q_cochain);
    const Cochain back = nr_compose(q_cochain, p_cochain);
    if ((p * q) % 2 == 0) {
        out -= back;
    } else {
        out += back;
    }
    return out;
}

}  // namespace lieder
