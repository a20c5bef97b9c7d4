#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "genus0/bipoly.hpp"
#include "genus0/symbolic.hpp"

namespace genus0 {

// Moebius transformation t -> (a t + b)/(c t + d), ad - bc != 0, as a
// projective coefficient quadruple over a field K.
template <class K>
struct Mobius {
    K a, b, c, d;

    Mobius() : a(K::one()), b(K::zero()), c(K::zero()), d(K::one()) {}
    Mobius(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (det().is_zero()) throw arith_error("Moebius determinant ad - bc vanishes");
    }

    static Mobius identity() { return Mobius(); }

    K det() const { return a * d - b * c; }
    K trace() const { return a + d; }

    bool is_identity() const { return b.is_zero() && c.is_zero() && a == d; }

    friend Mobius compose(const Mobius& m, const Mobius& n) {  // m after n
        return Mobius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                      m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
    }
    Mobius inverse() const { return Mobius(d, -b, -c, a); }
    Mobius power(int e) const {
        if (e < 0) return inverse().power(-e);
        Mobius r = identity(), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = compose(r, base);
            if (e > 1) base = compose(base, base);
        }
        return r;
    }

    // Projective equality of quadruples.
    friend bool projectively_equal(const Mobius& m, const Mobius& n) {
        std::array<K, 4> u{m.a, m.b, m.c, m.d}, v{n.a, n.b, n.c, n.d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (u[i] * v[j] != u[j] * v[i]) return false;
        return true;
    }

    std::optional<K> apply(const K& t) const {
        K den = c * t + d;
        if (den.is_zero()) return std::nullopt;
        return (a * t + b) / den;
    }
    template <class V>
    V apply_to(const V& u) const {
        auto lift = [](const K& k) { return V(k); };
        return (lift(a) * u + lift(b)) / (lift(c) * u + lift(d));
    }
    BiRatFunc<K> apply_birat(const BiRatFunc<K>& u) const {
        auto k2b = [](const K& k) { return BiRatFunc<K>::constant(k); };
        return (k2b(a) * u + k2b(b)) / (k2b(c) * u + k2b(d));
    }
    RatFunc<K> as_ratfunc(const std::string& var = "t") const {
        return RatFunc<K>(Poly<K>(var, {b, a}), Poly<K>(var, {d, c}));
    }

    std::string str() const { return as_ratfunc().str(); }
};

// Reads a degree-(<=1)/(<=1) reduced rational function as a Moebius map.
template <class K>
Mobius<K> mobius_from_ratfunc(const RatFunc<K>& r) {
    if (r.num().degree() > 1 || r.den().degree() > 1)
        throw arith_error("rational function is not a Moebius transformation (degree > 1)");
    return Mobius<K>(r.num().coeff(1), r.num().coeff(0), r.den().coeff(1), r.den().coeff(0));
}

// Vector field coefficient of the 1d Lie symmetry Y(t) = -b + (d-a) t + c t^2.
template <class K>
Poly<K> lie_symmetry_1d(const Mobius<K>& m) {
    return Poly<K>("t", {-m.b, m.d - m.a, m.c});
}

// Normalized trace square (a+d)^2/(ad-bc): invariant under projective scaling
// and under conjugation, so equal for conjugate Moebius maps.
template <class K>
K conjugacy_invariant(const Mobius<K>& m) {
    K t = m.trace();
    return t * t / m.det();
}

// Canonical quadruple over the symbolic field: for affine maps (c = 0) scale
// so d = 1; otherwise clear parameter denominators to a primitive polynomial
// quadruple with the leading rational coefficient of c positive. This is the
// representative whose 1d Lie symmetry assembles to the familiar planar
// fields of the worked examples.
inline Mobius<SymScalar> canonical_quadruple(const Mobius<SymScalar>& m) {
    auto delta_free = [](const SymScalar& s) { return s.im().is_zero(); };
    if (!delta_free(m.a) || !delta_free(m.b) || !delta_free(m.c) || !delta_free(m.d))
        throw arith_error("Moebius coefficients did not reduce to the base parameter field");
    if (m.c.is_zero()) {
        SymScalar inv = m.d.inverse();
        return Mobius<SymScalar>(m.a * inv, m.b * inv, SymScalar::zero(), SymScalar::one());
    }
    std::array<ParamRat, 4> e{m.a.re(), m.b.re(), m.c.re(), m.d.re()};
    ParamPoly l(1);
    for (const auto& r : e) l = ParamPoly::lcm(l, r.den());
    std::array<ParamPoly, 4> p;
    for (int i = 0; i < 4; ++i) {
        ParamRat scaled = e[i] * ParamRat(l);
        if (!scaled.is_polynomial()) throw arith_error("denominator clearing failed");
        p[i] = scaled.num();
    }
    ParamPoly g(0);
    for (const auto& q : p) g = ParamPoly::gcd(g, q);
    if (!g.is_one() && !g.is_zero())
        for (auto& q : p) q = ParamPoly::divexact(q, g);
    Rat content = 0;
    for (const auto& q : p) content = rat_content_gcd(content, q.rational_content());
    if (content != 0 && content != 1) {
        ParamPoly inv{Rat(1 / content)};
        for (auto& q : p) q = q * inv;
    }
    if (p[2].lead_rational() < 0)
        for (auto& q : p) q = -q;
    return Mobius<SymScalar>(SymScalar(ParamRat(p[0])), SymScalar(ParamRat(p[1])),
                             SymScalar(ParamRat(p[2])), SymScalar(ParamRat(p[3])));
}

inline Mobius<Scalar> canonical_quadruple(const Mobius<Scalar>& m) {
    Scalar s = m.c.is_zero() ? m.d : m.c;
    Scalar inv = s.inverse();
    return Mobius<Scalar>(m.a * inv, m.b * inv, m.c * inv, m.d * inv);
}

enum class DynClass { hyperbolic, parabolic, rotation };

inline const char* dyn_class_name(DynClass c) {
    switch (c) {
        case DynClass::hyperbolic: return "hyperbolic";
        case DynClass::parabolic: return "parabolic";
        default: return "rotation";
    }
}

// One fixed point of a Moebius map, possibly the point at infinity.
struct FixedPoint {
    bool at_infinity = false;
    Scalar t;

    static FixedPoint infinity() { return {true, Scalar()}; }
    static FixedPoint finite(const Scalar& v) { return {false, v}; }
    std::string str() const { return at_infinity ? "inf" : t.str(); }
};

// Full dynamics data of a non-identity Moebius map: discriminant, multiplier,
// fixed points t0 = ((a-d)+r)/(2c), t1 = ((a-d)-r)/(2c) with r the canonical
// square root of Delta, and xi = M'(t0) = (T-r)/(T+r). |xi| != 1 gives an
// attractor/repeller pair, |xi| = 1 a rotation of angle theta = arg(xi)/2pi,
// Delta = 0 a parabolic map with one global attractor.
struct MobiusClass {
    Scalar delta;
    Scalar xi;  // meaningless (zero) in the parabolic case
    DynClass tag = DynClass::parabolic;
    FixedPoint t0, t1;
    FixedPoint attractor, repeller;  // hyperbolic only
    double theta = 0.0;              // rotation only, in [0,1)
    int exact_period = 0;            // rotation only; 0 when xi is not a root of unity (order <= cap)
};

inline double arg_to_unit(const Complex& z) {
    double th = std::arg(z) / (2.0 * 3.14159265358979323846);
    if (th < 0) th += 1.0;
    if (th >= 1.0) th -= 1.0;
    return th;
}

// |xi| compared with 1, exactly for exact scalars.
inline int unit_modulus_compare(const Scalar& xi) {
    if (xi.is_float()) {
        double m = std::abs(xi.cplx());
        return m > 1 ? 1 : (m < 1 ? -1 : 0);
    }
    if (xi.is_rational()) {
        Rat a = rat_abs(xi.rat());
        return a > 1 ? 1 : (a < 1 ? -1 : 0);
    }
    if (xi.quad_part().d < 0) {
        Rat m = xi.abs_sq_complex();
        return m > 1 ? 1 : (m < 1 ? -1 : 0);
    }
    // real quadratic irrational: compare (xi-1)(xi+1) with 0
    Scalar w = (xi - Scalar(1)) * (xi + Scalar(1));
    return w.sign();
}

inline MobiusClass classify(const Mobius<Scalar>& m, int period_cap = 200) {
    if (m.is_identity()) throw arith_error("classify: the identity map has no dynamics class");
    MobiusClass out;
    Scalar two(2), four(4);
    Scalar diff = m.d - m.a;
    out.delta = diff * diff + four * m.b * m.c;
    Scalar T = m.trace();

    if (out.delta.is_zero()) {
        out.tag = DynClass::parabolic;
        if (m.c.is_zero()) {
            out.t0 = FixedPoint::infinity();  // translation
        } else {
            out.t0 = FixedPoint::finite((m.a - m.d) / (two * m.c));
        }
        out.t1 = out.t0;
        return out;
    }

    if (m.c.is_zero()) {
        out.t0 = FixedPoint::finite(m.b / (m.d - m.a));
        out.t1 = FixedPoint::infinity();
        out.xi = m.a / m.d;
    } else {
        Scalar r = canonical_sqrt(out.delta);
        out.t0 = FixedPoint::finite(((m.a - m.d) + r) / (two * m.c));
        out.t1 = FixedPoint::finite(((m.a - m.d) - r) / (two * m.c));
        out.xi = (T - r) / (T + r);
    }

    bool unit = out.xi.is_exact() ? out.xi.has_unit_modulus()
                                  : std::abs(std::abs(out.xi.cplx()) - 1.0) < 1e-12;
    if (unit) {
        out.tag = DynClass::rotation;
        out.theta = arg_to_unit(out.xi.to_complex());
        out.exact_period = out.xi.is_exact() ? root_of_unity_order(out.xi, period_cap) : 0;
    } else {
        out.tag = DynClass::hyperbolic;
        int cmp = unit_modulus_compare(out.xi);
        if (cmp < 0) { out.attractor = out.t0; out.repeller = out.t1; }
        else { out.attractor = out.t1; out.repeller = out.t0; }
    }
    return out;
}

namespace detail {

// Kernel of a small homogeneous system over a field, by Gaussian elimination.
template <class K>
std::vector<std::array<K, 4>> kernel4(std::array<std::array<K, 4>, 4> mat) {
    int pivot_row = 0;
    std::array<int, 4> pivot_col{-1, -1, -1, -1};
    for (int col = 0; col < 4 && pivot_row < 4; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < 4; ++r)
            if (!mat[r][col].is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(mat[sel], mat[pivot_row]);
        K inv = K::one() / mat[pivot_row][col];
        for (int j = 0; j < 4; ++j) mat[pivot_row][j] = mat[pivot_row][j] * inv;
        for (int r = 0; r < 4; ++r) {
            if (r == pivot_row || mat[r][col].is_zero()) continue;
            K f = mat[r][col];
            for (int j = 0; j < 4; ++j) mat[r][j] = mat[r][j] - f * mat[pivot_row][j];
        }
        pivot_col[pivot_row++] = col;
    }
    std::vector<std::array<K, 4>> basis;
    for (int col = 0; col < 4; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < pivot_row; ++r) is_pivot |= (pivot_col[r] == col);
        if (is_pivot) continue;
        std::array<K, 4> v{K::zero(), K::zero(), K::zero(), K::zero()};
        v[col] = K::one();
        for (int r = 0; r < pivot_row; ++r) v[pivot_col[r]] = -mat[r][col];
        basis.push_back(v);
    }
    return basis;
}

inline long complexity(const Scalar& s) {
    return static_cast<long>(s.str().size());
}
inline long complexity(const SymScalar& s) {
    return static_cast<long>(s.str().size());
}
template <class K>
long complexity(const Mobius<K>& m) {
    return complexity(m.a) + complexity(m.b) + complexity(m.c) + complexity(m.d);
}

template <class K>
std::optional<K> sqrt_of_ratio(const K& value);

template <>
inline std::optional<Scalar> sqrt_of_ratio(const Scalar& value) {
    if (auto r = value.sqrt_in_field()) return r;
    if (value.is_rational()) return Scalar::sqrt_of(value.rat());
    return std::nullopt;  // would need a tower
}

template <>
inline std::optional<SymScalar> sqrt_of_ratio(const SymScalar& value) {
    if (!value.im().is_zero()) return std::nullopt;
    const ParamRat& v = value.re();
    if (v.is_constant()) {
        Scalar s = Scalar::sqrt_of(v.constant());
        return SymScalar::from_scalar(s);
    }
    if (auto r = ratfunc_sqrt(v)) return SymScalar(*r);
    return SymScalar::sqrt_ext(v);  // extension-valued conjugator, still exact
}

}  // namespace detail

// A conjugator g with m = g^-1 o n o g, when one exists over the scalar field
// (or a quadratic extension of it). Returns nullopt when the conjugacy
// invariants differ or no conjugator could be built. The returned map is one
// valid representative; conjugators are never unique.
template <class K>
std::optional<Mobius<K>> solve_conjugator(const Mobius<K>& m, const Mobius<K>& n) {
    if (m.is_identity() || n.is_identity()) throw arith_error("solve_conjugator: identity input");
    if (conjugacy_invariant(m) != conjugacy_invariant(n)) return std::nullopt;

    // g m = mu n g forces mu^2 = det(m)/det(n)
    auto mu0 = detail::sqrt_of_ratio<K>(m.det() / n.det());
    if (!mu0) return std::nullopt;

    std::optional<Mobius<K>> best;
    long best_score = 0;
    auto consider = [&](const std::array<K, 4>& v) {
        K det = v[0] * v[3] - v[1] * v[2];
        if (det.is_zero()) return;
        Mobius<K> g(v[0], v[1], v[2], v[3]);
        if (!projectively_equal(compose(compose(g.inverse(), n), g), m)) return;
        long score = detail::complexity(g);
        if (!best || score < best_score) { best = g; best_score = score; }
    };

    for (int sgn = 0; sgn < 2; ++sgn) {
        K mu = sgn ? -*mu0 : *mu0;
        // rows: coefficients of (ga, gb, gc, gd) in g*M - mu*N*g = 0
        std::array<std::array<K, 4>, 4> sys{{
            {m.a - mu * n.a, m.c, -mu * n.b, K::zero()},
            {m.b, m.d - mu * n.a, K::zero(), -mu * n.b},
            {-mu * n.c, K::zero(), m.a - mu * n.d, m.c},
            {K::zero(), -mu * n.c, m.b, m.d - mu * n.d},
        }};
        auto basis = detail::kernel4<K>(sys);
        for (const auto& v : basis) consider(v);
        for (size_t i = 0; i + 1 < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                std::array<K, 4> w;
                for (int k = 0; k < 4; ++k) w[k] = basis[i][k] + basis[j][k];
                consider(w);
            }
    }
    return best;
}

}  // namespace genus0
