#pragma once

#include <optional>

#include "genus0/bipoly.hpp"
#include "genus0/scalar.hpp"

namespace genus0 {

// Plane algebraic curve f(x, y) = 0 with the squarefree defining polynomial.
template <class K>
class PlaneCurve {
public:
    explicit PlaneCurve(BiPoly<K> f) : f_(std::move(f)) {
        if (f_.is_constant()) throw arith_error("curve polynomial must not be constant");
        strip_content();
        make_squarefree();
    }

    const BiPoly<K>& poly() const { return f_; }
    int degree_x() const { return f_.degree_x(); }
    int degree_y() const { return f_.degree_y(); }
    int total_degree() const { return f_.total_degree(); }

    bool contains(const K& x0, const K& y0) const { return f_.eval(x0, y0).is_zero(); }

    // Zero test in the coordinate ring: numerator reduces to 0 modulo f.
    bool vanishes_on_curve(const BiRatFunc<K>& g) const {
        if (g.is_zero()) return true;
        return reduce_mod_curve(g.num(), f_).is_zero();
    }

private:
    void strip_content() {
        Poly<K> c = f_.content_x();
        if (c.degree() > 0) f_ = BiPoly<K>::divexact(f_, BiPoly<K>::from_y_poly(c));
        // also content as a polynomial in y
        BiPoly<K> t = f_.transpose();
        Poly<K> cy = t.content_x();
        if (cy.degree() > 0) f_ = BiPoly<K>::divexact(t, BiPoly<K>::from_y_poly(cy)).transpose();
    }
    void make_squarefree() {
        BiPoly<K> d = f_.degree_y() > 0 ? f_.derivative_y() : f_.derivative_x();
        if (d.is_zero()) return;
        BiPoly<K> g = BiPoly<K>::gcd(f_, d);
        if (!g.is_constant()) f_ = BiPoly<K>::divexact(f_, g);
    }

    BiPoly<K> f_;
};

// Reducibility heuristic on a raw fiber polynomial (before normalization):
// nontrivial univariate content means a line splits off; degree-2 fibers are
// reducible exactly when the conic determinant vanishes.
template <class K>
bool degenerate_fiber(const BiPoly<K>& f) {
    if (f.is_constant()) return true;
    if (f.content_x().degree() > 0) return true;
    if (f.transpose().content_x().degree() > 0) return true;
    if (f.total_degree() != 2) return false;
    K A = f.coeff(2, 0), B = f.coeff(1, 1), C = f.coeff(0, 2);
    K D = f.coeff(1, 0), E = f.coeff(0, 1), F = f.coeff(0, 0);
    K two = K::one() + K::one(), four = two + two;
    // det of [[2A, B, D], [B, 2C, E], [D, E, 2F]] up to a factor of 4
    K det = two * A * (four * C * F - E * E) - B * (two * B * F - D * E) + D * (B * E - two * C * D);
    return det.is_zero();
}

// Rational parametrization P(t) = (P1(t), P2(t)) of one curve, optionally
// with its inverse t = Q(x, y).
template <class K>
struct Parametrization {
    RatFunc<K> p1, p2;
    std::optional<BiRatFunc<K>> inverse;

    int degree() const { return std::max(p1.degree(), p2.degree()); }

    bool lies_on(const PlaneCurve<K>& curve) const {
        auto lift = [&](const K& k) { return RatFunc<K>::constant(k, "t"); };
        RatFunc<K> r = curve.poly().template eval<RatFunc<K>>(p1, p2, lift);
        return r.is_zero();
    }
};

// Point with a y-coordinate solving f(x0, y) = 0, extending the field by the
// square root of the discriminant when needed. The + branch of the root is
// returned. Requires degree <= 2 in y.
inline std::pair<Scalar, Scalar> conic_base_point(const PlaneCurve<Scalar>& curve, const Scalar& x0,
                                                  bool require_real = true) {
    Poly<Scalar> fy = curve.poly().eval_x(x0);
    if (fy.degree() <= 0) throw arith_error("f(x0, .) is constant; pick another x0");
    if (fy.degree() == 1) {
        Scalar y0 = -fy.coeff(0) / fy.coeff(1);
        return {x0, y0};
    }
    if (fy.degree() != 2) throw arith_error("conic_base_point needs degree <= 2 in y");
    Scalar a2 = fy.coeff(2), a1 = fy.coeff(1), a0 = fy.coeff(0);
    Scalar disc = a1 * a1 - Scalar(4) * a2 * a0;
    if (require_real && disc.is_exact() && disc.is_real() && disc.sign() < 0)
        throw arith_error("conic has no real point over x0 (negative discriminant)");
    Scalar root = canonical_sqrt(disc);
    Scalar y0 = (-a1 + root) / (Scalar(2) * a2);
    return {x0, y0};
}

// Parametrization by the pencil of lines v = t*u through a base point on an
// irreducible conic: translate the base point to the origin, split
// f(u + x0, v + y0) = f1 + f2 into homogeneous parts, and intersect.
template <class K>
Parametrization<K> parametrize_by_lines(const PlaneCurve<K>& curve, const K& x0, const K& y0) {
    if (curve.total_degree() != 2) throw arith_error("parametrization by lines needs a conic");
    if (!curve.contains(x0, y0)) throw arith_error("base point does not lie on the curve");

    // shifted polynomial g(u, v) = f(u + x0, v + y0)
    auto lift = [](const K& k) { return BiRatFunc<K>::constant(k); };
    BiRatFunc<K> xs = BiRatFunc<K>::x() + BiRatFunc<K>::constant(x0);
    BiRatFunc<K> ys = BiRatFunc<K>::y() + BiRatFunc<K>::constant(y0);
    BiRatFunc<K> shifted = curve.poly().template eval<BiRatFunc<K>>(xs, ys, lift);
    const BiPoly<K>& g = shifted.num();

    // homogeneous parts evaluated along the line (u, v) = (1, t)
    Poly<K> f1_line("t"), f2_line("t");
    {
        std::vector<K> c1(2, K::zero()), c2(3, K::zero());
        for (int i = 0; i <= g.degree_x(); ++i)
            for (int j = 0; j <= g.degree_y(); ++j) {
                K c = g.coeff(i, j);
                if (c.is_zero()) continue;
                int deg = i + j;
                if (deg == 0) throw arith_error("base point does not lie on the curve");
                if (deg == 1) c1[j] += c;
                else c2[j] += c;
            }
        f1_line = Poly<K>("t", c1);
        f2_line = Poly<K>("t", c2);
    }
    if (f1_line.is_zero()) throw arith_error("base point is singular on the conic");
    if (f2_line.is_zero()) throw arith_error("degenerate conic: no quadratic part");

    RatFunc<K> u(-f1_line, f2_line);
    RatFunc<K> v = RatFunc<K>::variable("t") * u;
    Parametrization<K> P;
    P.p1 = u + RatFunc<K>::constant(x0, "t");
    P.p2 = v + RatFunc<K>::constant(y0, "t");
    if (!P.lies_on(curve)) throw arith_error("parametrization failed the on-curve identity");
    return P;
}

// Properness test: deg(P) must equal max(deg_x f, deg_y f).
template <class K>
bool check_proper(const Parametrization<K>& param, const PlaneCurve<K>& curve) {
    return param.degree() == std::max(curve.degree_x(), curve.degree_y());
}

// Inverse of a proper parametrization via the gcd of H1 = x*P12 - P11 and
// H2 = y*P22 - P21 in K(C)[t]: a Euclidean remainder sequence in t whose
// zero test is reduction modulo the curve. The last nonzero remainder is
// linear, D1*t - D0, and the inverse is D0/D1.
template <class K>
BiRatFunc<K> invert_parametrization(const Parametrization<K>& param, const PlaneCurve<K>& curve) {
    using BRF = BiRatFunc<K>;
    using TPoly = Poly<BRF>;
    if (param.p1.is_constant() && param.p2.is_constant())
        throw arith_error("cannot invert a constant parametrization");

    auto lift_poly = [](const Poly<K>& p) {
        std::vector<BRF> cs;
        cs.reserve(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) cs.push_back(BRF::constant(p.coeff(i)));
        return TPoly("t", cs);
    };
    TPoly h1 = lift_poly(param.p1.den()) * TPoly::constant(BRF::x(), "t") - lift_poly(param.p1.num());
    TPoly h2 = lift_poly(param.p2.den()) * TPoly::constant(BRF::y(), "t") - lift_poly(param.p2.num());

    auto normalize = [&](const TPoly& p) {
        std::vector<BRF> cs;
        cs.reserve(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) {
            BRF c = p.coeff(i);
            cs.push_back(curve.vanishes_on_curve(c) ? BRF::zero() : c);
        }
        return TPoly("t", cs);
    };

    // divide H2 by H1 first: when H1 is already the gcd (e.g. P1(t) = t and
    // H1 = x - t) this keeps the short representative for the inverse
    TPoly a = normalize(h2), b = normalize(h1);
    if (b.degree() > a.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        TPoly r = normalize(TPoly::divrem(a, b).second);
        a = b;
        b = r;
    }
    if (a.degree() != 1)
        throw arith_error("gcd in K(C)[t] is not linear: parametrization is improper or the curve is reducible");
    BRF d1 = a.coeff(1), d0 = -a.coeff(0);
    return d0 / d1;
}

}  // namespace genus0
