#pragma once

#include <random>

#include "genus0/systems.hpp"

namespace genus0 {

namespace detail {

inline SymBiPoly map_re(const SymBiPoly& p) {
    return p.map<SymScalar>([](const SymScalar& s) { return SymScalar(s.re()); });
}
inline SymBiPoly map_im(const SymBiPoly& p) {
    return p.map<SymScalar>([](const SymScalar& s) { return SymScalar(s.im()); });
}
inline SymBiPoly map_conj(const SymBiPoly& p) {
    return p.map<SymScalar>([](const SymScalar& s) { return s.conj(); });
}

}  // namespace detail

// Splits a bivariate rational function over the extended coefficient field
// into delta-free parts A + delta*B (the denominator is rationalized first).
inline std::pair<SymBiRat, SymBiRat> split_extension(const SymBiRat& r) {
    SymBiPoly dc = detail::map_conj(r.den());
    SymBiPoly num = r.num() * dc;
    SymBiPoly den = r.den() * dc;  // norm: delta-free by construction
    SymBiPoly den_re = detail::map_re(den);
    if (detail::map_im(den) != SymBiPoly())
        throw arith_error("denominator rationalization failed");
    if (den_re.is_zero()) throw arith_error("zero denominator after rationalization");
    return {SymBiRat(detail::map_re(num), den_re), SymBiRat(detail::map_im(num), den_re)};
}

// Substitutes the named parameter by a bivariate rational function (the
// h -> V(x, y) step of the planar assemblies). Coefficients must be free of
// the extension root.
inline SymBiRat subst_param(const SymBiRat& r, const std::string& var, const SymBiRat& val) {
    auto check = [&](const SymBiPoly& p) {
        for (const auto& cy : p.coeffs_x())
            for (const auto& c : cy.coeffs())
                if (!c.im().is_zero()) throw arith_error("cannot substitute a parameter under the extension root");
    };
    check(r.num());
    check(r.den());

    // clear parameter denominators with one common multiplier
    ParamPoly l(1);
    auto collect = [&](const SymBiPoly& p) {
        for (const auto& cy : p.coeffs_x())
            for (const auto& c : cy.coeffs()) l = ParamPoly::lcm(l, c.re().den());
    };
    collect(r.num());
    collect(r.den());
    SymScalar scale{ParamRat(l)};
    SymBiPoly n = r.num() * scale, d = r.den() * scale;

    auto deg_in = [&](const SymBiPoly& p) {
        int m = 0;
        for (const auto& cy : p.coeffs_x())
            for (const auto& c : cy.coeffs()) m = std::max(m, c.re().num().degree_in(var));
        return m;
    };
    int mn = deg_in(n), md = deg_in(d);

    auto coeff_of = [&](const SymBiPoly& p, int k) {
        return p.map<SymScalar>([&](const SymScalar& s) {
            return SymScalar(ParamRat(s.re().num().coeff_of(var, k)));
        });
    };
    auto expand = [&](const SymBiPoly& p, int m) {
        SymBiPoly acc;
        for (int k = 0; k <= m; ++k)
            acc += coeff_of(p, k) * val.num().pow(k) * val.den().pow(m - k);
        return acc;
    };
    SymBiPoly nn = expand(n, mn) * val.den().pow(md);
    SymBiPoly dd = expand(d, md) * val.den().pow(mn);
    if (dd.is_zero()) throw arith_error("substitution produced a zero denominator");
    return SymBiRat(nn, dd);
}

template <class K>
bool involves_param(const BiRatFunc<K>& r, const std::string& var) {
    if constexpr (std::is_same_v<K, SymScalar>) {
        std::set<std::string> vars;
        for (const auto& p : {r.num(), r.den()})
            for (const auto& cy : p.coeffs_x())
                for (const auto& c : cy.coeffs()) c.collect_vars(vars);
        return vars.count(var) > 0;
    } else {
        (void)var;
        return false;
    }
}

// V o F = V, checked as a reduced rational-function identity, symbolically in
// all declared parameters.
inline bool verify_first_integral(const IntegrableSystem& sys) {
    SymBiRat v = sys.integral();
    SymBiRat composed = v.compose(sys.map.f1, sys.map.f2);
    return composed == v;
}

// The fiber Moebius map Q o F o P in the canonical quadruple normalization.
// Throws when the composition does not reduce to degree <= 1 over degree <= 1
// (wrong integral, wrong fiber or an improper parametrization).
template <class K>
Mobius<K> extract_mobius(const BiRatFunc<K>& f1, const BiRatFunc<K>& f2, const Parametrization<K>& param) {
    if (!param.inverse) throw arith_error("extract_mobius needs the parametrization inverse");
    RatFunc<K> u = f1.restrict_to(param.p1, param.p2);
    RatFunc<K> v = f2.restrict_to(param.p1, param.p2);
    auto lift = [&](const K& k) { return RatFunc<K>::constant(k, "t"); };
    RatFunc<K> m = param.inverse->template eval<RatFunc<K>>(u, v, lift);
    return canonical_quadruple(mobius_from_ratfunc(m));
}

inline Mobius<SymScalar> extract_mobius(const IntegrableSystem& sys) {
    if (!sys.family) throw arith_error("system '" + sys.name + "' has no closed-form parametrization family");
    return extract_mobius(sys.map.f1, sys.map.f2, *sys.family);
}

// Planar Lie symmetry assembled from the parametrization family:
//   X(x,y) = DP_h(P_h^{-1}(x,y)) . Y_h(P_h^{-1}(x,y)) |_{h = V(x,y)}
// with Y_h the 1d symmetry of the fiber Moebius map. Requires the family to
// depend rationally on h (possibly through one quadratic extension root that
// cancels from the final field).
inline PlanarVectorField lie_symmetry_field(const IntegrableSystem& sys) {
    if (!sys.family)
        throw arith_error("lie_symmetry_field: no closed-form family; use per-fiber mode");
    const auto& P = *sys.family;
    if (!P.inverse) throw arith_error("lie_symmetry_field: family lacks an inverse");

    Mobius<SymScalar> m = extract_mobius(sys);
    Poly<SymScalar> y = lie_symmetry_1d(m);
    SymBiRat v = sys.integral();

    PlanarVectorField out;
    SymBiRat* comps[2] = {&out.x1, &out.x2};
    const RatFunc<SymScalar>* ps[2] = {&P.p1, &P.p2};
    for (int i = 0; i < 2; ++i) {
        RatFunc<SymScalar> xt = ps[i]->derivative() * RatFunc<SymScalar>(y);
        auto lift = [](const SymScalar& k) { return SymBiRat::constant(k); };
        SymBiRat xi = xt.eval<SymBiRat>(*P.inverse, lift);
        auto [a, b] = split_extension(xi);
        if (!b.is_zero()) {
            SymBiRat b_sub = subst_param(b, IntegrableSystem::fiber_param, v);
            if (!b_sub.is_zero())
                throw arith_error("extension root failed to cancel in the Lie field assembly");
        }
        SymBiRat a_sub = subst_param(a, IntegrableSystem::fiber_param, v);
        if (involves_param(a_sub, IntegrableSystem::fiber_param))
            throw arith_error("fiber parameter left over after substitution");
        *comps[i] = a_sub;
    }
    return out;
}

// Compatibility X(F(p)) = DF(p) X(p), symbolically or at sample points.
inline bool verify_lie_compatibility_symbolic(const PlanarVectorField& x, const RationalMapPlane& f) {
    auto j = f.jacobian();
    SymBiRat lhs1 = x.x1.compose(f.f1, f.f2);
    SymBiRat rhs1 = j[0] * x.x1 + j[1] * x.x2;
    if (lhs1 != rhs1) return false;
    SymBiRat lhs2 = x.x2.compose(f.f1, f.f2);
    SymBiRat rhs2 = j[2] * x.x1 + j[3] * x.x2;
    return lhs2 == rhs2;
}

inline bool verify_lie_compatibility_sampled(const PlanarVectorField& x, const RationalMapPlane& f,
                                             const ParamValues& vals, int n, unsigned seed = 12345) {
    auto x1 = at_params(x.x1, vals), x2 = at_params(x.x2, vals);
    auto f1 = at_params(f.f1, vals), f2 = at_params(f.f2, vals);
    auto j11 = at_params(f.f1.derivative_x(), vals), j12 = at_params(f.f1.derivative_y(), vals);
    auto j21 = at_params(f.f2.derivative_x(), vals), j22 = at_params(f.f2.derivative_y(), vals);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    int done = 0, attempts = 0;
    while (done < n && attempts < 100 * n) {
        ++attempts;
        Scalar px{Rat(num(rng), 7)}, py{Rat(num(rng), 9)};
        try {
            Scalar fx = f1.eval(px, py), fy = f2.eval(px, py);
            Scalar l1 = x1.eval(fx, fy), l2 = x2.eval(fx, fy);
            Scalar r1 = j11.eval(px, py) * x1.eval(px, py) + j12.eval(px, py) * x2.eval(px, py);
            Scalar r2 = j21.eval(px, py) * x1.eval(px, py) + j22.eval(px, py) * x2.eval(px, py);
            if (l1 != r1 || l2 != r2) return false;
            ++done;
        } catch (const arith_error&) {
            continue;  // pole; resample
        }
    }
    if (done < n) throw arith_error("all sample points hit poles of the map or the field");
    return true;
}

// Density mu with X = mu (-V_y, V_x); the invariant measure of the map is
// |1/mu|. Cross-checked between the two quotients and against the pullback
// identity mu o F = det(DF) * mu.
inline SymBiRat measure_density(const PlanarVectorField& x, const IntegrableSystem& sys) {
    SymBiRat v = sys.integral();
    SymBiRat vx = v.derivative_x(), vy = v.derivative_y();
    if (vx.is_zero() && vy.is_zero()) throw arith_error("first integral is constant");
    std::optional<SymBiRat> mu1, mu2;
    if (!vy.is_zero()) mu1 = -x.x1 / vy;
    if (!vx.is_zero()) mu2 = x.x2 / vx;
    if (mu1 && mu2 && *mu1 != *mu2)
        throw arith_error("inconsistent density: X is not tangent to the fibration");
    SymBiRat mu = mu1 ? *mu1 : *mu2;
    SymBiRat lhs = mu.compose(sys.map.f1, sys.map.f2);
    SymBiRat rhs = sys.map.jacobian_det() * mu;
    if (lhs != rhs) throw arith_error("density fails the pullback identity mu o F = det(DF) mu");
    return mu;
}

// X_1 V_x + X_2 V_y = 0: the field is tangent to the fibers.
inline bool tangent_to_fibers(const PlanarVectorField& x, const IntegrableSystem& sys) {
    SymBiRat v = sys.integral();
    return (x.x1 * v.derivative_x() + x.x2 * v.derivative_y()).is_zero();
}

}  // namespace genus0
