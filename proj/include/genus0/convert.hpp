#pragma once

#include "genus0/bipoly.hpp"
#include "genus0/curves.hpp"
#include "genus0/mobius.hpp"
#include "genus0/symbolic.hpp"

namespace genus0 {

// Evaluation of symbolic coefficients at exact parameter values, moving a
// symbolic object into the numeric scalar field for per-fiber work.
using ParamValues = std::map<std::string, Scalar>;

inline Scalar at_params(const SymScalar& s, const ParamValues& vals) { return s.eval(vals); }

inline Poly<Scalar> at_params(const Poly<SymScalar>& p, const ParamValues& vals) {
    return p.map<Scalar>([&](const SymScalar& s) { return s.eval(vals); }, p.var());
}
inline RatFunc<Scalar> at_params(const RatFunc<SymScalar>& r, const ParamValues& vals) {
    return r.map<Scalar>([&](const SymScalar& s) { return s.eval(vals); }, r.num().var());
}
inline BiPoly<Scalar> at_params(const BiPoly<SymScalar>& p, const ParamValues& vals) {
    return p.map<Scalar>([&](const SymScalar& s) { return s.eval(vals); });
}
inline BiRatFunc<Scalar> at_params(const BiRatFunc<SymScalar>& r, const ParamValues& vals) {
    return r.map<Scalar>([&](const SymScalar& s) { return s.eval(vals); });
}
inline Mobius<Scalar> at_params(const Mobius<SymScalar>& m, const ParamValues& vals) {
    return Mobius<Scalar>(m.a.eval(vals), m.b.eval(vals), m.c.eval(vals), m.d.eval(vals));
}
inline Parametrization<Scalar> at_params(const Parametrization<SymScalar>& p, const ParamValues& vals) {
    Parametrization<Scalar> out;
    out.p1 = at_params(p.p1, vals);
    out.p2 = at_params(p.p2, vals);
    if (p.inverse) out.inverse = at_params(*p.inverse, vals);
    return out;
}

inline BiRatFunc<SymScalar> lift_to_symbolic(const BiRatFunc<Scalar>& r) {
    return r.map<SymScalar>([](const Scalar& s) { return SymScalar::from_scalar(s); });
}

// Float evaluation of a bivariate rational function at a complex point.
template <class K>
Complex eval_complex(const BiRatFunc<K>& f, const Complex& x, const Complex& y);

template <>
inline Complex eval_complex(const BiRatFunc<Scalar>& f, const Complex& x, const Complex& y) {
    auto lift = [](const Scalar& s) { return s.to_complex(); };
    Complex n = f.num().eval<Complex>(x, y, lift);
    Complex d = f.den().eval<Complex>(x, y, lift);
    return n / d;
}

}  // namespace genus0
