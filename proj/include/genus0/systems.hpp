#pragma once

#include <array>

#include "genus0/convert.hpp"
#include "genus0/curves.hpp"
#include "genus0/mobius.hpp"

namespace genus0 {

using SymBiRat = BiRatFunc<SymScalar>;
using SymBiPoly = BiPoly<SymScalar>;
using SymRatFunc = RatFunc<SymScalar>;

// Planar rational map (F1, F2) with symbolic parameters and an optional
// explicit rational inverse. Conjugation features require a verified inverse.
struct RationalMapPlane {
    SymBiRat f1, f2;
    std::optional<std::array<SymBiRat, 2>> inverse;
    bool inverse_verified = false;

    bool verify_inverse() {
        inverse_verified = false;
        if (!inverse) return false;
        const auto& [g1, g2] = *inverse;
        if (g1.compose(f1, f2) != SymBiRat::x()) return false;
        if (g2.compose(f1, f2) != SymBiRat::y()) return false;
        if (f1.compose(g1, g2) != SymBiRat::x()) return false;
        if (f2.compose(g1, g2) != SymBiRat::y()) return false;
        inverse_verified = true;
        return true;
    }

    std::array<SymBiRat, 4> jacobian() const {
        return {f1.derivative_x(), f1.derivative_y(), f2.derivative_x(), f2.derivative_y()};
    }
    SymBiRat jacobian_det() const {
        auto j = jacobian();
        return j[0] * j[3] - j[1] * j[2];
    }
};

// Map together with a rational first integral V = v1/v2 and, when available,
// a closed-form family of proper fiber parametrizations symbolic in the
// fiber parameter h (coefficients may live in a quadratic extension of the
// parameter field).
struct IntegrableSystem {
    std::string name;
    RationalMapPlane map;
    SymBiPoly v1, v2;
    std::set<std::string> params;  // declared non-fiber parameters
    std::optional<Parametrization<SymScalar>> family;
    std::string admissible;  // human-readable description of the admissible h set

    static constexpr const char* fiber_param = "h";

    SymBiRat integral() const { return SymBiRat(v1, v2); }

    // Raw fiber polynomial v1 - h*v2 with h symbolic.
    SymBiPoly fiber_family_poly() const {
        return v1 - v2 * SymScalar::variable(fiber_param);
    }
    BiPoly<Scalar> fiber_poly(const Scalar& h, const ParamValues& vals) const {
        ParamValues all = vals;
        all[fiber_param] = h;
        return at_params(fiber_family_poly(), all);
    }
};

struct PlanarVectorField {
    SymBiRat x1, x2;
};

}  // namespace genus0
