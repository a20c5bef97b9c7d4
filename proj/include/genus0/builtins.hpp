#pragma once

#include "genus0/expr.hpp"
#include "genus0/systems.hpp"

namespace genus0 {

// Built-in corpus: the Lyness-type map of Bastien-Rogalski, the Saito-Saitoh
// map, the real recurrence sharing its invariant (pal5 at b = 1), and the six
// maps behind Palladino's difference equations. Each carries its rational
// first integral, an explicit inverse and a closed-form family of proper
// fiber parametrizations, symbolic in the fiber parameter h.
inline IntegrableSystem make_builtin(const std::string& name) {
    IntegrableSystem sys;
    sys.name = name;
    std::set<std::string> ps;

    auto def = [&](const char* f1, const char* f2, const char* g1, const char* g2,
                   const char* v1, const char* v2, const char* p1, const char* p2,
                   const char* pinv) {
        std::set<std::string> all = ps;
        sys.params = ps;
        sys.map.f1 = parse_birat(f1, all);
        sys.map.f2 = parse_birat(f2, all);
        sys.map.inverse = {{parse_birat(g1, all), parse_birat(g2, all)}};
        all.insert(IntegrableSystem::fiber_param);
        sys.v1 = parse_birat(v1, sys.params).num();
        sys.v2 = parse_birat(v2, sys.params).num();
        Parametrization<SymScalar> fam;
        fam.p1 = parse_ratfunc_t(p1, all);
        fam.p2 = parse_ratfunc_t(p2, all);
        fam.inverse = parse_birat(pinv, all);
        sys.family = std::move(fam);
        if (!sys.map.verify_inverse()) throw arith_error("builtin '" + sys.name + "': inverse failed to verify");
    };

    if (name == "br") {
        ps = {"a"};
        const char* delta = "sqrt((a*h+1)^2 - 4*a^2)";
        std::string p1 = std::string("(2*") + delta + "*t - a*h^2 - (1+" + delta +
                         ")*h - 2 + 4*a)/(2*(-t^2 + h*t - 1)) + a";
        std::string p2 = std::string("((-a*h + ") + delta + " - 1)*t^2 + (4*a - 2)*t - a*h - " + delta +
                         " - 1)/(2*(-t^2 + h*t - 1))";
        std::string pinv = std::string("(-2*") + delta + "*x + (a*h^2 + (" + delta + "+1)*h - 4*a + 2)*y - a*h + 2*a + " +
                           delta + " - 1)/((a*h^2 + (1-" + delta + ")*h - 4*a + 2)*x + 2*" + delta + "*y + a*h - 2*a - " +
                           delta + " + 1)";
        def("y", "(a - y + y^2)/x",
            "(a - x + x^2)/y", "x",
            "x^2 + y^2 - x - y + a", "x*y",
            p1.c_str(), p2.c_str(), pinv.c_str());
        sys.admissible = "h > 2 - 1/a; rotation fibers for h < 2, parabolic at h = 2, hyperbolic beyond";
    } else if (name == "saito") {
        def("x*y", "y*(1+x)/(1+x*y)",
            "x/(y*(1+x) - x)", "y*(1+x) - x",
            "y*(1+x)", "1",
            "t", "h/(t+1)", "x");
        sys.admissible = "any h != 0; the fiber at h = 0 is a union of two lines";
    } else if (name == "nostra") {
        def("y", "y*(1+x)/(1+y)",
            "(y*(1+x) - x)/x", "x",
            "y*(1+x)", "1",
            "t", "h/(t+1)", "x");
        sys.admissible = "any real h != 0; rotation fibers for h < -1/4, parabolic at h = -1/4";
    } else if (name == "pal1") {
        ps = {"b"};
        def("y", "y/(1 + b*(x-y))",
            "(x - y + b*x*y)/(b*y)", "x",
            "1 + b*x + b*y + b^2*x*y", "y",
            "t", "(-b*t - 1)/(b^2*t + b - h)", "x");
        sys.admissible = "b != 0";
    } else if (name == "pal2") {
        ps = {"b"};
        def("y", "x/(1 + b*(y-x))",
            "y*(1 + b*x)/(1 + b*y)", "x",
            "1 + b*y + x*y", "x*y",
            "t", "1/((h-1)*t - b)", "x");
        sys.admissible = "b != 0";
    } else if (name == "pal3") {
        ps = {"b"};
        def("y", "(-b*x + b*y + y^2)/x",
            "x*(b + x)/(y + b)", "x",
            "y + b", "x",
            "t", "h*t - b", "x");
        sys.admissible = "any b";
    } else if (name == "pal4") {
        ps = {"b"};
        def("y", "(b*y + y^2)/(x + b)",
            "(b*x + x^2 - b*y)/y", "x",
            "x + b", "y",
            "t", "(t + b)/h", "x");
        sys.admissible = "b != 0";
    } else if (name == "pal5") {
        ps = {"b"};
        def("y", "(b*y + x*y)/(y + b)",
            "(x*y + b*y - b*x)/x", "x",
            "y*(x + b)", "1",
            "t", "h/(t + b)", "x");
        sys.admissible = "b != 0";
    } else if (name == "pal6") {
        ps = {"b"};
        def("y", "(b*x - b*y + x*y)/y",
            "x*(y + b)/(b + x)", "x",
            "x*(y + b)", "1",
            "t", "(-b*t + h)/t", "x");
        sys.admissible = "b != 0";
    } else {
        throw arith_error("unknown builtin '" + name + "' (expected br, saito, nostra, pal1..pal6)");
    }
    return sys;
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"br",   "saito", "nostra", "pal1", "pal2",
                                                   "pal3", "pal4",  "pal5",   "pal6"};
    return names;
}

}  // namespace genus0
