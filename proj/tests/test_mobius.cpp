#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "genus0/convert.hpp"
#include "genus0/expr.hpp"
#include "genus0/mobius.hpp"

using namespace genus0;

namespace {

Mobius<SymScalar> parse_mobius(const std::string& src, const std::set<std::string>& params) {
    return mobius_from_ratfunc(parse_ratfunc_t(src, params));
}

Mobius<Scalar> br_mobius(const Rat& h) {  // ((h+1)t - 1)/(t + 1)
    return Mobius<Scalar>(Scalar(Rat(h + 1)), Scalar(-1), Scalar(1), Scalar(1));
}

}  // namespace

TEST_CASE("composition and inversion") {
    SECTION("m composed with its inverse is the identity") {
        auto m = br_mobius(Rat(3));
        CHECK(compose(m, m.inverse()).is_identity());
        CHECK(compose(m.inverse(), m).is_identity());
    }
    SECTION("Saito map at a primitive cube root of unity has order 3") {
        Scalar h = Scalar::quad(Rat(-1, 2), Rat(1, 2), Int(-3));
        Mobius<Scalar> m(h, Scalar(0), Scalar(1), Scalar(1));  // ht/(t+1)
        CHECK(m.power(3).is_identity());
        CHECK_FALSE(m.power(2).is_identity());
    }
    SECTION("symbolic BR map composes with its inverse to the identity") {
        auto m = parse_mobius("((h+1)*t - 1)/(t + 1)", {"h"});
        CHECK(compose(m, m.inverse()).is_identity());
    }
}

TEST_CASE("classification") {
    SECTION("BR h = 3 is hyperbolic with fixed points (3 +- sqrt 5)/2") {
        auto cls = classify(br_mobius(Rat(3)));
        CHECK(cls.tag == DynClass::hyperbolic);
        CHECK(cls.delta == Scalar(5));
        Scalar lo = Scalar::quad(Rat(3, 2), Rat(-1, 2), Int(5));
        Scalar hi = Scalar::quad(Rat(3, 2), Rat(1, 2), Int(5));
        CHECK(cls.t0.t == hi);
        CHECK(cls.t1.t == lo);
        CHECK(cls.attractor.t == hi);  // multiplier (3-sqrt5)/2 < 1 there
        CHECK(cls.repeller.t == lo);
        // fixed points satisfy c t^2 + (d-a) t - b = 0
        for (const Scalar& t : {cls.t0.t, cls.t1.t})
            CHECK((t * t + Scalar(-2) * t + Scalar(1) * Scalar(-1) * Scalar(-1) - Scalar(-1) - t * 0).is_zero() ==
                  (t * t - Scalar(2) * t - Scalar(-1) - Scalar(1)).is_zero());
    }
    SECTION("BR h = 2 is parabolic at t = 1") {
        auto cls = classify(br_mobius(Rat(2)));  // (3t-1)/(t+1)
        CHECK(cls.tag == DynClass::parabolic);
        CHECK(cls.delta.is_zero());
        REQUIRE_FALSE(cls.t0.at_infinity);
        CHECK(cls.t0.t == Scalar(1));
    }
    SECTION("Saito at h = i rotates by 3/4") {
        Scalar h = Scalar::quad(0, 1, Int(-1));
        Mobius<Scalar> m(h, Scalar(0), Scalar(1), Scalar(1));
        auto cls = classify(m);
        CHECK(cls.tag == DynClass::rotation);
        // Delta = (1-h)^2, xi = 1/h = -i
        CHECK(cls.delta == (Scalar(1) - h) * (Scalar(1) - h));
        CHECK(cls.xi == h.inverse());
        CHECK(cls.theta == Catch::Approx(0.75).margin(1e-15));
        CHECK(cls.exact_period == 4);
    }
    SECTION("Saito at h = -1 has period 2") {
        Mobius<Scalar> m(Scalar(-1), Scalar(0), Scalar(1), Scalar(1));
        auto cls = classify(m);
        CHECK(cls.tag == DynClass::rotation);
        CHECK(cls.xi == Scalar(-1));
        CHECK(cls.theta == Catch::Approx(0.5).margin(1e-15));
        CHECK(cls.exact_period == 2);
    }
    SECTION("h/(t+1) with h > -1/4 has attractor (-1+sqrt(1+4h))/2") {
        Scalar h(1);
        Mobius<Scalar> m(Scalar(0), h, Scalar(1), Scalar(1));
        auto cls = classify(m);
        CHECK(cls.tag == DynClass::hyperbolic);
        CHECK(cls.delta == Scalar(5));  // 1 + 4h
        CHECK(cls.attractor.t == Scalar::quad(Rat(-1, 2), Rat(1, 2), Int(5)));
        CHECK(cls.repeller.t == Scalar::quad(Rat(-1, 2), Rat(-1, 2), Int(5)));
    }
    SECTION("affine maps put the second fixed point at infinity") {
        // M3 with h = 1/2, b = 1: t/2 - 1, fixed point b/(h-1) = -2
        Mobius<Scalar> m(Scalar(Rat(1, 2)), Scalar(-1), Scalar(0), Scalar(1));
        auto cls = classify(m);
        CHECK(cls.tag == DynClass::hyperbolic);
        CHECK(cls.t1.at_infinity);
        CHECK(cls.t0.t == Scalar(-2));
        CHECK(cls.xi == Scalar(Rat(1, 2)));
        CHECK(cls.attractor.t == Scalar(-2));
    }
    SECTION("translation is parabolic with fixed point at infinity") {
        Mobius<Scalar> m(Scalar(1), Scalar(-1), Scalar(0), Scalar(1));  // M3 at h = 1: t - b
        auto cls = classify(m);
        CHECK(cls.tag == DynClass::parabolic);
        CHECK(cls.t0.at_infinity);
    }
    SECTION("identity is rejected") {
        CHECK_THROWS_AS(classify(Mobius<Scalar>::identity()), arith_error);
    }
    SECTION("rotation multiplier is a primitive p-th root iff the map has order p") {
        // Saito family: xi = 1/h, so pick h among low-order roots of unity
        std::vector<std::pair<Scalar, int>> cases = {
            {Scalar(-1), 2},
            {Scalar::quad(Rat(-1, 2), Rat(1, 2), Int(-3)), 3},
            {Scalar::quad(0, 1, Int(-1)), 4},
            {Scalar::quad(Rat(1, 2), Rat(1, 2), Int(-3)), 6},
        };
        for (const auto& [h, p] : cases) {
            Mobius<Scalar> m(h, Scalar(0), Scalar(1), Scalar(1));
            auto cls = classify(m);
            REQUIRE(cls.tag == DynClass::rotation);
            CHECK(cls.xi.abs_sq_complex() == 1);
            CHECK(cls.exact_period == p);
            for (int k = 1; k <= 12; ++k)
                CHECK(m.power(k).is_identity() == (k % p == 0));
        }
    }
}

TEST_CASE("one-dimensional Lie symmetry") {
    SECTION("BR: Y = 1 - h t + t^2") {
        auto m = parse_mobius("((h+1)*t - 1)/(t + 1)", {"h"});
        auto y = lie_symmetry_1d(canonical_quadruple(m));
        SymScalar h = SymScalar::variable("h");
        CHECK(y == Poly<SymScalar>("t", {SymScalar(1), -h, SymScalar(1)}));
    }
    SECTION("Saito: Y = (1-h) t + t^2") {
        auto m = parse_mobius("h*t/(t + 1)", {"h"});
        auto y = lie_symmetry_1d(canonical_quadruple(m));
        SymScalar h = SymScalar::variable("h");
        CHECK(y == Poly<SymScalar>("t", {SymScalar(0), SymScalar(1) - h, SymScalar(1)}));
    }
    SECTION("Palladino 5: Y = -h + b t + t^2") {
        auto m = parse_mobius("h/(t + b)", {"h", "b"});
        auto y = lie_symmetry_1d(canonical_quadruple(m));
        SymScalar h = SymScalar::variable("h"), b = SymScalar::variable("b");
        CHECK(y == Poly<SymScalar>("t", {-h, b, SymScalar(1)}));
    }
    SECTION("compatibility identity Y(M(t)) (ct+d)^2 = det * Y(t)") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> coef(-5, 5);
        for (int i = 0; i < 40; ++i) {
            Scalar a{Rat(coef(rng))}, b{Rat(coef(rng))}, c{Rat(coef(rng))}, d{Rat(coef(rng))};
            if ((a * d - b * c).is_zero()) continue;
            Mobius<Scalar> m(a, b, c, d);
            auto y = lie_symmetry_1d(m);
            auto M = m.as_ratfunc();
            auto lift = [](const Scalar& s) { return RatFunc<Scalar>::constant(s, "t"); };
            Poly<Scalar> raw_den("t", {m.d, m.c});  // c t + d, unreduced
            RatFunc<Scalar> lhs = y.eval<RatFunc<Scalar>>(M, lift) * RatFunc<Scalar>(raw_den * raw_den);
            RatFunc<Scalar> rhs = lift(m.det()) * RatFunc<Scalar>(y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical quadruples match the worked examples") {
    SECTION("polynomial-primitive normalization for c != 0") {
        auto m = canonical_quadruple(parse_mobius("(-b*t - 1)/(b^2*t + b - h)", {"b", "h"}));
        SymScalar b = SymScalar::variable("b"), h = SymScalar::variable("h");
        CHECK(m.a == -b);
        CHECK(m.b == SymScalar(-1));
        CHECK(m.c == b * b);
        CHECK(m.d == b - h);
    }
    SECTION("affine maps normalize d = 1") {
        auto m = canonical_quadruple(parse_mobius("(t + b)/h", {"b", "h"}));
        SymScalar b = SymScalar::variable("b"), h = SymScalar::variable("h");
        CHECK(m.a == h.inverse());
        CHECK(m.b == b / h);
        CHECK(m.c.is_zero());
        CHECK(m.d.is_one());
    }
    SECTION("sign fixed by the leading coefficient of c") {
        auto m = canonical_quadruple(parse_mobius("1/((h-1)*t - b)", {"b", "h"}));
        SymScalar b = SymScalar::variable("b"), h = SymScalar::variable("h");
        CHECK(m.a.is_zero());
        CHECK(m.b.is_one());
        CHECK(m.c == h - SymScalar(1));
        CHECK(m.d == -b);
    }
}

TEST_CASE("conjugacy invariant") {
    SECTION("identity gives 4") {
        CHECK(conjugacy_invariant(Mobius<Scalar>::identity()) == Scalar(4));
    }
    SECTION("BR invariant is h + 2, symbolically") {
        auto m = parse_mobius("((h+1)*t - 1)/(t + 1)", {"h"});
        CHECK(conjugacy_invariant(m) == SymScalar::variable("h") + SymScalar(2));
    }
    SECTION("invariant under random conjugations") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> coef(-6, 6);
        auto m = br_mobius(Rat(3));
        int done = 0;
        while (done < 50) {
            Scalar a{Rat(coef(rng))}, b{Rat(coef(rng))}, c{Rat(coef(rng))}, d{Rat(coef(rng))};
            if ((a * d - b * c).is_zero()) continue;
            ++done;
            Mobius<Scalar> g(a, b, c, d);
            auto conj = compose(compose(g, m), g.inverse());
            CHECK(conjugacy_invariant(conj) == conjugacy_invariant(m));
        }
    }
}

TEST_CASE("conjugator solving") {
    SECTION("Palladino M1 (h=3) and M2 (k=2/3) at b=1 are conjugate") {
        // M1: (-t-1)/(t-2), M2 at k = -(1-h)/h = 2/3: 1/((k-1)t - 1) = 1/(-t/3 - 1)
        Mobius<Scalar> m(Scalar(-1), Scalar(-1), Scalar(1), Scalar(-2));
        Mobius<Scalar> n(Scalar(0), Scalar(1), Scalar(Rat(-1, 3)), Scalar(-1));
        auto g = solve_conjugator(m, n);
        REQUIRE(g.has_value());
        CHECK(projectively_equal(compose(compose(g->inverse(), n), *g), m));
    }
    SECTION("m = n accepts some symmetry, property holds") {
        auto m = br_mobius(Rat(3));
        auto g = solve_conjugator(m, m);
        REQUIRE(g.has_value());
        CHECK(projectively_equal(compose(compose(g->inverse(), m), *g), m));
    }
    SECTION("invariant mismatch gives none") {
        auto m = br_mobius(Rat(3));                                   // invariant 5
        Mobius<Scalar> n(Scalar(3), Scalar(0), Scalar(1), Scalar(1));  // Saito h=3: (3+1)^2/3
        CHECK(conjugacy_invariant(n) == Scalar(Rat(16, 3)));
        CHECK_FALSE(solve_conjugator(m, n).has_value());
    }
    SECTION("success iff invariants match, over a mixed corpus") {
        std::mt19937 rng(23);
        std::uniform_int_distribution<int> coef(-5, 5);
        auto random_mobius = [&]() -> Mobius<Scalar> {
            for (;;) {
                Scalar a{Rat(coef(rng))}, b{Rat(coef(rng))}, c{Rat(coef(rng))}, d{Rat(coef(rng))};
                if (!(a * d - b * c).is_zero()) return Mobius<Scalar>(a, b, c, d);
            }
        };
        int constructed = 0, random_pairs = 0, successes = 0;
        for (int i = 0; i < 200; ++i) {
            Mobius<Scalar> m = random_mobius();
            if (m.is_identity()) continue;
            Mobius<Scalar> n = m;
            if (i % 2 == 0) {
                Mobius<Scalar> g = random_mobius();
                n = compose(compose(g, m), g.inverse());
                ++constructed;
            } else {
                n = random_mobius();
                if (n.is_identity()) continue;
                ++random_pairs;
            }
            bool equal_inv = conjugacy_invariant(m) == conjugacy_invariant(n);
            auto g = solve_conjugator(m, n);
            CHECK(g.has_value() == equal_inv);
            if (g) {
                ++successes;
                CHECK(projectively_equal(compose(compose(g->inverse(), n), *g), m));
            }
        }
        CHECK(constructed >= 90);
        CHECK(successes >= constructed);
        CHECK(random_pairs >= 90);
    }
}
