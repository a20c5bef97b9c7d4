#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "genus0/numbers.hpp"

namespace genus0 {

// Element p + q*sqrt(d) of Q(sqrt(d)), d square-free, d != 0,1, q != 0.
// Values with q = 0 live in the Rational alternative of Scalar instead.
struct Quad {
    Rat p, q;
    Int d;
};

using Complex = std::complex<double>;

// The exact/float coefficient domain: a rational, an element of one
// quadratic extension Q(sqrt(d)), or a complex double obtained by an
// explicit downcast. Arithmetic on two different extensions is an error;
// no composite fields are built.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(int n) : v_(Rat(n)) {}  // NOLINT(google-explicit-constructor)
    Scalar(long n) : v_(Rat(n)) {}  // NOLINT
    Scalar(const Rat& r) : v_(r) {}  // NOLINT
    Scalar(Rat&& r) : v_(std::move(r)) {}  // NOLINT
    explicit Scalar(const Complex& z) : v_(z) {}

    static Scalar rational(const Rat& r) { return Scalar(r); }
    static Scalar quad(const Rat& p, const Rat& q, const Int& d) {
        if (q == 0) return Scalar(p);
        if (d == 0 || d == 1) throw arith_error("quad: d must be square-free and != 0,1");
        Scalar s;
        s.v_ = Quad{p, q, d};
        return s;
    }
    static Scalar complex(double re, double im = 0.0) { return Scalar(Complex(re, im)); }

    // sqrt of a rational as an exact scalar, extending to Q(sqrt(d)) when needed.
    static Scalar sqrt_of(const Rat& r) {
        Rat s; Int d;
        squarefree_decompose(r, s, d);
        if (d == 0) return Scalar(Rat(0));
        if (d == 1) return Scalar(s);
        return quad(0, s, d);
    }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_quad() const { return std::holds_alternative<Quad>(v_); }
    bool is_float() const { return std::holds_alternative<Complex>(v_); }
    bool is_exact() const { return !is_float(); }

    const Rat& rat() const {
        if (!is_rational()) throw arith_error("scalar is not rational");
        return std::get<Rat>(v_);
    }
    const Quad& quad_part() const {
        if (!is_quad()) throw arith_error("scalar is not a quadratic-extension element");
        return std::get<Quad>(v_);
    }
    const Complex& cplx() const { return std::get<Complex>(v_); }

    // Rational part / sqrt coefficient / extension discriminant as a triple view.
    Rat re_part() const { return is_quad() ? quad_part().p : (is_rational() ? rat() : throw arith_error("float scalar has no exact parts")); }
    Rat quad_coeff() const { return is_quad() ? quad_part().q : Rat(0); }
    std::optional<Int> ext_d() const {
        if (is_quad()) return quad_part().d;
        return std::nullopt;
    }

    bool is_zero() const {
        if (is_rational()) return rat() == 0;
        if (is_quad()) return false;  // q != 0 by invariant
        return cplx() == Complex(0.0, 0.0);
    }
    bool is_one() const { return is_rational() && rat() == 1; }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    Scalar operator-() const {
        if (is_rational()) return Scalar(Rat(-rat()));
        if (is_quad()) { const Quad& a = quad_part(); return quad(-a.p, -a.q, a.d); }
        return Scalar(-cplx());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, /*sub=*/false);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, /*sub=*/true);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_float() || b.is_float()) {
            require_both_float(a, b, "*");
            return Scalar(a.cplx() * b.cplx());
        }
        if (a.is_rational() && b.is_rational()) return Scalar(Rat(a.rat() * b.rat()));
        if (a.is_rational()) { const Quad& y = b.quad_part(); return quad(a.rat() * y.p, a.rat() * y.q, y.d); }
        if (b.is_rational()) { const Quad& x = a.quad_part(); return quad(x.p * b.rat(), x.q * b.rat(), x.d); }
        const Quad& x = a.quad_part(); const Quad& y = b.quad_part();
        check_same_ext(x, y);
        Rat dr(x.d);
        return quad(x.p * y.p + x.q * y.q * dr, x.p * y.q + x.q * y.p, x.d);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const {
        if (is_zero()) throw arith_error("division by zero scalar");
        if (is_rational()) return Scalar(Rat(Rat(1) / rat()));
        if (is_quad()) {
            const Quad& x = quad_part();
            Rat n = x.p * x.p - x.q * x.q * Rat(x.d);  // field norm, nonzero since d square-free
            if (n == 0) throw arith_error("quadratic extension norm vanished (d not square-free?)");
            return quad(x.p / n, -x.q / n, x.d);
        }
        return Scalar(Complex(1.0) / cplx());
    }

    // Galois conjugate p - q*sqrt(d); identity on rationals, complex conjugate on floats.
    Scalar conj() const {
        if (is_quad()) { const Quad& x = quad_part(); return quad(x.p, -x.q, x.d); }
        if (is_float()) return Scalar(std::conj(cplx()));
        return *this;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_float() != b.is_float()) return false;
        if (a.is_float()) return a.cplx() == b.cplx();
        if (a.is_rational() && b.is_rational()) return a.rat() == b.rat();
        if (a.is_quad() && b.is_quad()) {
            const Quad& x = a.quad_part(); const Quad& y = b.quad_part();
            return x.d == y.d && x.p == y.p && x.q == y.q;
        }
        return false;  // quad with q!=0 never equals a rational
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Explicit downcast; the only way a float is produced from exact input.
    Complex to_complex() const {
        if (is_rational()) return Complex(static_cast<double>(rat()), 0.0);
        if (is_quad()) {
            const Quad& x = quad_part();
            double p = static_cast<double>(x.p), q = static_cast<double>(x.q);
            if (x.d > 0) return Complex(p + q * std::sqrt(static_cast<double>(x.d)), 0.0);
            return Complex(p, q * std::sqrt(static_cast<double>(-x.d)));
        }
        return cplx();
    }

    bool is_real() const {
        if (is_rational()) return true;
        if (is_quad()) return quad_part().d > 0;
        return cplx().imag() == 0.0;
    }

    // Exact sign of a real value.
    int sign() const {
        if (is_rational()) return sign_of(rat());
        if (is_quad()) {
            const Quad& x = quad_part();
            if (x.d < 0) throw arith_error("sign of a non-real scalar");
            int sp = sign_of(x.p), sq = sign_of(x.q);
            if (sp == sq || sp == 0) return sq;
            if (sq == 0) return sp;
            // p and q*sqrt(d) have opposite signs: compare p^2 vs q^2 d
            Rat lhs = x.p * x.p, rhs = x.q * x.q * Rat(x.d);
            if (lhs == rhs) return 0;
            return (lhs > rhs) ? sp : sq;
        }
        double r = cplx().real();
        return r > 0 ? 1 : (r < 0 ? -1 : 0);
    }

    // |z|^2 as an exact rational, defined for rationals and quads with d < 0.
    Rat abs_sq_complex() const {
        if (is_rational()) return rat() * rat();
        if (is_quad()) {
            const Quad& x = quad_part();
            if (x.d >= 0) throw arith_error("abs_sq_complex needs d < 0");
            return x.p * x.p + x.q * x.q * Rat(-x.d);
        }
        throw arith_error("abs_sq_complex of float scalar");
    }

    // |value| = 1, decided exactly for exact scalars.
    bool has_unit_modulus() const {
        if (is_rational()) return rat() == 1 || rat() == -1;
        if (is_quad()) {
            const Quad& x = quad_part();
            if (x.d < 0) return abs_sq_complex() == 1;
            return false;  // real irrational quads are never +-1
        }
        return std::abs(std::abs(cplx()) - 1.0) < 1e-12;
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Square root within the same field when it exists.
    std::optional<Scalar> sqrt_in_field() const {
        if (is_rational()) {
            const Rat& r = rat();
            if (r < 0) return std::nullopt;
            Int rn, rd;
            if (!is_perfect_square(rat_num(r), rn) || !is_perfect_square(rat_den(r), rd)) return std::nullopt;
            return Scalar(Rat(rn, rd));
        }
        if (is_quad()) {
            // (u + v sqrt(d))^2 = p + q sqrt(d): u^2 + v^2 d = p, 2uv = q.
            const Quad& x = quad_part();
            // u^2 solves z^2 - p z + q^2 d/4 = 0
            Rat disc = x.p * x.p - x.q * x.q * Rat(x.d);
            Int root_n, root_d;
            if (disc < 0) return std::nullopt;
            if (!is_perfect_square(rat_num(disc), root_n) || !is_perfect_square(rat_den(disc), root_d)) return std::nullopt;
            Rat sq(root_n, root_d);
            for (int branch = 0; branch < 2; ++branch) {
                Rat u2 = (x.p + (branch ? -sq : sq)) / 2;
                if (u2 < 0) continue;
                Int un, ud;
                if (!is_perfect_square(rat_num(u2), un) || !is_perfect_square(rat_den(u2), ud)) continue;
                Rat u(un, ud);
                if (u == 0) continue;
                Rat v = x.q / (2 * u);
                Scalar cand = quad(u, v, x.d);
                if (cand * cand == *this) return canonical_sign(cand);
            }
            return std::nullopt;
        }
        return Scalar(std::sqrt(cplx()));
    }

    std::string str() const {
        if (is_rational()) {
            const Rat& r = rat();
            if (rat_den(r) == 1) return rat_num(r).str();
            return rat_num(r).str() + "/" + rat_den(r).str();
        }
        if (is_quad()) {
            const Quad& x = quad_part();
            std::string out;
            if (x.p != 0) out += Scalar(x.p).str() + (x.q > 0 ? "+" : "");
            if (x.q == 1) {}
            else if (x.q == -1) out += "-";
            else out += Scalar(x.q).str() + "*";
            out += "sqrt(" + x.d.str() + ")";
            return out;
        }
        char buf[80];
        std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", cplx().real(), cplx().imag());
        return buf;
    }

private:
    static void check_same_ext(const Quad& x, const Quad& y) {
        if (x.d != y.d)
            throw arith_error("cannot mix extensions Q(sqrt(" + x.d.str() + ")) and Q(sqrt(" + y.d.str() + "))");
    }
    static void require_both_float(const Scalar& a, const Scalar& b, const char* op) {
        if (a.is_float() != b.is_float())
            throw arith_error(std::string("mixing exact and float scalars in '") + op +
                              "' requires an explicit downcast");
    }
    static Scalar combine(const Scalar& a, const Scalar& b, bool sub) {
        if (a.is_float() || b.is_float()) {
            require_both_float(a, b, sub ? "-" : "+");
            return Scalar(sub ? a.cplx() - b.cplx() : a.cplx() + b.cplx());
        }
        if (a.is_rational() && b.is_rational())
            return Scalar(sub ? Rat(a.rat() - b.rat()) : Rat(a.rat() + b.rat()));
        Rat ap = a.re_part(), aq = a.quad_coeff();
        Rat bp = b.re_part(), bq = b.quad_coeff();
        Int d;
        if (a.is_quad() && b.is_quad()) { check_same_ext(a.quad_part(), b.quad_part()); d = a.quad_part().d; }
        else d = a.is_quad() ? a.quad_part().d : b.quad_part().d;
        if (sub) return quad(ap - bp, aq - bq, d);
        return quad(ap + bp, aq + bq, d);
    }
    // Canonical sign for square roots: sqrt coefficient > 0, else rational part > 0.
    static Scalar canonical_sign(const Scalar& s) {
        if (s.is_quad()) {
            const Quad& x = s.quad_part();
            if (x.q < 0 || (x.q == 0 && x.p < 0)) return -s;
            return s;
        }
        if (s.is_rational() && s.rat() < 0) return -s;
        return s;
    }

    std::variant<Rat, Quad, Complex> v_;
};

// Canonical square root used by the Moebius classifier: the branch with
// positive sqrt coefficient (for adjoined roots), falling back to the
// in-field root when the argument is a perfect square.
inline Scalar canonical_sqrt(const Scalar& s) {
    if (s.is_float()) return Scalar(std::sqrt(s.cplx()));
    if (auto r = s.sqrt_in_field()) return *r;
    if (s.is_rational()) return Scalar::sqrt_of(s.rat());
    throw arith_error("square root would need a tower of quadratic extensions");
}

// Smallest p <= cap with s^p = 1, or 0 when none (s must be exact).
inline int root_of_unity_order(const Scalar& s, int cap = 200) {
    if (!s.is_exact()) throw arith_error("root_of_unity_order needs an exact scalar");
    Scalar acc = s;
    for (int p = 1; p <= cap; ++p) {
        if (acc.is_one()) return p;
        acc = acc * s;
    }
    return 0;
}

}  // namespace genus0
