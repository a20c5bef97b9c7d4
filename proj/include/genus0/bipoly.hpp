#pragma once

#include "genus0/poly.hpp"

namespace genus0 {

// Bivariate polynomial in (x, y) over a field K, stored x-major: the
// coefficient of x^i is a univariate Poly<K> in y. Monomial order for
// canonical forms and printing is degree in x, then degree in y.
template <class K>
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly<K>> cx) : cx_(std::move(cx)) { trim(); }

    static BiPoly constant(const K& k) {
        BiPoly p;
        if (!k.is_zero()) p.cx_ = {Poly<K>::constant(k, "y")};
        return p;
    }
    static BiPoly x() {
        BiPoly p;
        p.cx_ = {Poly<K>("y"), Poly<K>::constant(K::one(), "y")};
        return p;
    }
    static BiPoly y() {
        BiPoly p;
        p.cx_ = {Poly<K>::variable("y")};
        return p;
    }
    static BiPoly monomial(const K& k, int i, int j) {
        if (k.is_zero()) return BiPoly();
        BiPoly p;
        p.cx_.assign(i + 1, Poly<K>("y"));
        std::vector<K> yc(j + 1, K::zero());
        yc[j] = k;
        p.cx_[i] = Poly<K>("y", std::move(yc));
        return p;
    }
    static BiPoly from_y_poly(const Poly<K>& py) {
        BiPoly p;
        if (!py.is_zero()) p.cx_ = {py};
        return p;
    }

    bool is_zero() const { return cx_.empty(); }
    bool is_constant() const { return degree_x() <= 0 && degree_y() <= 0; }
    int degree_x() const { return static_cast<int>(cx_.size()) - 1; }
    int degree_y() const {
        int d = -1;
        for (const auto& c : cx_) d = std::max(d, c.degree());
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (size_t i = 0; i < cx_.size(); ++i)
            if (!cx_[i].is_zero()) d = std::max(d, static_cast<int>(i) + cx_[i].degree());
        return d;
    }
    K constant_value() const {
        if (is_zero()) return K::zero();
        if (!is_constant()) throw arith_error("bivariate polynomial is not constant");
        return cx_[0].lead();
    }
    Poly<K> coeff_x(int i) const {
        return i >= 0 && i < static_cast<int>(cx_.size()) ? cx_[i] : Poly<K>("y");
    }
    K coeff(int i, int j) const { return coeff_x(i).coeff(j); }
    // Leading coefficient under the canonical (x-major) order.
    K lead() const {
        if (is_zero()) throw arith_error("leading coefficient of zero polynomial");
        return cx_.back().lead();
    }
    const std::vector<Poly<K>>& coeffs_x() const { return cx_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.cx_.assign(std::max(a.cx_.size(), b.cx_.size()), Poly<K>("y"));
        for (size_t i = 0; i < r.cx_.size(); ++i) r.cx_[i] = a.coeff_x(static_cast<int>(i)) + b.coeff_x(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    BiPoly operator-() const {
        BiPoly r(*this);
        for (auto& c : r.cx_) c = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        BiPoly r;
        r.cx_.assign(a.cx_.size() + b.cx_.size() - 1, Poly<K>("y"));
        for (size_t i = 0; i < a.cx_.size(); ++i)
            for (size_t j = 0; j < b.cx_.size(); ++j)
                r.cx_[i + j] += a.cx_[i] * b.cx_[j];
        r.trim();
        return r;
    }
    BiPoly operator*(const K& k) const {
        BiPoly r(*this);
        for (auto& c : r.cx_) c = c * k;
        r.trim();
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    BiPoly& operator-=(const BiPoly& o) { *this = *this - o; return *this; }
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.cx_ == b.cx_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const {
        BiPoly r = constant(K::one()), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    BiPoly derivative_x() const {
        BiPoly r;
        for (size_t i = 1; i < cx_.size(); ++i) {
            Poly<K> c = cx_[i];
            for (size_t j = 1; j < i; ++j) c += cx_[i];
            r.cx_.push_back(c);
        }
        r.trim();
        return r;
    }
    BiPoly derivative_y() const {
        BiPoly r(*this);
        for (auto& c : r.cx_) c = c.derivative();
        r.trim();
        return r;
    }

    // Swap the roles of x and y.
    BiPoly transpose() const {
        BiPoly r;
        int dy = degree_y();
        if (dy < 0) return r;
        r.cx_.assign(dy + 1, Poly<K>("y"));
        for (int j = 0; j <= dy; ++j) {
            std::vector<K> row;
            row.reserve(cx_.size());
            for (const auto& c : cx_) row.push_back(c.coeff(j));
            r.cx_[j] = Poly<K>("y", std::move(row));
        }
        r.trim();
        return r;
    }

    // Horner evaluation at a pair of values in any field T with a lift K -> T.
    template <class T, class Lift>
    T eval(const T& xval, const T& yval, Lift lift) const {
        T acc = lift(K::zero());
        for (auto it = cx_.rbegin(); it != cx_.rend(); ++it)
            acc = acc * xval + it->template eval<T>(yval, lift);
        return acc;
    }
    K eval(const K& xval, const K& yval) const {
        return eval<K>(xval, yval, [](const K& k) { return k; });
    }
    Poly<K> eval_x(const K& xval) const {  // f(x0, y) as a polynomial in y
        Poly<K> acc("y");
        for (auto it = cx_.rbegin(); it != cx_.rend(); ++it) acc = acc * xval + *it;
        return acc;
    }

    template <class T, class Fn>
    BiPoly<T> map(Fn fn) const {
        std::vector<Poly<T>> out;
        out.reserve(cx_.size());
        for (const auto& c : cx_) out.push_back(c.template map<T>(fn, "y"));
        return BiPoly<T>(std::move(out));
    }

    // Content w.r.t. x: monic gcd of the x-coefficients (a polynomial in y).
    Poly<K> content_x() const {
        Poly<K> g("y");
        for (const auto& c : cx_) g = Poly<K>::gcd(g, c);
        return g;
    }

    BiPoly primitive_part_x() const {
        if (is_zero()) return *this;
        Poly<K> c = content_x();
        if (c.degree() == 0) return *this * (K::one() / c.lead());
        BiPoly r;
        r.cx_.reserve(cx_.size());
        for (const auto& ci : cx_) {
            auto [q, rem] = Poly<K>::divrem(ci, c);
            if (!rem.is_zero()) throw arith_error("content division failed");
            r.cx_.push_back(q);
        }
        r.trim();
        return r;
    }

    // Pseudo-remainder of a by b as polynomials in x over K[y]; deg_x(b) >= 1.
    static BiPoly prem_x(const BiPoly& a, const BiPoly& b) {
        int db = b.degree_x();
        if (db < 1) throw arith_error("pseudo-division needs positive degree divisor");
        BiPoly r = a;
        BiPoly lb = from_y_poly(b.cx_.back());
        while (!r.is_zero() && r.degree_x() >= db) {
            int dr = r.degree_x();
            BiPoly lr = from_y_poly(r.cx_.back());
            r = lb * r - lr * shift_x(dr - db) * b;
            if (!r.is_zero() && r.degree_x() >= dr) throw arith_error("pseudo-division failed to reduce degree");
        }
        return r;
    }

    // gcd up to a unit, normalized monic in the leading coefficient.
    static BiPoly gcd(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero()) return b.is_zero() ? b : b.primitive_normal();
        if (b.is_zero()) return a.primitive_normal();
        Poly<K> cont = Poly<K>::gcd(a.content_x(), b.content_x());
        BiPoly p = a.primitive_part_x(), q = b.primitive_part_x();
        if (p.degree_x() < q.degree_x()) std::swap(p, q);
        BiPoly g = constant(K::one());
        for (;;) {
            if (q.is_zero()) { g = p; break; }
            if (q.degree_x() == 0) break;  // unit in K(y)[x]
            BiPoly r = prem_x(p, q);
            p = q;
            q = r.is_zero() ? r : r.primitive_part_x();
        }
        BiPoly result = from_y_poly(cont) * g.primitive_part_x();
        return result.primitive_normal();
    }

    // Exact division; throws when inexact.
    static BiPoly divexact(const BiPoly& a, const BiPoly& b) {
        if (b.is_zero()) throw arith_error("division by zero polynomial");
        if (a.is_zero()) return a;
        int db = b.degree_x();
        if (db == 0) {
            const Poly<K>& d = b.cx_[0];
            BiPoly r;
            r.cx_.reserve(a.cx_.size());
            for (const auto& c : a.cx_) {
                auto [q, rem] = Poly<K>::divrem(c, d);
                if (!rem.is_zero()) throw arith_error("inexact bivariate division");
                r.cx_.push_back(q);
            }
            r.trim();
            return r;
        }
        BiPoly r = a, q;
        const Poly<K>& lb = b.cx_.back();
        q.cx_.assign(std::max<int>(a.degree_x() - db + 1, 0), Poly<K>("y"));
        while (!r.is_zero()) {
            int dr = r.degree_x();
            if (dr < db) throw arith_error("inexact bivariate division");
            auto [qc, rem] = Poly<K>::divrem(r.cx_.back(), lb);
            if (!rem.is_zero()) throw arith_error("inexact bivariate division");
            q.cx_[dr - db] = qc;
            r = r - shift_x(dr - db) * from_y_poly(qc) * b;
            if (!r.is_zero() && r.degree_x() >= dr) throw arith_error("inexact bivariate division");
        }
        q.trim();
        return q;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree_x(); i >= 0; --i) {
            const Poly<K>& c = cx_[i];
            if (c.is_zero()) continue;
            for (int j = c.degree(); j >= 0; --j) {
                if (c.coeff(j).is_zero()) continue;
                std::string cs = c.coeff(j).str();
                bool neg = !cs.empty() && cs[0] == '-';
                std::string mag = neg ? cs.substr(1) : cs;
                bool atomic = mag.find_first_of("+-") == std::string::npos &&
                              (i + j == 0 || mag.find_first_of("*/^") == std::string::npos);
                if (!atomic) { mag = "(" + cs + ")"; neg = false; }
                std::string head;
                if (i > 0) head = "x" + (i > 1 ? "^" + std::to_string(i) : "");
                if (j > 0) head += (head.empty() ? "" : "*") + std::string("y") + (j > 1 ? "^" + std::to_string(j) : "");
                std::string term;
                if (head.empty()) term = mag;
                else term = (mag == "1") ? head : mag + "*" + head;
                if (out.empty()) out = (neg ? "-" : "") + term;
                else out += (neg ? " - " : " + ") + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    BiPoly primitive_normal() const {
        if (is_zero()) return *this;
        return *this * (K::one() / lead());
    }
    static BiPoly shift_x(int k) {
        BiPoly p;
        p.cx_.assign(k + 1, Poly<K>("y"));
        p.cx_[k] = Poly<K>::constant(K::one(), "y");
        return p;
    }
    void trim() {
        while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
    }

    std::vector<Poly<K>> cx_;
};

// Representative of g modulo the ideal <f>, reduced in the variable where f
// has maximal degree (ties resolved toward y). Pseudo-division is used, so
// the result equals c*g - q*f for some power c of f's leading coefficient;
// it is exactly zero iff f divides c*g.
template <class K>
BiPoly<K> reduce_mod_curve(const BiPoly<K>& g, const BiPoly<K>& f) {
    if (f.is_constant()) throw arith_error("cannot reduce modulo a constant polynomial");
    bool use_y = f.degree_y() >= f.degree_x();
    if (use_y) {
        if (g.degree_y() < f.degree_y()) return g;
        return BiPoly<K>::prem_x(g.transpose(), f.transpose()).transpose();
    }
    if (g.degree_x() < f.degree_x()) return g;
    return BiPoly<K>::prem_x(g, f);
}

// Reduced bivariate rational function with monic leading coefficient in the
// denominator (canonical representation over the field K).
template <class K>
class BiRatFunc {
public:
    BiRatFunc() : num_(), den_(BiPoly<K>::constant(K::one())) {}
    BiRatFunc(const BiPoly<K>& num, const BiPoly<K>& den) : num_(num), den_(den) { reduce(); }
    explicit BiRatFunc(const BiPoly<K>& num) : num_(num), den_(BiPoly<K>::constant(K::one())) {}

    static BiRatFunc constant(const K& k) { return BiRatFunc(BiPoly<K>::constant(k)); }
    static BiRatFunc x() { return BiRatFunc(BiPoly<K>::x()); }
    static BiRatFunc y() { return BiRatFunc(BiPoly<K>::y()); }
    static BiRatFunc zero() { return BiRatFunc(); }
    static BiRatFunc one() { return constant(K::one()); }

    const BiPoly<K>& num() const { return num_; }
    const BiPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const {
        if (is_zero()) return K::zero();
        return num_.constant_value() / den_.constant_value();
    }

    friend BiRatFunc operator+(const BiRatFunc& a, const BiRatFunc& b) {
        return BiRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRatFunc operator-(const BiRatFunc& a, const BiRatFunc& b) {
        return BiRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BiRatFunc operator*(const BiRatFunc& a, const BiRatFunc& b) {
        return BiRatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BiRatFunc operator/(const BiRatFunc& a, const BiRatFunc& b) {
        if (b.is_zero()) throw arith_error("division by the zero rational function");
        return BiRatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    BiRatFunc operator-() const { BiRatFunc r(*this); r.num_ = -r.num_; return r; }
    BiRatFunc& operator+=(const BiRatFunc& o) { *this = *this + o; return *this; }
    BiRatFunc& operator-=(const BiRatFunc& o) { *this = *this - o; return *this; }
    BiRatFunc& operator*=(const BiRatFunc& o) { *this = *this * o; return *this; }
    BiRatFunc& operator/=(const BiRatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const BiRatFunc& a, const BiRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BiRatFunc& a, const BiRatFunc& b) { return !(a == b); }

    BiRatFunc inverse() const {
        if (is_zero()) throw arith_error("inverse of zero");
        return BiRatFunc(den_, num_);
    }
    BiRatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        BiRatFunc r = one(), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    BiRatFunc derivative_x() const {
        return BiRatFunc(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
    }
    BiRatFunc derivative_y() const {
        return BiRatFunc(num_.derivative_y() * den_ - num_ * den_.derivative_y(), den_ * den_);
    }

    template <class T, class Lift>
    T eval(const T& xval, const T& yval, Lift lift) const {
        T n = num_.template eval<T>(xval, yval, lift);
        T d = den_.template eval<T>(xval, yval, lift);
        return n / d;
    }
    K eval(const K& xval, const K& yval) const {
        return eval<K>(xval, yval, [](const K& k) { return k; });
    }

    // Composition with a pair of bivariate rational functions.
    BiRatFunc compose(const BiRatFunc& gx, const BiRatFunc& gy) const {
        auto lift = [](const K& k) { return BiRatFunc::constant(k); };
        return eval<BiRatFunc>(gx, gy, lift);
    }

    // Substitute a rational parametrization (x, y) = (px(t), py(t)).
    RatFunc<K> restrict_to(const RatFunc<K>& px, const RatFunc<K>& py) const {
        auto lift = [&](const K& k) { return RatFunc<K>::constant(k, px.num().var()); };
        return eval<RatFunc<K>>(px, py, lift);
    }

    template <class T, class Fn>
    BiRatFunc<T> map(Fn fn) const {
        return BiRatFunc<T>(num_.template map<T>(fn), den_.template map<T>(fn));
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+-*/^") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_.str()) + "/" + wrap(den_.str());
    }

private:
    void reduce() {
        if (den_.is_zero()) throw arith_error("zero denominator in rational function");
        if (num_.is_zero()) {
            den_ = BiPoly<K>::constant(K::one());
            return;
        }
        BiPoly<K> g = BiPoly<K>::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = BiPoly<K>::divexact(num_, g);
            den_ = BiPoly<K>::divexact(den_, g);
        }
        K inv = K::one() / den_.lead();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    BiPoly<K> num_, den_;
};

}  // namespace genus0
