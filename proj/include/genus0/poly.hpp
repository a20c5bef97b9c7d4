#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genus0/numbers.hpp"

namespace genus0 {

// Dense univariate polynomial over a field K. The zero polynomial is the
// empty coefficient list; its degree is the sentinel -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::string var, std::vector<K> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& k, const std::string& var = "") {
        Poly p(var);
        if (!k.is_zero()) p.c_ = {k};
        return p;
    }
    static Poly variable(const std::string& var) {
        return Poly(var, {K::zero(), K::one()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::string& var() const { return var_; }
    const K& operator[](size_t i) const { return c_[i]; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K::zero(); }
    const K& lead() const {
        if (c_.empty()) throw arith_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(common_var(a, b));
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), K::zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r(common_var(a, b));
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), K::zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& k : r.c_) k = -k;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(common_var(a, b));
        Poly r(common_var(a, b));
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    Poly operator*(const K& k) const {
        Poly r(*this);
        if (k.is_zero()) return Poly(var_);
        for (auto& ci : r.c_) ci = ci * k;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Division with remainder over the field.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw arith_error("polynomial division by zero");
        Poly q(common_var(a, b)), r = a;
        K lb = b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            K coef = r.lead() / lb;
            Poly t(q.var_);
            t.c_.assign(k + 1, K::zero());
            t.c_[k] = coef;
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K::one() / lead();
        return *this * inv;
    }

    // Monic gcd; gcd(0, 0) = 0 by convention.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly derivative() const {
        Poly r(var_);
        for (size_t i = 1; i < c_.size(); ++i) {
            K k = c_[i];
            for (size_t j = 1; j < i; ++j) k += c_[i];  // multiply by i via repeated add
            r.c_.push_back(k);
        }
        r.trim();
        return r;
    }

    // Horner evaluation into any ring T that supports T*T, T+T and a lift K -> T.
    template <class T, class Lift>
    T eval(const T& x, Lift lift) const {
        T acc = lift(K::zero());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it);
        return acc;
    }
    K eval(const K& x) const {
        return eval<K>(x, [](const K& k) { return k; });
    }

    // Coefficient-wise map into another field.
    template <class T, class Fn>
    Poly<T> map(Fn fn, const std::string& var) const {
        std::vector<T> out;
        out.reserve(c_.size());
        for (const auto& k : c_) out.push_back(fn(k));
        return Poly<T>(var, std::move(out));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string v = var_.empty() ? "t" : var_;
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            bool atomic = mag.find_first_of("+-") == std::string::npos &&
                          (i == 0 || mag.find_first_of("*/^") == std::string::npos);
            if (!atomic) {
                mag = "(" + cs + ")";
                neg = false;
            }
            std::string term;
            if (i == 0) term = mag;
            else {
                std::string head = v + (i > 1 ? "^" + std::to_string(i) : "");
                term = (mag == "1") ? head : mag + "*" + head;
            }
            if (out.empty()) out = (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    static std::string common_var(const Poly& a, const Poly& b) {
        if (a.var_.empty()) return b.var_;
        if (b.var_.empty() || a.var_ == b.var_) return a.var_;
        if (a.is_constant() || b.is_constant()) return a.is_constant() ? b.var_ : a.var_;
        throw arith_error("mixing polynomials in '" + a.var_ + "' and '" + b.var_ + "'");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::string var_;
    std::vector<K> c_;
};

// Reduced rational function num/den over a field: gcd(num, den) = 1 and the
// denominator is monic, which makes the representation canonical.
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::constant(K::one())) {}
    RatFunc(const Poly<K>& num, const Poly<K>& den) : num_(num), den_(den) { reduce(); }
    explicit RatFunc(const Poly<K>& num) : num_(num), den_(Poly<K>::constant(K::one(), num.var())) {}
    static RatFunc constant(const K& k, const std::string& var = "") {
        return RatFunc(Poly<K>::constant(k, var));
    }
    static RatFunc variable(const std::string& var) { return RatFunc(Poly<K>::variable(var)); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const {
        if (!is_constant()) throw arith_error("rational function is not constant");
        if (num_.is_zero()) return K::zero();
        return num_.lead() / den_.lead();
    }
    int degree() const {  // max of numerator/denominator degree, as in properness checks
        return std::max(num_.degree(), den_.degree());
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return constant(K::one()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw arith_error("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { RatFunc r(*this); r.num_ = -r.num_; return r; }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation into a field T (T must reject zero denominators via its division).
    template <class T, class Lift>
    T eval(const T& x, Lift lift) const {
        T n = num_.template eval<T>(x, lift);
        T d = den_.template eval<T>(x, lift);
        return n / d;
    }
    K eval(const K& x) const {
        return eval<K>(x, [](const K& k) { return k; });
    }

    // Composition (this o g) for a rational g in the same field.
    RatFunc compose(const RatFunc& g) const {
        RatFunc n = num_.template eval<RatFunc>(g, [&](const K& k) { return constant(k, g.num().var()); });
        RatFunc d = den_.template eval<RatFunc>(g, [&](const K& k) { return constant(k, g.num().var()); });
        return n / d;
    }

    template <class T, class Fn>
    RatFunc<T> map(Fn fn, const std::string& var) const {
        return RatFunc<T>(num_.template map<T>(fn, var), den_.template map<T>(fn, var));
    }

    std::string str() const {
        if (den_.degree() == 0 && den_.lead().is_one()) return num_.str();
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+-*/^") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_.str()) + "/" + wrap(den_.str());
    }

private:
    void reduce() {
        if (den_.is_zero()) throw arith_error("zero denominator in rational function");
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(K::one(), den_.var());
            return;
        }
        Poly<K> g = Poly<K>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divrem(num_, g).first;
            den_ = Poly<K>::divrem(den_, g).first;
        }
        K inv = K::one() / den_.lead();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }

    Poly<K> num_, den_;
};

}  // namespace genus0
