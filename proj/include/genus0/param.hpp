#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genus0/scalar.hpp"

namespace genus0 {

// Polynomial over Q in named parameters (h, a, b, ...), recursive dense:
// a value is either a rational constant or a dense polynomial in its main
// variable whose coefficients only involve strictly smaller variable names.
// This gives canonical forms with plain univariate algorithms at each level.
class ParamPoly {
public:
    ParamPoly() : cst_(0) {}
    ParamPoly(const Rat& r) : cst_(r) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(int n) : cst_(n) {}         // NOLINT

    static ParamPoly variable(const std::string& name) {
        ParamPoly p;
        p.var_ = name;
        p.coeffs_ = {ParamPoly(0), ParamPoly(1)};
        return p;
    }

    bool is_constant() const { return var_.empty(); }
    bool is_zero() const { return is_constant() && cst_ == 0; }
    bool is_one() const { return is_constant() && cst_ == 1; }
    const Rat& constant() const {
        if (!is_constant()) throw arith_error("ParamPoly is not constant: " + str());
        return cst_;
    }
    const std::string& main_var() const { return var_; }
    int degree() const { return is_constant() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return combine(a, b, false); }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return combine(a, b, true); }
    ParamPoly operator-() const {
        ParamPoly r(*this);
        if (r.is_constant()) { r.cst_ = -r.cst_; return r; }
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero() || b.is_zero()) return ParamPoly(0);
        if (a.is_constant() && b.is_constant()) return ParamPoly(Rat(a.cst_ * b.cst_));
        if (precedes(a, b)) {  // a acts as a scalar on b's coefficients
            ParamPoly r;
            r.var_ = b.var_;
            r.coeffs_.reserve(b.coeffs_.size());
            for (const auto& c : b.coeffs_) r.coeffs_.push_back(a * c);
            r.normalize();
            return r;
        }
        if (precedes(b, a)) return b * a;
        ParamPoly r;
        r.var_ = a.var_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ParamPoly(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        r.normalize();
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) { *this = *this + o; return *this; }
    ParamPoly& operator-=(const ParamPoly& o) { *this = *this - o; return *this; }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        if (a.var_ != b.var_) return false;
        if (a.is_constant()) return a.cst_ == b.cst_;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly pow(int e) const {
        ParamPoly r(1), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    bool has_var(const std::string& v) const {
        if (is_constant()) return false;
        if (var_ == v) return true;
        if (var_ < v) return false;  // all inner vars are smaller still
        for (const auto& c : coeffs_)
            if (c.has_var(v)) return true;
        return false;
    }

    void collect_vars(std::set<std::string>& out) const {
        if (is_constant()) return;
        out.insert(var_);
        for (const auto& c : coeffs_) c.collect_vars(out);
    }

    int degree_in(const std::string& v) const {
        if (is_constant()) return 0;
        if (var_ == v) return degree();
        if (var_ < v) return 0;
        int d = 0;
        for (const auto& c : coeffs_) d = std::max(d, c.degree_in(v));
        return d;
    }

    // Coefficient of v^k, a polynomial not involving v.
    ParamPoly coeff_of(const std::string& v, int k) const {
        if (is_constant() || var_ < v) return k == 0 ? *this : ParamPoly(0);
        if (var_ == v) return k <= degree() ? coeffs_[k] : ParamPoly(0);
        ParamPoly r;
        r.var_ = var_;
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.coeffs_.push_back(c.coeff_of(v, k));
        r.normalize();
        return r;
    }

    // Leading rational coefficient of the recursively-leading monomial.
    Rat lead_rational() const {
        if (is_constant()) return cst_;
        return coeffs_.back().lead_rational();
    }

    // gcd of all rational coefficients (>= 0); used for content normalization.
    Rat rational_content() const {
        if (is_constant()) return rat_abs(cst_);
        Rat g = 0;
        for (const auto& c : coeffs_) g = rat_content_gcd(g, c.rational_content());
        return g;
    }

    // Content over the inner coefficient ring (gcd of the main-var coefficients);
    // for constants the content is the constant itself.
    ParamPoly content() const {
        if (is_constant()) return *this;
        ParamPoly g(0);
        for (const auto& c : coeffs_) g = gcd(g, c);
        return g;
    }

    ParamPoly primitive_part() const {
        if (is_zero()) return *this;
        return divexact(*this, content());
    }

    // gcd, canonical: primitive in its main variable with lead_rational() == 1,
    // except a pure rational gcd which is returned as 1 (field of constants).
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero()) return make_canonical(b);
        if (b.is_zero()) return make_canonical(a);
        if (a.is_constant() && b.is_constant()) return ParamPoly(1);
        if (a.is_constant()) return gcd(a, b.content());
        if (b.is_constant()) return gcd(a.content(), b);
        if (a.var_ != b.var_) {
            if (a.var_ < b.var_) return gcd(a, b.content());
            return gcd(a.content(), b);
        }
        const std::string v = a.var_;
        ParamPoly g0 = gcd(a.content(), b.content());
        ParamPoly p = a.primitive_part(), q = b.primitive_part();
        if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
        // primitive Euclid with pseudo-remainders
        ParamPoly result(1);
        for (;;) {
            if (q.is_zero()) { result = p; break; }
            if (q.degree_in(v) == 0) break;  // unit in Frac(lower)[v]
            ParamPoly r = prem(p, q, v);
            p = q;
            q = r.is_zero() ? r : r.primitive_part();
        }
        return make_canonical(g0 * result);
    }

    static ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero() || b.is_zero()) return ParamPoly(0);
        return make_canonical(divexact(a * b, gcd(a, b)));
    }

    // Pseudo-remainder of a by b in variable v; requires deg_v(b) >= 1.
    static ParamPoly prem(const ParamPoly& a, const ParamPoly& b, const std::string& v) {
        int db = b.degree_in(v);
        if (db == 0) throw arith_error("pseudo-division needs positive divisor degree");
        ParamPoly lb = b.coeff_of(v, db);
        ParamPoly r = a;
        int dr = r.degree_in(v);
        while (!r.is_zero() && dr >= db) {
            ParamPoly lr = r.coeff_of(v, dr);
            // r <- lb*r - lr * v^(dr-db) * b
            r = lb * r - lr * shift(v, dr - db) * b;
            int nd = r.degree_in(v);
            if (nd >= dr && !r.is_zero()) throw arith_error("pseudo-division failed to reduce degree");
            dr = nd;
        }
        return r;
    }

    // Exact division; throws when b does not divide a.
    static ParamPoly divexact(const ParamPoly& a, const ParamPoly& b) {
        if (b.is_zero()) throw arith_error("division by zero polynomial");
        if (a.is_zero()) return a;
        if (b.is_constant()) {
            if (a.is_constant()) return ParamPoly(Rat(a.cst_ / b.cst_));
            ParamPoly r;
            r.var_ = a.var_;
            for (const auto& c : a.coeffs_) r.coeffs_.push_back(divexact(c, b));
            r.normalize();
            return r;
        }
        if (a.is_constant()) throw arith_error("inexact polynomial division");
        const std::string v = std::max(a.var_, b.var_);
        int db = b.degree_in(v);
        if (db == 0) {
            // b only involves lower variables: divide the v-coefficients of a
            ParamPoly r;
            r.var_ = a.var_;
            for (const auto& c : a.coeffs_) r.coeffs_.push_back(divexact(c, b));
            r.normalize();
            return r;
        }
        ParamPoly lb = b.coeff_of(v, db);
        ParamPoly r = a, q(0);
        while (!r.is_zero()) {
            int dr = r.degree_in(v);
            if (dr < db) throw arith_error("inexact polynomial division");
            ParamPoly t = divexact(r.coeff_of(v, dr), lb) * shift(v, dr - db);
            q = q + t;
            r = r - t * b;
            if (!r.is_zero() && r.degree_in(v) >= dr) throw arith_error("inexact polynomial division");
        }
        return q;
    }

    ParamPoly derivative(const std::string& v) const {
        if (is_constant()) return ParamPoly(0);
        if (var_ == v) {
            ParamPoly r;
            r.var_ = var_;
            for (size_t i = 1; i < coeffs_.size(); ++i)
                r.coeffs_.push_back(coeffs_[i] * ParamPoly(Rat(static_cast<long>(i))));
            r.normalize();
            return r;
        }
        if (var_ < v) return ParamPoly(0);
        ParamPoly r;
        r.var_ = var_;
        for (const auto& c : coeffs_) r.coeffs_.push_back(c.derivative(v));
        r.normalize();
        return r;
    }

    Scalar eval(const std::map<std::string, Scalar>& vals) const {
        if (is_constant()) return Scalar(cst_);
        auto it = vals.find(var_);
        if (it == vals.end()) throw arith_error("parameter '" + var_ + "' has no value");
        Scalar x = it->second, acc = Scalar::zero();
        for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) acc = acc * x + c->eval(vals);
        return acc;
    }

    std::string str() const {
        if (is_constant()) return Scalar(cst_).str();
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const ParamPoly& c = coeffs_[k];
            if (c.is_zero()) continue;
            std::string term;
            bool cneg = c.is_constant() && c.cst_ < 0;
            ParamPoly cabs = cneg ? -c : c;
            if (k == 0) term = cabs.atom_str();
            else {
                std::string head = var_ + (k > 1 ? "^" + std::to_string(k) : "");
                if (cabs.is_one()) term = head;
                else term = cabs.atom_str() + "*" + head;
            }
            if (out.empty()) out = (cneg ? "-" : "") + term;
            else out += (cneg ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::string atom_str() const {
        if (is_constant() || (coeffs_.size() == 2 && coeffs_[0].is_zero() && coeffs_[1].is_one()))
            return str();
        std::string s = str();
        if (s.find_first_of("+-") == std::string::npos) return s;
        return "(" + s + ")";
    }
    static ParamPoly shift(const std::string& v, int k) {
        if (k == 0) return ParamPoly(1);
        ParamPoly p;
        p.var_ = v;
        p.coeffs_.assign(k + 1, ParamPoly(0));
        p.coeffs_[k] = ParamPoly(1);
        return p;
    }
    static ParamPoly make_canonical(const ParamPoly& p) {
        if (p.is_zero()) return p;
        if (p.is_constant()) return ParamPoly(1);
        Rat l = p.lead_rational();
        return p * ParamPoly(Rat(1 / l));
    }
    static bool precedes(const ParamPoly& a, const ParamPoly& b) {
        // a is "scalar-like" relative to b
        if (b.is_constant()) return false;
        return a.is_constant() || a.var_ < b.var_;
    }
    static ParamPoly combine(const ParamPoly& a, const ParamPoly& b, bool sub) {
        if (a.is_constant() && b.is_constant())
            return sub ? ParamPoly(Rat(a.cst_ - b.cst_)) : ParamPoly(Rat(a.cst_ + b.cst_));
        if (precedes(a, b)) {
            ParamPoly r = sub ? -b : b;
            r.coeffs_[0] = a + r.coeffs_[0];
            r.normalize();
            return r;
        }
        if (precedes(b, a)) {
            ParamPoly r = a;
            r.coeffs_[0] = sub ? r.coeffs_[0] - b : r.coeffs_[0] + b;
            r.normalize();
            return r;
        }
        ParamPoly r;
        r.var_ = a.var_;
        size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.assign(n, ParamPoly(0));
        for (size_t i = 0; i < n; ++i) {
            ParamPoly x = i < a.coeffs_.size() ? a.coeffs_[i] : ParamPoly(0);
            ParamPoly y = i < b.coeffs_.size() ? b.coeffs_[i] : ParamPoly(0);
            r.coeffs_[i] = sub ? x - y : x + y;
        }
        r.normalize();
        return r;
    }
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) { var_.clear(); cst_ = 0; return; }
        if (coeffs_.size() == 1) {
            ParamPoly c = coeffs_[0];
            *this = c;
        }
    }

    std::string var_;
    Rat cst_;
    std::vector<ParamPoly> coeffs_;
};

// Reduced fraction of ParamPoly with canonical denominator (lead_rational == 1).
class ParamRat {
public:
    ParamRat() : num_(0), den_(1) {}
    ParamRat(const Rat& r) : num_(r), den_(1) {}      // NOLINT(google-explicit-constructor)
    ParamRat(int n) : num_(n), den_(1) {}             // NOLINT
    ParamRat(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT
    ParamRat(const ParamPoly& n, const ParamPoly& d) : num_(n), den_(d) { reduce(); }

    static ParamRat variable(const std::string& name) { return ParamRat(ParamPoly::variable(name)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant() const { return num_.constant() / den_.constant(); }

    static ParamRat zero() { return ParamRat(); }
    static ParamRat one() { return ParamRat(1); }

    friend ParamRat operator+(const ParamRat& a, const ParamRat& b) {
        return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamRat operator-(const ParamRat& a, const ParamRat& b) {
        return ParamRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamRat operator*(const ParamRat& a, const ParamRat& b) {
        return ParamRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ParamRat operator/(const ParamRat& a, const ParamRat& b) {
        if (b.is_zero()) throw arith_error("division by zero rational function");
        return ParamRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    ParamRat operator-() const { ParamRat r(*this); r.num_ = -r.num_; return r; }
    ParamRat& operator+=(const ParamRat& o) { *this = *this + o; return *this; }
    ParamRat& operator-=(const ParamRat& o) { *this = *this - o; return *this; }
    ParamRat& operator*=(const ParamRat& o) { *this = *this * o; return *this; }
    ParamRat& operator/=(const ParamRat& o) { *this = *this / o; return *this; }

    ParamRat inverse() const {
        if (is_zero()) throw arith_error("division by zero rational function");
        return ParamRat(den_, num_);
    }

    friend bool operator==(const ParamRat& a, const ParamRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

    ParamRat pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        ParamRat r(1), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    bool has_var(const std::string& v) const { return num_.has_var(v) || den_.has_var(v); }
    void collect_vars(std::set<std::string>& out) const { num_.collect_vars(out); den_.collect_vars(out); }

    Scalar eval(const std::map<std::string, Scalar>& vals) const {
        Scalar d = den_.eval(vals);
        if (d.is_zero()) throw arith_error("parameter substitution hit a pole");
        return num_.eval(vals) / d;
    }

    // Substitute one named parameter by a rational function of the others.
    ParamRat subst(const std::string& v, const ParamRat& value) const {
        int dn = num_.degree_in(v), dd = den_.degree_in(v);
        ParamRat n = horner_subst(num_, v, dn, value);
        ParamRat d = horner_subst(den_, v, dd, value);
        if (d.is_zero()) throw arith_error("substitution for '" + v + "' hit a pole");
        return n / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+-*^") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_.str()) + "/" + wrap(den_.str());
    }

private:
    static ParamRat horner_subst(const ParamPoly& p, const std::string& v, int deg, const ParamRat& value) {
        ParamRat acc(0);
        for (int k = deg; k >= 0; --k) acc = acc * value + ParamRat(p.coeff_of(v, k));
        return acc;
    }
    void reduce() {
        if (den_.is_zero()) throw arith_error("zero denominator in rational function");
        if (num_.is_zero()) { den_ = ParamPoly(1); return; }
        ParamPoly g = ParamPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = ParamPoly::divexact(num_, g);
            den_ = ParamPoly::divexact(den_, g);
        }
        Rat l = den_.lead_rational();
        if (l != 1) {
            ParamPoly inv{Rat(1 / l)};
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    ParamPoly num_, den_;
};

// Exact square root of a polynomial when it is a perfect square; the result
// has positive leading rational coefficient. Handles the squarefree-root and
// monomial-power cases that arise from determinant ratios.
inline std::optional<ParamPoly> poly_sqrt(const ParamPoly& p) {
    if (p.is_zero()) return ParamPoly(0);
    if (p.is_constant()) {
        const Rat& c = p.constant();
        if (c < 0) return std::nullopt;
        Int rn, rd;
        if (!is_perfect_square(rat_num(c), rn) || !is_perfect_square(rat_den(c), rd)) return std::nullopt;
        return ParamPoly(Rat(rn, rd));
    }
    const std::string v = p.main_var();
    if (p.degree() % 2) return std::nullopt;
    ParamPoly g = ParamPoly::gcd(p, p.derivative(v));
    if (g.is_constant()) return std::nullopt;
    ParamPoly root = g;
    for (int guard = 0; guard < 64; ++guard) {
        ParamPoly sq = root * root;
        try {
            ParamPoly q = ParamPoly::divexact(p, sq);
            auto cr = poly_sqrt(q);
            if (!cr) return std::nullopt;
            ParamPoly res = *cr * root;
            if (res.lead_rational() < 0) res = -res;
            if (res * res == p) return res;
            return std::nullopt;
        } catch (const arith_error&) {
            // root has excess multiplicity (e.g. p = t^4 gives g = t^3); peel it
            ParamPoly g2 = ParamPoly::gcd(root, ParamPoly::divexact(p, ParamPoly::gcd(p, root)));
            if (g2 == root || g2.is_constant()) return std::nullopt;
            root = g2;
        }
    }
    return std::nullopt;
}

inline std::optional<ParamRat> ratfunc_sqrt(const ParamRat& v) {
    // v = n/d reduced => sqrt(v) = sqrt(n*d)/d
    auto r = poly_sqrt(v.num() * v.den());
    if (!r) return std::nullopt;
    return ParamRat(*r, v.den());
}

}  // namespace genus0
