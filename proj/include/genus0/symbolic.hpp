#pragma once

#include <memory>

#include "genus0/param.hpp"

namespace genus0 {

// Element re + im*delta of Q(params) or of its quadratic extension with
// delta^2 = D for one fixed D in Q(params). At most one extension is live in
// any computation; mixing two different D's is an error. With no parameters
// and no extension this degenerates to plain Q, so the whole symbolic
// pipeline can also run on constants.
class SymScalar {
public:
    using Ext = std::shared_ptr<const ParamRat>;

    SymScalar() : re_(0), im_(0) {}
    SymScalar(int n) : re_(n), im_(0) {}                 // NOLINT(google-explicit-constructor)
    SymScalar(const Rat& r) : re_(r), im_(0) {}          // NOLINT
    SymScalar(const ParamPoly& p) : re_(p), im_(0) {}    // NOLINT
    SymScalar(const ParamRat& r) : re_(r), im_(0) {}     // NOLINT
    SymScalar(const ParamRat& re, const ParamRat& im, Ext ext)
        : re_(re), im_(im), ext_(std::move(ext)) { prune(); }

    static SymScalar variable(const std::string& name) { return SymScalar(ParamRat::variable(name)); }
    static SymScalar sqrt_ext(const ParamRat& d_value) {
        if (d_value.is_constant()) {
            Scalar s = Scalar::sqrt_of(d_value.constant());
            return from_scalar(s);
        }
        return SymScalar(ParamRat(0), ParamRat(1), std::make_shared<const ParamRat>(d_value));
    }
    static SymScalar zero() { return SymScalar(); }
    static SymScalar one() { return SymScalar(1); }

    // Embeds an exact numeric scalar; floats are rejected.
    static SymScalar from_scalar(const Scalar& s) {
        if (s.is_rational()) return SymScalar(ParamRat(s.rat()));
        if (s.is_quad()) {
            return SymScalar(ParamRat(s.re_part()), ParamRat(s.quad_coeff()),
                             std::make_shared<const ParamRat>(ParamRat(Rat(s.quad_part().d))));
        }
        throw arith_error("cannot embed a float scalar into the symbolic field");
    }

    const ParamRat& re() const { return re_; }
    const ParamRat& im() const { return im_; }
    bool has_ext() const { return static_cast<bool>(ext_); }
    const ParamRat& ext_value() const {
        if (!ext_) throw arith_error("no quadratic extension attached");
        return *ext_;
    }
    Ext ext() const { return ext_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_rational_constant() const { return im_.is_zero() && re_.is_constant(); }
    Rat rational_constant() const {
        if (!is_rational_constant()) throw arith_error("symbolic scalar is not a rational constant");
        return re_.constant();
    }

    SymScalar operator-() const { return SymScalar(-re_, -im_, ext_); }

    friend SymScalar operator+(const SymScalar& a, const SymScalar& b) {
        Ext e = merge_ext(a, b);
        return SymScalar(a.re_ + b.re_, a.im_ + b.im_, e);
    }
    friend SymScalar operator-(const SymScalar& a, const SymScalar& b) {
        Ext e = merge_ext(a, b);
        return SymScalar(a.re_ - b.re_, a.im_ - b.im_, e);
    }
    friend SymScalar operator*(const SymScalar& a, const SymScalar& b) {
        Ext e = merge_ext(a, b);
        if (!e) return SymScalar(a.re_ * b.re_);
        const ParamRat& D = *e;
        return SymScalar(a.re_ * b.re_ + a.im_ * b.im_ * D, a.re_ * b.im_ + a.im_ * b.re_, e);
    }
    friend SymScalar operator/(const SymScalar& a, const SymScalar& b) { return a * b.inverse(); }

    SymScalar& operator+=(const SymScalar& o) { *this = *this + o; return *this; }
    SymScalar& operator-=(const SymScalar& o) { *this = *this - o; return *this; }
    SymScalar& operator*=(const SymScalar& o) { *this = *this * o; return *this; }
    SymScalar& operator/=(const SymScalar& o) { *this = *this / o; return *this; }

    SymScalar inverse() const {
        if (is_zero()) throw arith_error("division by zero symbolic scalar");
        if (im_.is_zero()) return SymScalar(re_.inverse(), ParamRat(0), ext_);
        const ParamRat& D = ext_value();
        ParamRat n = re_ * re_ - im_ * im_ * D;
        if (n.is_zero()) throw arith_error("extension norm vanished: delta^2 is a square");
        return SymScalar(re_ / n, -im_ / n, ext_);
    }

    SymScalar conj() const { return SymScalar(re_, -im_, ext_); }

    friend bool operator==(const SymScalar& a, const SymScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const SymScalar& a, const SymScalar& b) { return !(a == b); }

    SymScalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        SymScalar r = one(), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    bool has_var(const std::string& v) const { return re_.has_var(v) || im_.has_var(v); }
    void collect_vars(std::set<std::string>& out) const { re_.collect_vars(out); im_.collect_vars(out); }

    Scalar eval(const std::map<std::string, Scalar>& vals) const {
        Scalar r = re_.eval(vals);
        if (im_.is_zero()) return r;
        Scalar d = ext_value().eval(vals);
        if (!d.is_rational()) throw arith_error("extension value did not evaluate to a rational");
        return r + im_.eval(vals) * Scalar::sqrt_of(d.rat());
    }

    // Substitute a parameter; only legal on the delta part when D does not
    // involve the substituted variable.
    SymScalar subst(const std::string& v, const ParamRat& value) const {
        Ext e = ext_;
        if (!im_.is_zero() && ext_ && ext_->has_var(v))
            throw arith_error("cannot substitute '" + v + "' under the extension root");
        if (ext_ && ext_->has_var(v) && im_.is_zero()) e = nullptr;
        return SymScalar(re_.subst(v, value), im_.is_zero() ? ParamRat(0) : im_.subst(v, value), e);
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string d = "sqrt(" + ext_value().str() + ")";
        std::string out;
        if (!re_.is_zero()) out += re_.str() + " + ";
        if (im_.is_one()) out += d;
        else out += "(" + im_.str() + ")*" + d;
        return out;
    }

private:
    static Ext merge_ext(const SymScalar& a, const SymScalar& b) {
        if (!a.ext_) return b.ext_;
        if (!b.ext_) return a.ext_;
        if (a.ext_ == b.ext_ || *a.ext_ == *b.ext_) return a.ext_;
        throw arith_error("mixing two different quadratic extensions of the parameter field");
    }
    void prune() {
        if (im_.is_zero() && ext_ && !re_.is_zero()) {
            // keep the tag: harmless, and it lets later delta terms rejoin
        }
    }

    ParamRat re_, im_;
    Ext ext_;
};

}  // namespace genus0
