#pragma once

#include <functional>
#include <memory>

#include "genus0/bipoly.hpp"
#include "genus0/symbolic.hpp"

namespace genus0 {

struct parse_error : std::runtime_error {
    int line, col;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), col(col_) {}
};

// Expression AST for the map/integral grammar: integers, identifiers,
// + - * / unary -, ^ with nonnegative integer exponents, parentheses and
// sqrt(...). Whitespace-insensitive.
struct Expr {
    enum class Kind { number, var, add, sub, mul, div, neg, pow, sqrt };
    Kind kind;
    Int number;
    std::string name;
    int exponent = 0;
    std::unique_ptr<Expr> lhs, rhs;
    int line = 1, col = 1;
};

using ExprPtr = std::unique_ptr<Expr>;

namespace detail {

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    struct Token {
        enum class Type { number, ident, op, end } type;
        std::string text;
        Int value;
        int line, col;
    };

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.type = Token::Type::end;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.type = Token::Type::number;
            t.text = src_.substr(start, pos_ - start);
            t.value = Int(t.text);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.type = Token::Type::ident;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            t.type = Token::Type::op;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    void advance() {
        if (src_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

inline ExprPtr node(Expr::Kind k, const Lexer::Token& t, ExprPtr l, ExprPtr r) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = t.line;
    e->col = t.col;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { shift(); }

    ExprPtr parse() {
        ExprPtr e = sum();
        if (cur_.type != Lexer::Token::Type::end)
            throw parse_error("unexpected trailing input '" + cur_.text + "'", cur_.line, cur_.col);
        return e;
    }

private:
    using Token = Lexer::Token;

    ExprPtr sum() {
        ExprPtr e = product();
        while (is_op("+") || is_op("-")) {
            bool add = is_op("+");
            Token t = cur_;
            shift();
            ExprPtr r = product();
            e = node(add ? Expr::Kind::add : Expr::Kind::sub, t, std::move(e), std::move(r));
        }
        return e;
    }
    ExprPtr product() {
        ExprPtr e = unary();
        while (is_op("*") || is_op("/")) {
            bool mul = is_op("*");
            Token t = cur_;
            shift();
            ExprPtr r = unary();
            e = node(mul ? Expr::Kind::mul : Expr::Kind::div, t, std::move(e), std::move(r));
        }
        return e;
    }
    ExprPtr unary() {
        if (is_op("-")) {
            Token t = cur_;
            shift();
            return node(Expr::Kind::neg, t, unary(), nullptr);
        }
        if (is_op("+")) { shift(); return unary(); }
        return power();
    }
    ExprPtr power() {
        ExprPtr e = atom();
        while (is_op("^")) {
            Token t = cur_;
            shift();
            if (cur_.type != Token::Type::number)
                throw parse_error("exponent must be a nonnegative integer", cur_.line, cur_.col);
            if (cur_.value > 1000) throw parse_error("exponent too large", cur_.line, cur_.col);
            ExprPtr p = node(Expr::Kind::pow, t, std::move(e), nullptr);
            p->exponent = static_cast<int>(cur_.value);
            shift();
            e = std::move(p);
        }
        return e;
    }
    ExprPtr atom() {
        if (cur_.type == Token::Type::number) {
            ExprPtr e = node(Expr::Kind::number, cur_, nullptr, nullptr);
            e->number = cur_.value;
            shift();
            return e;
        }
        if (cur_.type == Token::Type::ident) {
            Token t = cur_;
            shift();
            if (t.text == "sqrt") {
                expect("(");
                ExprPtr arg = sum();
                expect(")");
                return node(Expr::Kind::sqrt, t, std::move(arg), nullptr);
            }
            ExprPtr e = node(Expr::Kind::var, t, nullptr, nullptr);
            e->name = t.text;
            return e;
        }
        if (is_op("(")) {
            shift();
            ExprPtr e = sum();
            expect(")");
            return e;
        }
        throw parse_error(cur_.type == Token::Type::end ? "unexpected end of expression"
                                                        : "unexpected token '" + cur_.text + "'",
                          cur_.line, cur_.col);
    }

    bool is_op(const char* s) const { return cur_.type == Token::Type::op && cur_.text == s; }
    void expect(const char* s) {
        if (!is_op(s)) throw parse_error(std::string("expected '") + s + "'", cur_.line, cur_.col);
        shift();
    }
    void shift() { cur_ = lex_.next(); }

    Lexer lex_;
    Token cur_;
};

}  // namespace detail

inline ExprPtr parse_expression_ast(const std::string& src) {
    return detail::Parser(src).parse();
}

// Generic evaluation into any field T.
template <class T>
struct EvalContext {
    std::map<std::string, T> vars;
    std::function<T(const Int&)> number;
    std::function<T(const T&, int, int)> sqrt_fn;  // may be empty
};

template <class T>
T eval_expr(const Expr& e, const EvalContext<T>& ctx) {
    switch (e.kind) {
        case Expr::Kind::number: return ctx.number(e.number);
        case Expr::Kind::var: {
            auto it = ctx.vars.find(e.name);
            if (it == ctx.vars.end())
                throw parse_error("unknown identifier '" + e.name + "'", e.line, e.col);
            return it->second;
        }
        case Expr::Kind::add: return eval_expr(*e.lhs, ctx) + eval_expr(*e.rhs, ctx);
        case Expr::Kind::sub: return eval_expr(*e.lhs, ctx) - eval_expr(*e.rhs, ctx);
        case Expr::Kind::mul: return eval_expr(*e.lhs, ctx) * eval_expr(*e.rhs, ctx);
        case Expr::Kind::div: {
            T den = eval_expr(*e.rhs, ctx);
            try {
                return eval_expr(*e.lhs, ctx) / den;
            } catch (const arith_error& err) {
                throw parse_error(err.what(), e.line, e.col);
            }
        }
        case Expr::Kind::neg: return -eval_expr(*e.lhs, ctx);
        case Expr::Kind::pow: {
            T base = eval_expr(*e.lhs, ctx);
            T acc = ctx.number(Int(1));
            for (int i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
        case Expr::Kind::sqrt: {
            if (!ctx.sqrt_fn) throw parse_error("sqrt is not allowed here", e.line, e.col);
            return ctx.sqrt_fn(eval_expr(*e.lhs, ctx), e.line, e.col);
        }
    }
    throw parse_error("corrupt expression tree", e.line, e.col);
}

// --- concrete evaluators ------------------------------------------------

// Bivariate rational function in (x, y) over the symbolic field; extra
// identifiers are the declared parameter names. sqrt() of a rational
// constant lands in a quadratic extension of Q; sqrt() of a parameter
// expression introduces the (single) extension root of the coefficient field.
inline BiRatFunc<SymScalar> parse_birat(const std::string& src, const std::set<std::string>& params) {
    using B = BiRatFunc<SymScalar>;
    ExprPtr ast = parse_expression_ast(src);
    EvalContext<B> ctx;
    ctx.vars["x"] = B::x();
    ctx.vars["y"] = B::y();
    for (const auto& p : params) ctx.vars[p] = B::constant(SymScalar::variable(p));
    ctx.number = [](const Int& n) { return B::constant(SymScalar(Rat(n))); };
    ctx.sqrt_fn = [](const B& v, int line, int col) {
        if (!v.is_constant()) throw parse_error("sqrt argument must not involve x, y or t", line, col);
        return B::constant(SymScalar::sqrt_ext(v.constant_value().re()));
    };
    return eval_expr(*ast, ctx);
}

// Univariate rational function in t used for parametrizations; h and the
// declared parameters are symbolic coefficients.
inline RatFunc<SymScalar> parse_ratfunc_t(const std::string& src, const std::set<std::string>& params) {
    using R = RatFunc<SymScalar>;
    ExprPtr ast = parse_expression_ast(src);
    EvalContext<R> ctx;
    ctx.vars["t"] = R::variable("t");
    for (const auto& p : params) ctx.vars[p] = R::constant(SymScalar::variable(p), "t");
    ctx.number = [](const Int& n) { return R::constant(SymScalar(Rat(n)), "t"); };
    ctx.sqrt_fn = [](const R& v, int line, int col) {
        if (!v.is_constant()) throw parse_error("sqrt argument must not involve t", line, col);
        return R::constant(SymScalar::sqrt_ext(v.constant_value().re()), "t");
    };
    return eval_expr(*ast, ctx);
}

// Exact numeric literal: rational arithmetic plus sqrt of integers/rationals,
// e.g. "3/2", "1/2+1/2*sqrt(5)", "-2".
inline Scalar parse_scalar(const std::string& src) {
    ExprPtr ast = parse_expression_ast(src);
    EvalContext<Scalar> ctx;
    ctx.number = [](const Int& n) { return Scalar(Rat(n)); };
    ctx.sqrt_fn = [](const Scalar& v, int line, int col) {
        if (!v.is_rational()) throw parse_error("nested sqrt is not supported", line, col);
        return Scalar::sqrt_of(v.rat());
    };
    return eval_expr(*ast, ctx);
}

}  // namespace genus0
