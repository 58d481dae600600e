#include "wz/expr.hpp"

#include <algorithm>
#include <cctype>

namespace wz {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) error({"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->args = std::move(args);
        return e;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    [[noreturn]] void error(std::vector<std::string> expected) {
        std::string what = "at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) what += (i ? ", " : "") + expected[i];
        if (pos_ < s_.size()) {
            what += std::string(", found '") + s_[pos_] + "'";
        } else {
            what += ", found end of input";
        }
        throw ParseFailure(pos_, std::move(expected), what);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                e = node(Expr::Kind::add, {e, term()});
            } else if (peek('-')) {
                ++pos_;
                e = node(Expr::Kind::sub, {e, term()});
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                e = node(Expr::Kind::mul, {e, factor()});
            } else if (peek('/')) {
                ++pos_;
                e = node(Expr::Kind::div, {e, factor()});
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        if (peek('-')) {
            ++pos_;
            return node(Expr::Kind::neg, {factor()});
        }
        ExprPtr base = atom();
        if (!peek('^')) return base;
        ++pos_;
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        } else if (peek('+')) {
            ++pos_;
        }
        if (!peek_digit()) error({"integer exponent"});
        const std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 9) {
            pos_ = at;
            error({"exponent below 10^9"});
        }
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->exponent = std::stol(d) * (neg ? -1 : 1);
        e->args = {base};
        return e;
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) error({"number", "x", "y", "(", "-"});
        const char c = s_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            return node(c == 'x' ? Expr::Kind::var_x : Expr::Kind::var_y, {});
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!peek(')')) error({")"});
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            // "p/q" with q a nonzero literal is one number; p/0 is left to
            // the division node so evaluation reports it
            std::size_t save = pos_;
            if (peek('/')) {
                ++pos_;
                if (peek_digit()) {
                    Integer d(digits());
                    if (d == 0) {
                        pos_ = save;
                    } else {
                        den = d;
                    }
                } else {
                    pos_ = save;
                }
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::number;
            e->value = Rational(num, den);
            return e;
        }
        error({"number", "x", "y", "(", "-"});
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view source) { return Parser(source).parse(); }

RatFunc eval_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number: return RatFunc(e.value);
        case Expr::Kind::var_x: return RatFunc::x();
        case Expr::Kind::var_y: return RatFunc::y();
        case Expr::Kind::neg: return -eval_expr(*e.args[0]);
        case Expr::Kind::add: return eval_expr(*e.args[0]) + eval_expr(*e.args[1]);
        case Expr::Kind::sub: return eval_expr(*e.args[0]) - eval_expr(*e.args[1]);
        case Expr::Kind::mul: return eval_expr(*e.args[0]) * eval_expr(*e.args[1]);
        case Expr::Kind::div: return eval_expr(*e.args[0]) / eval_expr(*e.args[1]);
        case Expr::Kind::pow: {
            RatFunc b = eval_expr(*e.args[0]);
            if (b.is_zero() && e.exponent < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
            if (e.exponent > 10000 || e.exponent < -10000) fail(ErrorKind::DegreeCapExceeded, "exponent too large");
            return b.pow(static_cast<int>(e.exponent));
        }
    }
    fail(ErrorKind::ParseError, "unknown expression node");
}

RatFunc parse_ratfunc(std::string_view source) { return eval_expr(*parse_expr(source)); }

namespace {

std::string latex_rational(const Rational& c) {
    if (c.is_integer()) return c.to_string();
    Rational a = c.abs();
    std::string s = "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
    return c.sign() < 0 ? "-" + s : s;
}

}  // namespace

std::string to_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    auto tm = p.terms();
    std::vector<std::pair<Exponent, Rational>> v(tm.begin(), tm.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        return ta != tb ? ta > tb : a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [e, c] : v) {
        std::string mono;
        auto var = [&](char n, int k) {
            if (k == 0) return;
            mono += n;
            if (k > 1) mono += "^{" + std::to_string(k) + "}";
        };
        var('x', e.first);
        var('y', e.second);
        Rational a = c.abs();
        std::string coef = mono.empty() || !a.is_one() ? latex_rational(a) : "";
        if (!coef.empty() && !mono.empty()) coef += " ";
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + coef + mono;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + coef + mono;
        }
    }
    return out;
}

std::string to_latex(const RatFunc& f) {
    if (f.is_polynomial()) return to_latex(f.num().scaled(f.den().coeff(0, 0).inverse()));
    BiPoly d = integer_normal(f.den());
    return "\\frac{" + to_latex(f.num().scaled(d.leading_coeff() / f.den().leading_coeff())) + "}{" + to_latex(d) +
           "}";
}

}  // namespace wz
