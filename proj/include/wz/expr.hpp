#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wz/ratfunc.hpp"

namespace wz {

/// Syntax tree of a rational expression in x and y.
struct Expr {
    enum class Kind { number, var_x, var_y, neg, add, sub, mul, div, pow };

    Kind kind = Kind::number;
    Rational value;     // number
    long exponent = 0;  // pow
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Raised with the byte offset of the offending token and the tokens that
/// would have been accepted there.
class ParseFailure : public Error {
public:
    ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& what)
        : Error(ErrorKind::ParseError, what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// expr   := term (("+" | "-") term)*
/// term   := factor (("*" | "/") factor)*
/// factor := atom ("^" signed_int)?
/// atom   := rational | "x" | "y" | "(" expr ")" | "-" factor
/// A literal "p/q" is read as one rational, so "2/3^2" is (2/3)^2.
ExprPtr parse_expr(std::string_view source);

/// Throws DivisionByZero when a denominator vanishes.
RatFunc eval_expr(const Expr& e);

/// parse_expr followed by eval_expr.
RatFunc parse_ratfunc(std::string_view source);

/// Presentation-only LaTeX rendering.
std::string to_latex(const BiPoly& p);
std::string to_latex(const RatFunc& f);

}  // namespace wz
