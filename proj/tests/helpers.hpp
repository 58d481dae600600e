#pragma once

#include "doctest.h"
#include "wz/expr.hpp"
#include "wz/wz.hpp"

namespace wz::test {

inline RatFunc R(const char* s) { return parse_ratfunc(s); }

inline BiPoly P(const char* s) {
    RatFunc f = parse_ratfunc(s);
    REQUIRE(f.is_polynomial());
    return f.num().scaled(f.den().coeff(0, 0).inverse());
}

inline UPoly U(const char* s) { return P(s).as_univariate(Var::x); }

inline const Rational q23{Rational(2) / Rational(3)};

inline OperatorCase diff_case() { return {OpKind::derivation, OpKind::derivation}; }
inline OperatorCase shift_case() { return {OpKind::shift, OpKind::shift}; }
inline OperatorCase qshift_case() { return {OpKind::q_shift, OpKind::q_shift, q23}; }

}  // namespace wz::test

namespace doctest {

template <>
struct StringMaker<wz::RatFunc> {
    static String convert(const wz::RatFunc& f) { return wz::to_string(f).c_str(); }
};

template <>
struct StringMaker<wz::BiPoly> {
    static String convert(const wz::BiPoly& p) { return wz::to_string(p).c_str(); }
};

template <>
struct StringMaker<wz::Rational> {
    static String convert(const wz::Rational& r) { return r.to_string().c_str(); }
};

}  // namespace doctest

namespace wz::test {

struct NamedCase {
    const char* name;
    OperatorCase op;
};

inline std::vector<NamedCase> all_cases() {
    return {{"diff", diff_case()},
            {"shift", shift_case()},
            {"qshift", qshift_case()},
            {"shift-qshift", {OpKind::shift, OpKind::q_shift, q23}},
            {"qshift-shift", {OpKind::q_shift, OpKind::shift, q23}},
            {"mixed-sx", {OpKind::shift, OpKind::derivation}},
            {"mixed-qx", {OpKind::q_shift, OpKind::derivation, q23}},
            {"mixed-sy", {OpKind::derivation, OpKind::shift}},
            {"mixed-qy", {OpKind::derivation, OpKind::q_shift, q23}}};
}

inline bool same_pair(const WZPair& a, const WZPair& b) { return a.f == b.f && a.g == b.g; }

}  // namespace wz::test
