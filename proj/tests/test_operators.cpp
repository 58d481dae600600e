#include "helpers.hpp"
#include "oracles.hpp"

using namespace wz;
using namespace wz::test;

namespace {

std::vector<OperatorCase> auto_cases() {
    return {shift_case(), qshift_case(), {OpKind::shift, OpKind::q_shift, q23}, {OpKind::q_shift, OpKind::shift, q23}};
}

}  // namespace

TEST_CASE("automorphism examples") {
    CHECK(apply_auto(R("1/(2*x+3*y)"), Var::x, 3, shift_case()) == R("1/(2*x+6+3*y)"));
    CHECK(apply_auto(R("x/(y^2+1)"), Var::y, 0, qshift_case()) == R("x/(y^2+1)"));
    CHECK(apply_auto(R("x/y"), Var::x, 1, qshift_case()) == R("2/3*x/y"));
    CHECK_THROWS_AS(apply_auto(R("x"), Var::x, 1, diff_case()), Error);
}

TEST_CASE("difference and derivative examples") {
    CHECK(apply_delta(R("x/(x^2+1)"), Var::x, diff_case()) == R("(1-x^2)/(x^2+1)^2"));
    for (const auto& c : {diff_case(), shift_case()}) {
        CHECK(apply_delta(R("7/3"), Var::x, c).is_zero());
        CHECK(apply_delta(R("7/3"), Var::y, c).is_zero());
    }
    CHECK(apply_delta(R("-1/y"), Var::y, shift_case()) == R("1/(y*(y+1))"));
    CHECK(apply_delta(R("y"), Var::y, qshift_case()) == R("-1/3*y"));
}

TEST_CASE("operator case validation") {
    CHECK_THROWS_AS(OperatorCase(OpKind::q_shift, OpKind::q_shift), Error);
    for (int q : {0, 1, -1}) {
        try {
            OperatorCase(OpKind::shift, OpKind::q_shift, Rational(q));
            FAIL("q accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::QInvalid);
        }
    }
    CHECK_FALSE(OperatorCase(OpKind::shift, OpKind::shift, Rational(5)).q().has_value());
}

TEST_CASE("shift equivalence examples") {
    CHECK(shift_equiv(P("y"), P("y+5"), Var::y) == 5);
    CHECK(shift_equiv(P("2*x+3*y"), P("2*x+3*y+3"), Var::y) == 1);
    CHECK_FALSE(shift_equiv(P("y^2+x"), P("y^2+x+1"), Var::y).has_value());
    CHECK(shift_equiv(P("x+y"), P("x+y-2"), Var::x) == -2);
}

TEST_CASE("q-shift equivalence examples") {
    auto r = qshift_equiv(P("y-1"), P("y-3/2"), Var::y, q23);
    REQUIRE(r.has_value());
    CHECK(r->first == 1);
    CHECK(P("y-1").scale(Var::y, q23) == P("y-3/2").scaled(r->second));
    r = qshift_equiv(P("y^2+x"), P("y^2+x"), Var::y, q23);
    REQUIRE(r.has_value());
    CHECK(r->first == 0);
    CHECK(r->second == Rational(1));
    CHECK_FALSE(qshift_equiv(P("y-1"), P("y-2"), Var::y, q23).has_value());
}

TEST_CASE("joint orbit examples") {
    auto o = joint_orbit(P("2*x+3*y"), 64, shift_case());
    REQUIRE(o.has_value());
    CHECK(o->s == 3);
    CHECK(o->t == 2);
    CHECK(o->c == Rational(1));
    o = joint_orbit(P("x+y"), 64, shift_case());
    REQUIRE(o.has_value());
    CHECK((o->s == 1 && o->t == 1 && o->c == Rational(1)));
    CHECK_FALSE(joint_orbit(P("y^2+x"), 10, shift_case()).has_value());
    o = joint_orbit(P("y+1"), 64, shift_case());
    REQUIRE(o.has_value());
    CHECK(o->t == 0);
    o = joint_orbit(P("x+1"), 64, shift_case());
    REQUIRE(o.has_value());
    CHECK((o->s == 0 && o->t == 1));
}

TEST_CASE("automorphism powers compose") {
    oracle::Rng rng(21);
    auto cases = auto_cases();
    for (int i = 0; i < 500; ++i) {
        const OperatorCase& c = cases[static_cast<std::size_t>(i) % cases.size()];
        RatFunc f = rng.ratfunc(3, 9);
        const Var v = rng.coin() ? Var::x : Var::y;
        long m = rng.range(-3, 3), n = rng.range(-3, 3);
        CHECK(apply_auto(apply_auto(f, v, m, c), v, n, c) == apply_auto(f, v, m + n, c));
        CHECK(apply_auto(f, v, 0, c) == f);
    }
}

TEST_CASE("difference operators are additive and match the automorphism") {
    oracle::Rng rng(22);
    std::vector<OperatorCase> cases = auto_cases();
    cases.push_back(diff_case());
    cases.push_back({OpKind::derivation, OpKind::shift});
    cases.push_back({OpKind::q_shift, OpKind::derivation, q23});
    for (int i = 0; i < 200; ++i) {
        const OperatorCase& c = cases[static_cast<std::size_t>(i) % cases.size()];
        RatFunc f = rng.ratfunc(3, 9), g = rng.ratfunc(3, 9);
        for (Var v : {Var::x, Var::y}) {
            CHECK(apply_delta(f + g, v, c) == apply_delta(f, v, c) + apply_delta(g, v, c));
            if (c.is_automorphism(v)) CHECK(apply_delta(f, v, c) == apply_auto(f, v, 1, c) - f);
        }
        // the two operators commute
        CHECK(apply_delta(apply_delta(f, Var::x, c), Var::y, c) == apply_delta(apply_delta(f, Var::y, c), Var::x, c));
    }
}

TEST_CASE("shift equivalence is reflexive, symmetric and verified") {
    oracle::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        BiPoly p = rng.poly(static_cast<int>(rng.range(1, 3)), 9).unit_normal();
        const Var v = rng.coin() ? Var::x : Var::y;
        if (!p.depends_on(v)) continue;
        long j = rng.range(-6, 6);
        BiPoly r = p.shift(v, Rational(j));
        CHECK(shift_equiv(p, p, v) == 0);
        auto a = shift_equiv(p, r, v), b = shift_equiv(r, p, v);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == -*b);
        CHECK(p.shift(v, Rational(*a)) == r);
        CHECK(oracle::same_orbit(p, r, v, OpKind::shift, Rational(1)));
        // q-analogue
        BiPoly s = p.scale(v, q23.pow(j));
        auto e = qshift_equiv(p, s.unit_normal(), v, q23);
        REQUIRE(e.has_value());
        CHECK(p.scale(v, q23.pow(e->first)) == s.unit_normal().scaled(e->second));
    }
}

TEST_CASE("joint orbit relations hold by substitution") {
    oracle::Rng rng(24);
    for (const auto& c : auto_cases()) {
        for (int i = 0; i < 40; ++i) {
            // linear forms always have a joint orbit in the pure shift case
            BiPoly b = (BiPoly::monomial(Rational(rng.range(1, 4)), 1, 0) +
                        BiPoly::monomial(rng.nonzero(4), 0, 1) + BiPoly(rng.nonzero(9)))
                           .unit_normal();
            if (c.dx() == OpKind::q_shift || c.dy() == OpKind::q_shift)
                b = (b * BiPoly::x() - BiPoly(rng.nonzero(9))).unit_normal();
            auto o = joint_orbit(b, 64, c);
            if (!o) continue;
            CHECK(apply_auto(b, Var::x, o->s, c) == apply_auto(b, Var::y, o->t, c).scaled(o->c));
            if (c == shift_case()) CHECK(o->c == Rational(1));
        }
    }
}
