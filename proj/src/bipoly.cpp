#include "wz/bipoly.hpp"

#include "modular.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace wz {

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
    return BiPoly(Poly<UPoly>::monomial(UPoly::monomial(c, i), j));
}

BiPoly BiPoly::from_terms(const std::map<Exponent, Rational>& terms) {
    int dy = -1;
    for (const auto& [e, c] : terms) dy = std::max(dy, e.second);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dy + 1));
    for (const auto& [e, c] : terms) {
        auto& row = rows[static_cast<std::size_t>(e.second)];
        if (static_cast<int>(row.size()) <= e.first) row.resize(static_cast<std::size_t>(e.first) + 1);
        row[static_cast<std::size_t>(e.first)] += c;
    }
    std::vector<UPoly> c;
    c.reserve(rows.size());
    for (auto& r : rows) c.emplace_back(std::move(r));
    return BiPoly(Poly<UPoly>(std::move(c)));
}

BiPoly BiPoly::from_univariate(const UPoly& p, Var v) {
    if (v == Var::x) return BiPoly(Poly<UPoly>(p));
    std::vector<UPoly> c;
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return BiPoly(Poly<UPoly>(std::move(c)));
}

std::map<Exponent, Rational> BiPoly::terms() const {
    std::map<Exponent, Rational> out;
    for (int j = 0; j <= deg_y(); ++j) {
        const UPoly& row = rep_[j];
        for (int i = 0; i <= row.degree(); ++i)
            if (!row[i].is_zero()) out.emplace(Exponent{i, j}, row[i]);
    }
    return out;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& r : rep_.coeffs()) d = std::max(d, r.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (int j = 0; j <= deg_y(); ++j)
        if (!rep_[j].is_zero()) d = std::max(d, rep_[j].degree() + j);
    return d;
}

std::size_t BiPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& r : rep_.coeffs())
        for (const auto& c : r.coeffs()) n += c.is_zero() ? 0 : 1;
    return n;
}

Exponent BiPoly::leading_exponent() const {
    Exponent best{-1, -1};
    for (int j = 0; j <= deg_y(); ++j) {
        const UPoly& row = rep_[j];
        if (row.is_zero()) continue;
        Exponent e{row.degree(), j};
        int te = e.first + e.second, tb = best.first + best.second;
        if (best.first < 0 || te > tb || (te == tb && e.first > best.first)) best = e;
    }
    return best;
}

Rational BiPoly::leading_coeff() const {
    if (is_zero()) return Rational(0);
    auto [i, j] = leading_exponent();
    return coeff(i, j);
}

BiPoly BiPoly::unit_normal() const {
    if (is_zero()) return *this;
    Rational lc = leading_coeff();
    if (lc.is_one()) return *this;
    return scaled(lc.inverse());
}

UPoly BiPoly::as_univariate(Var v) const {
    if (v == Var::x) return rep_[0];
    std::vector<Rational> c;
    for (const auto& r : rep_.coeffs()) c.push_back(r[0]);
    return UPoly(std::move(c));
}

BiPoly BiPoly::swapped() const {
    const int dx = deg_x();
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dx + 1));
    for (int j = 0; j <= deg_y(); ++j) {
        const UPoly& row = rep_[j];
        for (int i = 0; i <= row.degree(); ++i) {
            auto& out = rows[static_cast<std::size_t>(i)];
            if (static_cast<int>(out.size()) <= j) out.resize(static_cast<std::size_t>(j) + 1);
            out[static_cast<std::size_t>(j)] = row[i];
        }
    }
    std::vector<UPoly> c;
    c.reserve(rows.size());
    for (auto& r : rows) c.emplace_back(std::move(r));
    return BiPoly(Poly<UPoly>(std::move(c)));
}

BiPoly BiPoly::derivative(Var v) const {
    if (v == Var::y) return BiPoly(wz::derivative(rep_));
    std::vector<UPoly> c;
    for (const auto& r : rep_.coeffs()) c.push_back(wz::derivative(r));
    return BiPoly(Poly<UPoly>(std::move(c)));
}

BiPoly BiPoly::shift(Var v, const Rational& c) const {
    if (c.is_zero()) return *this;
    if (v == Var::y) return BiPoly(taylor_shift(rep_, UPoly(c)));
    std::vector<UPoly> out;
    for (const auto& r : rep_.coeffs()) out.push_back(taylor_shift(r, c));
    return BiPoly(Poly<UPoly>(std::move(out)));
}

BiPoly BiPoly::scale(Var v, const Rational& lambda) const {
    if (v == Var::y) return BiPoly(scale_var(rep_, UPoly(lambda)));
    std::vector<UPoly> out;
    for (const auto& r : rep_.coeffs()) out.push_back(scale_var(r, lambda));
    return BiPoly(Poly<UPoly>(std::move(out)));
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational r;
    for (int j = deg_y(); j >= 0; --j) r = r * y + wz::eval(rep_[j], x);
    return r;
}

UPoly BiPoly::eval_at(Var v, const Rational& value) const {
    if (v == Var::y) {
        UPoly r;
        for (int j = deg_y(); j >= 0; --j) r = r.scaled(value) + rep_[j];
        return r;
    }
    std::vector<Rational> c;
    for (const auto& r : rep_.coeffs()) c.push_back(wz::eval(r, value));
    return UPoly(std::move(c));
}

BiPoly BiPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    std::vector<UPoly> out;
    for (const auto& r : rep_.coeffs()) out.push_back(r.scaled(c));
    return BiPoly(Poly<UPoly>(std::move(out)));
}

BiPoly pow(const BiPoly& p, int e) { return BiPoly(wz::pow(p.rep(), e)); }

bool canonical_less(const BiPoly& a, const BiPoly& b) {
    auto ta = a.terms(), tb = b.terms();
    auto key = [](const Exponent& e) { return std::pair<int, int>{-(e.first + e.second), -e.first}; };
    std::vector<std::pair<Exponent, Rational>> va(ta.begin(), ta.end()), vb(tb.begin(), tb.end());
    auto ord = [&](const auto& l, const auto& r) { return key(l.first) < key(r.first); };
    std::sort(va.begin(), va.end(), ord);
    std::sort(vb.begin(), vb.end(), ord);
    for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
        if (va[i].first != vb[i].first) return key(va[i].first) > key(vb[i].first);
        if (va[i].second != vb[i].second) return va[i].second < vb[i].second;
    }
    return va.size() < vb.size();
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.is_zero()) return BiPoly{};
    const int da = a.deg_y(), db = b.deg_y();
    if (da < db) return std::nullopt;
    std::vector<UPoly> r = a.rep().coeffs();
    std::vector<UPoly> q(static_cast<std::size_t>(da - db + 1));
    const UPoly& lb = b.rep().lc();
    for (int i = da; i >= db; --i) {
        const UPoly& top = r[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        auto [qi, rem] = divmod(top, lb);
        if (!rem.is_zero()) return std::nullopt;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= qi * b.rep()[j];
        q[static_cast<std::size_t>(i - db)] = std::move(qi);
    }
    for (int i = 0; i < db; ++i)
        if (!r[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
    return BiPoly(Poly<UPoly>(std::move(q)));
}

BiPoly exact_quotient(const BiPoly& a, const BiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(ErrorKind::StructureViolation, "internal: expected exact polynomial division");
    return *q;
}

BiPoly content(const BiPoly& p, Var main) {
    if (main == Var::x) return content(p.swapped(), Var::y).swapped();
    UPoly g;
    for (const auto& c : p.rep().coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return BiPoly::from_univariate(g, Var::x);
}

namespace {

// Divides every y-coefficient by the univariate polynomial c (exact).
BiPoly divide_rows(const BiPoly& p, const UPoly& c) {
    if (c.degree() <= 0) return c.is_zero() ? p : p.scaled(c[0].inverse());
    std::vector<UPoly> out;
    for (const auto& r : p.rep().coeffs()) out.push_back(r / c);
    return BiPoly(Poly<UPoly>(std::move(out)));
}

UPoly row_content(const BiPoly& p) {
    UPoly g;
    for (const auto& c : p.rep().coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

}  // namespace

BiPoly primitive_part(const BiPoly& p, Var main) {
    if (p.is_zero()) return p;
    if (main == Var::x) return primitive_part(p.swapped(), Var::y).swapped();
    return divide_rows(p, row_content(p));
}

BiPoly integer_normal(const BiPoly& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& r : p.rep().coeffs())
        for (const auto& c : r.coeffs())
            if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& r : p.rep().coeffs())
        for (const auto& c : r.coeffs())
            if (!c.is_zero()) {
                Integer n = c.num() * (l / c.den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            }
    Rational s(l, g);
    if (p.leading_coeff().sign() < 0) s = -s;
    return s.is_one() ? p : p.scaled(s);
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();
    if (a.is_constant() || b.is_constant()) return BiPoly(1);
    UPoly ca = row_content(a), cb = row_content(b);
    UPoly c = gcd(ca, cb);
    BiPoly c_poly = BiPoly::from_univariate(c, Var::x);
    if (a.deg_y() == 0 || b.deg_y() == 0) return c_poly.unit_normal();
    BiPoly A = integer_normal(divide_rows(a, ca));
    BiPoly B = integer_normal(divide_rows(b, cb));
    modular::ZBiPoly za, zb;
    for (const BiPoly* src : {&A, &B}) {
        modular::ZBiPoly& z = src == &A ? za : zb;
        for (const auto& row : src->rep().coeffs()) {
            modular::ZPoly r;
            for (const auto& c : row.coeffs()) r.push_back(c.num());
            z.push_back(std::move(r));
        }
    }
    std::vector<UPoly> rows;
    for (const auto& r : modular::gcd(za, zb)) {
        std::vector<Rational> c(r.begin(), r.end());
        rows.emplace_back(std::move(c));
    }
    return (c_poly * BiPoly(Poly<UPoly>(std::move(rows)))).unit_normal();
}

namespace {

std::string monomial_text(int i, int j) {
    std::string s;
    auto part = [&](char v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part('x', i);
    part('y', j);
    return s;
}

std::string join_terms(const std::vector<std::pair<Exponent, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        std::string m = monomial_text(e.first, e.second);
        std::string t;
        if (m.empty()) {
            t = c.to_string();
        } else if (c.is_one()) {
            t = m;
        } else if (c == Rational(-1)) {
            t = "-" + m;
        } else {
            t = c.to_string() + "*" + m;
        }
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += t;
        } else {
            out += "+" + t;
        }
    }
    return out;
}

}  // namespace

std::string to_string(const BiPoly& p) {
    auto tm = p.terms();
    std::vector<std::pair<Exponent, Rational>> v(tm.begin(), tm.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        return ta != tb ? ta > tb : a.first.first > b.first.first;
    });
    return join_terms(v);
}

std::string to_string(const UPoly& p, char var) {
    BiPoly b = BiPoly::from_univariate(p, var == 'y' ? Var::y : Var::x);
    if (var == 'x' || var == 'y') return to_string(b);
    std::string s = to_string(b);
    std::replace(s.begin(), s.end(), 'x', var);
    return s;
}

Poly<RatX> to_ypoly(const BiPoly& p) {
    std::vector<RatX> c;
    c.reserve(p.rep().coeffs().size());
    for (const auto& r : p.rep().coeffs()) c.emplace_back(r);
    return Poly<RatX>(std::move(c));
}

std::pair<BiPoly, UPoly> from_ypoly(const Poly<RatX>& p) {
    UPoly l(Rational(1));
    for (const auto& c : p.coeffs()) {
        if (c.den().degree() > 0) l = l * (c.den() / gcd(l, c.den()));
    }
    std::vector<UPoly> rows;
    for (const auto& c : p.coeffs()) rows.push_back(c.num() * (l / c.den()));
    return {BiPoly(Poly<UPoly>(std::move(rows))), l};
}

}  // namespace wz
