#include "wz/rational.hpp"

#include <cctype>

#include "wz/error.hpp"

namespace wz {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t e = digits(i);
    if (e == i) fail(ErrorKind::ParseError, "expected integer in '" + text + "'");
    Integer num(text.substr(i, e - i));
    Integer den(1);
    if (e < text.size()) {
        if (text[e] != '/') fail(ErrorKind::ParseError, "unexpected character in '" + text + "'");
        std::size_t f = digits(e + 1);
        if (f == e + 1 || f != text.size()) fail(ErrorKind::ParseError, "bad denominator in '" + text + "'");
        den = Integer(text.substr(e + 1));
    }
    if (neg) num = -num;
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

namespace {

// Multiplicity of the prime p in the integer n (n != 0).
long valuation(Integer n, const Integer& p) {
    long v = 0;
    n = ::abs(n);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

long valuation(const Rational& r, const Integer& p) {
    return valuation(r.num(), p) - valuation(r.den(), p);
}

Integer some_prime_of(const Rational& r) {
    // Some prime has nonzero valuation in r, because r is not +-1.
    Integer probe = r.num() != 1 && r.num() != -1 ? r.num() : r.den();
    probe = ::abs(probe);
    Integer p = 2;
    while (probe % p != 0) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

Integer floor(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return f;
}

bool integer_log(const Rational& value, const Rational& base, long& exponent) {
    if (value.is_zero()) return false;
    if (value.is_one()) {
        exponent = 0;
        return true;
    }
    Integer p = some_prime_of(base);
    long vb = valuation(base, p);
    long vv = valuation(value, p);
    if (vb == 0 || vv % vb != 0) return false;
    long e = vv / vb;
    if (base.pow(e) != value) return false;
    exponent = e;
    return true;
}

}  // namespace wz
