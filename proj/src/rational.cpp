#include "appell/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace appell {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational::Rational(const BigInt& v) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), v.raw());
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(text), BigInt(1));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den.sign() <= 0) throw std::invalid_argument("Rational: denominator must be positive in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(mpq_numref(q_), 10) + mpz_sizeinbase(mpq_denref(q_), 10) + 4);
    mpq_get_str(buf.data(), 10, q_);
    return std::string(buf.data());
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
    return r;  // powers of a canonical rational stay canonical
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace appell
