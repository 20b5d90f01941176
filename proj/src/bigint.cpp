#include "appell/bigint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace appell {

BigInt::BigInt(std::string_view decimal) {
    std::size_t i = 0;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) ++i;
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty integer literal");
    for (std::size_t j = i; j < decimal.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(decimal[j])))
            throw std::invalid_argument("BigInt: invalid integer literal '" + std::string(decimal) + "'");
    std::string buf(decimal);
    mpz_init(z_);
    if (mpz_set_str(z_, buf.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("BigInt: invalid integer literal '" + buf + "'");
    }
}

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt q;
    mpz_tdiv_q(q.z_, a.z_, b.z_);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    mpz_tdiv_r(r.z_, a.z_, b.z_);
    return r;
}

void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_tdiv_qr(q.raw(), r.raw(), a.raw(), b.raw());
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

BigInt pow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.raw(), base.raw(), exp);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace appell
