#include "appell/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace appell {

PowerSeries::PowerSeries(std::vector<MultiPoly> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: needs at least the constant coefficient");
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.c_[0] = MultiPoly::one();
    return s;
}

PowerSeries PowerSeries::exp_arg(Var v, std::size_t order) {
    PowerSeries s(order);
    Rational inv_fact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) inv_fact /= Rational(static_cast<long>(k));
        s.c_[k] = inv_fact * MultiPoly::variable(v, static_cast<unsigned>(k));
    }
    return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
    PowerSeries r(s.order());
    for (std::size_t k = 0; k <= s.order(); ++k) r.c_[k] = c * s.c_[k];
    return r;
}

PowerSeries operator*(const MultiPoly& p, const PowerSeries& s) {
    PowerSeries r(s.order());
    for (std::size_t k = 0; k <= s.order(); ++k) r.c_[k] = p * s.c_[k];
    return r;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    PowerSeries r(std::min(order, this->order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = c_[k];
    return r;
}

namespace series {

namespace {

MultiPoly convolve_at(const PowerSeries& a, const PowerSeries& b, std::size_t k) {
    MultiPoly acc;
    for (std::size_t i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    return acc;
}

void require_constant_term(const PowerSeries& s, const MultiPoly& expected, const char* op) {
    if (s.coeff(0) != expected)
        throw std::domain_error(std::string(op) + ": constant term must be " + expected.to_string() +
                                ", got " + s.coeff(0).to_string());
}

// d/du, one order lower.
PowerSeries derivative_u(const PowerSeries& s) {
    if (s.order() == 0) return PowerSeries(0);
    PowerSeries r(s.order() - 1);
    for (std::size_t k = 0; k + 1 <= s.order(); ++k)
        r.coeff(k) = Rational(static_cast<long>(k + 1)) * s.coeff(k + 1);
    return r;
}

}  // namespace

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k <= static_cast<long long>(n); ++k)
        r.coeff(static_cast<std::size_t>(k)) = convolve_at(a, b, static_cast<std::size_t>(k));
    return r;
}

PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r.coeff(k) = convolve_at(a, b, k);
    return r;
}

PowerSeries reciprocal(const PowerSeries& s) {
    require_constant_term(s, MultiPoly::one(), "reciprocal");
    PowerSeries r(s.order());
    r.coeff(0) = MultiPoly::one();
    for (std::size_t k = 1; k <= s.order(); ++k) {
        MultiPoly acc;
        for (std::size_t j = 1; j <= k; ++j) acc += s.coeff(j) * r.coeff(k - j);
        r.coeff(k) = -acc;
    }
    return r;
}

PowerSeries log(const PowerSeries& s) {
    require_constant_term(s, MultiPoly::one(), "log");
    if (s.order() == 0) return PowerSeries(0);
    PowerSeries t = mul_serial(derivative_u(s), reciprocal(s).truncated(s.order() - 1));
    PowerSeries r(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k)
        r.coeff(k) = Rational(1, static_cast<long>(k)) * t.coeff(k - 1);
    return r;
}

PowerSeries exp(const PowerSeries& s) {
    require_constant_term(s, MultiPoly(), "exp");
    PowerSeries r(s.order());
    r.coeff(0) = MultiPoly::one();
    // f' = s'·f termwise: k f_k = sum_{j=1..k} j s_j f_{k-j}
    for (std::size_t k = 1; k <= s.order(); ++k) {
        MultiPoly acc;
        for (std::size_t j = 1; j <= k; ++j)
            acc += (Rational(static_cast<long>(j)) * s.coeff(j)) * r.coeff(k - j);
        r.coeff(k) = Rational(1, static_cast<long>(k)) * acc;
    }
    return r;
}

PowerSeries pow_symbolic(const PowerSeries& s, Var v) {
    require_constant_term(s, MultiPoly::one(), "pow_symbolic");
    return exp(MultiPoly::variable(v) * log(s));
}

PowerSeries pow_int(const PowerSeries& s, unsigned e) {
    PowerSeries r = PowerSeries::one(s.order());
    for (unsigned i = 0; i < e; ++i) r = mul_serial(r, s);
    return r;
}

}  // namespace series

}  // namespace appell
