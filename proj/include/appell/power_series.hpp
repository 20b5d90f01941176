#pragma once

#include <cstddef>
#include <vector>

#include "appell/multipoly.hpp"

namespace appell {

// Truncated formal power series in u with MultiPoly coefficients.
// coeff(k) is the coefficient of u^k, 0 <= k <= order.
// Binary operations truncate to the smaller order of the two operands.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1) {}
    explicit PowerSeries(std::vector<MultiPoly> coeffs);

    static PowerSeries one(std::size_t order);
    // exp(u * v) = sum_k v^k u^k / k!
    static PowerSeries exp_arg(Var v, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const MultiPoly& coeff(std::size_t k) const { return c_.at(k); }
    MultiPoly& coeff(std::size_t k) { return c_.at(k); }

    bool operator==(const PowerSeries&) const = default;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& s);
    // Multiplies every coefficient by a fixed polynomial.
    friend PowerSeries operator*(const MultiPoly& p, const PowerSeries& s);

    PowerSeries truncated(std::size_t order) const;

private:
    std::vector<MultiPoly> c_;
};

namespace series {

// Cauchy product. mul() runs the coefficient convolutions in parallel when
// OpenMP is enabled; mul_serial() is the reference kernel used to validate it
// and as the benchmark baseline.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b);

// 1/s; requires constant term 1.
PowerSeries reciprocal(const PowerSeries& s);
// log(s); requires constant term 1.
PowerSeries log(const PowerSeries& s);
// exp(s); requires constant term 0.
PowerSeries exp(const PowerSeries& s);
// s^v for a symbolic exponent v, i.e. exp(v * log(s)); requires constant
// term 1. The coefficient of u^k has degree <= k in v.
PowerSeries pow_symbolic(const PowerSeries& s, Var v);
// s^e by repeated multiplication (independent of pow_symbolic).
PowerSeries pow_int(const PowerSeries& s, unsigned e);

}  // namespace series

}  // namespace appell
