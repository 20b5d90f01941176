#include "appell/appell_family.hpp"

#include <stdexcept>

#include "appell/bigint.hpp"

namespace appell {

AppellFamily::AppellFamily(const PowerSeries& recip_mgf, Var argument, std::string label)
    : arg_(argument), label_(std::move(label)) {
    if (recip_mgf.coeff(0) != MultiPoly::one())
        throw std::domain_error("AppellFamily '" + label_ + "': series constant term must be 1");
    base_.reserve(recip_mgf.order() + 1);
    Rational fact(1);
    for (std::size_t k = 0; k <= recip_mgf.order(); ++k) {
        if (k > 0) fact *= Rational(static_cast<long>(k));
        MultiPoly c = fact * recip_mgf.coeff(k);
        if (c.contains(arg_))
            throw std::domain_error("AppellFamily '" + label_ + "': series coefficients involve the argument variable");
        base_.push_back(std::move(c));
    }
    memo_.resize(base_.size());
}

AppellFamily::AppellFamily(AppellFamily&& o) noexcept
    : base_(std::move(o.base_)), arg_(o.arg_), label_(std::move(o.label_)), memo_(std::move(o.memo_)) {}

const MultiPoly& AppellFamily::base(std::size_t k) const {
    if (k >= base_.size())
        throw std::out_of_range("AppellFamily '" + label_ + "': base index " + std::to_string(k) +
                                " exceeds max degree " + std::to_string(max_degree()));
    return base_[k];
}

const MultiPoly& AppellFamily::member(std::size_t n) const {
    if (n >= base_.size())
        throw std::out_of_range("AppellFamily '" + label_ + "': member " + std::to_string(n) +
                                " exceeds max degree " + std::to_string(max_degree()));
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (!memo_[n]) {
        MultiPoly q;
        for (std::size_t k = 0; k <= n; ++k) {
            MultiPoly term = base_[k] * MultiPoly::variable(arg_, static_cast<unsigned>(n - k));
            q += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * term;
        }
        memo_[n] = std::move(q);
    }
    return *memo_[n];  // slots are write-once; the reference stays valid
}

MultiPoly expect_uniform_shift(const MultiPoly& p, Var arg) {
    // integral over [0,1] of p(arg + t) dt = P(arg + 1) - P(arg), P' = p
    MultiPoly anti = p.antiderivative(arg);
    return anti.shift(arg, Rational(1)) - anti;
}

MultiPoly expect_bernoulli_shift(const MultiPoly& p, Var arg) {
    return Rational(1, 2) * (p.shift(arg, Rational(1)) + p);
}

MultiPoly convolve(const AppellFamily& f, const AppellFamily& g, std::size_t n) {
    if (f.argument() == g.argument())
        throw std::invalid_argument("convolve: families '" + f.label() + "' and '" + g.label() +
                                    "' share the argument variable " + var_name(f.argument()));
    MultiPoly r;
    for (std::size_t k = 0; k <= n; ++k) {
        MultiPoly term = f.member(k) * g.member(n - k);
        r += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * term;
    }
    return r;
}

}  // namespace appell
