#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "appell/power_series.hpp"

namespace appell {

// An Appell sequence Q_0, Q_1, ... determined by its base coefficients
// c_k = Q_k(0) = k! * [u^k] A(u), where A(u) is the reciprocal moment
// generating function of the underlying shift. Members are
//   Q_n(t) = sum_{k=0..n} C(n,k) c_k t^{n-k},
// monic of degree n in the argument variable t.
class AppellFamily {
public:
    // recip_mgf must have constant term 1; its truncation order bounds the
    // highest member degree.
    AppellFamily(const PowerSeries& recip_mgf, Var argument, std::string label);

    AppellFamily(AppellFamily&&) noexcept;

    const std::string& label() const { return label_; }
    Var argument() const { return arg_; }
    std::size_t max_degree() const { return base_.size() - 1; }

    // c_k = Q_k(0); may involve order variables, never the argument.
    const MultiPoly& base(std::size_t k) const;

    // Memoized; safe to call concurrently. Throws std::out_of_range past the
    // constructed degree range.
    const MultiPoly& member(std::size_t n) const;

private:
    std::vector<MultiPoly> base_;
    Var arg_;
    std::string label_;
    mutable std::mutex memo_mutex_;
    mutable std::vector<std::optional<MultiPoly>> memo_;
};

// E over a uniform shift on [0,1]: integral over t in [0,1] of p with the
// argument translated by t. Exact, via the antiderivative in arg.
MultiPoly expect_uniform_shift(const MultiPoly& p, Var arg);

// E over a fair coin shift: (p(arg) + p(arg+1)) / 2.
MultiPoly expect_bernoulli_shift(const MultiPoly& p, Var arg);

// Binomial convolution sum_{k} C(n,k) f_k(f.arg) g_{n-k}(g.arg); the two
// families must use distinct argument variables.
MultiPoly convolve(const AppellFamily& f, const AppellFamily& g, std::size_t n);

}  // namespace appell
