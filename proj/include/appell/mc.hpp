#pragma once

#include <cstdint>
#include <map>

#include "appell/families.hpp"

namespace appell {

// One Monte-Carlo check: estimate E(P_n^{(m)}(x0 + S_l)) by sampling the
// l-fold shift sum and compare against the exact order-reduced reference
// P_n^{(m-l)}(x0).
struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    unsigned n = 0;
    unsigned m_int = 0;  // integer order of the sampled polynomial
    unsigned l = 0;      // number of i.i.d. shifts, 0 <= l <= m_int
    Rational x0 = Rational(0);
};

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    Rational exact;
    double z_score = 0.0;
};

// Evaluates p after rational->double coefficient conversion, Horner style.
// Every variable occurring in p must be bound.
double float_eval(const MultiPoly& p, const std::map<Var, double>& bindings);

// Shift sums are l uniform [0,1] draws (Bernoulli-family check) or l fair
// coin draws (Euler-family check). Deterministic for a fixed config: sample i
// draws from its own SplitMix64 substream keyed by (seed, i), and partial
// sums are reduced over a fixed chunk grid, so the parallel kernels return
// bit-identical results to the serial reference ones.
McResult mc_check_bernoulli(const McConfig& cfg, const FamilyCatalog& catalog);
McResult mc_check_euler(const McConfig& cfg, const FamilyCatalog& catalog);
McResult mc_check_bernoulli_serial(const McConfig& cfg, const FamilyCatalog& catalog);
McResult mc_check_euler_serial(const McConfig& cfg, const FamilyCatalog& catalog);

// z-score of the estimate against an alternative reference value, using the
// same degenerate-spread convention as the checks above.
double z_against(const McResult& result, const Rational& reference);

}  // namespace appell
