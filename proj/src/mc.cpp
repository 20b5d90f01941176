#include "appell/mc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace appell {

namespace {

// SplitMix64 (Steele, Lea & Flood's mixer); tiny, documented, and good
// enough for substream-per-sample use.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g{seed ^ (0x9E3779B97F4A7C15ull * (index + 1))};
    g.next();
    return g;
}

// standard 53-bit mantissa construction
double uniform53(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

double horner(const std::vector<double>& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void validate(const McConfig& cfg) {
    if (cfg.samples == 0) throw std::invalid_argument("mc: samples must be positive");
    if (cfg.l > cfg.m_int)
        throw std::invalid_argument("mc: shift count l = " + std::to_string(cfg.l) + " exceeds order m = " +
                                    std::to_string(cfg.m_int));
}

std::vector<double> dense_coeffs(const MultiPoly& p) {
    std::vector<MultiPoly> by_power = p.coefficients_of(Var::x);
    std::vector<double> coeffs(by_power.size());
    for (std::size_t k = 0; k < by_power.size(); ++k) coeffs[k] = by_power[k].constant_value().to_double();
    return coeffs;
}

double degenerate_z(double estimate, double exact) {
    if (std::abs(estimate - exact) <= 1e-9 * (1.0 + std::abs(exact))) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), estimate - exact);
}

// Fixed chunk grid; the reduction order never depends on the thread count.
constexpr std::uint64_t kChunks = 64;

template <bool Uniform>
void sample_chunk(const McConfig& cfg, const std::vector<double>& coeffs, double x0, std::uint64_t lo,
                  std::uint64_t hi, double& sum, double& sumsq) {
    double s = 0.0, s2 = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
        SplitMix64 g = sample_stream(cfg.seed, i);
        double shift = 0.0;
        for (unsigned j = 0; j < cfg.l; ++j) {
            std::uint64_t bits = g.next();
            shift += Uniform ? uniform53(bits) : static_cast<double>(bits >> 63);
        }
        double v = horner(coeffs, x0 + shift);
        s += v;
        s2 += v * v;
    }
    sum = s;
    sumsq = s2;
}

template <bool Uniform, bool Parallel>
McResult run_check(const McConfig& cfg, const MultiPoly& sampled, const Rational& exact) {
    std::vector<double> coeffs = dense_coeffs(sampled);
    const double x0 = cfg.x0.to_double();

    if (cfg.l == 0) {
        // no shifts, no randomness: every draw is the same evaluation
        McResult res;
        res.exact = exact;
        res.estimate = horner(coeffs, x0);
        res.std_error = 0.0;
        res.z_score = degenerate_z(res.estimate, exact.to_double());
        return res;
    }

    const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, cfg.samples);
    std::vector<double> sums(chunks, 0.0), sumsqs(chunks, 0.0);
    const std::uint64_t base = cfg.samples / chunks, extra = cfg.samples % chunks;

#pragma omp parallel for schedule(static) if (Parallel)
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const auto uc = static_cast<std::uint64_t>(c);
        const std::uint64_t lo = uc * base + std::min(uc, extra);
        const std::uint64_t hi = lo + base + (uc < extra ? 1 : 0);
        sample_chunk<Uniform>(cfg, coeffs, x0, lo, hi, sums[uc], sumsqs[uc]);
    }

    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        sum += sums[c];
        sumsq += sumsqs[c];
    }

    McResult res;
    res.exact = exact;
    const double count = static_cast<double>(cfg.samples);
    res.estimate = sum / count;
    double variance = 0.0;
    if (cfg.samples >= 2)
        variance = std::max(0.0, (sumsq - count * res.estimate * res.estimate) / (count - 1.0));
    res.std_error = std::sqrt(variance / count);
    const double exact_d = exact.to_double();
    res.z_score = res.std_error > 0.0 ? (res.estimate - exact_d) / res.std_error
                                      : degenerate_z(res.estimate, exact_d);
    return res;
}

template <bool Uniform, bool Parallel>
McResult mc_check(const McConfig& cfg, const FamilyCatalog& catalog) {
    validate(cfg);
    MultiPoly symbolic = Uniform ? catalog.gen_bernoulli(cfg.n) : catalog.gen_euler(cfg.n);
    MultiPoly sampled = specialize_order(symbolic, {{Var::m, Rational(static_cast<long>(cfg.m_int))}});
    MultiPoly reduced =
        specialize_order(symbolic, {{Var::m, Rational(static_cast<long>(cfg.m_int) - static_cast<long>(cfg.l))}});
    Rational exact = reduced.eval({{Var::x, cfg.x0}}).constant_value();
    return run_check<Uniform, Parallel>(cfg, sampled, exact);
}

}  // namespace

double float_eval(const MultiPoly& p, const std::map<Var, double>& bindings) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        if (!p.contains(v)) continue;
        auto bound = bindings.find(v);
        if (bound == bindings.end())
            throw std::invalid_argument(std::string("float_eval: unbound variable ") + var_name(v));
        std::vector<MultiPoly> by_power = p.coefficients_of(v);
        double acc = 0.0;
        for (auto it = by_power.rbegin(); it != by_power.rend(); ++it)
            acc = acc * bound->second + float_eval(*it, bindings);
        return acc;
    }
    return p.is_zero() ? 0.0 : p.constant_value().to_double();
}

McResult mc_check_bernoulli(const McConfig& cfg, const FamilyCatalog& catalog) {
    return mc_check<true, true>(cfg, catalog);
}

McResult mc_check_euler(const McConfig& cfg, const FamilyCatalog& catalog) {
    return mc_check<false, true>(cfg, catalog);
}

McResult mc_check_bernoulli_serial(const McConfig& cfg, const FamilyCatalog& catalog) {
    return mc_check<true, false>(cfg, catalog);
}

McResult mc_check_euler_serial(const McConfig& cfg, const FamilyCatalog& catalog) {
    return mc_check<false, false>(cfg, catalog);
}

double z_against(const McResult& result, const Rational& reference) {
    const double ref = reference.to_double();
    return result.std_error > 0.0 ? (result.estimate - ref) / result.std_error
                                  : degenerate_z(result.estimate, ref);
}

}  // namespace appell
