#include "appell/identities.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>

#include "appell/bigint.hpp"

namespace appell {

namespace {

using Catalog = FamilyCatalog;

Rational binom(std::size_t n, std::size_t k) {
    return Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

MultiPoly var_power(Var v, std::size_t e) { return MultiPoly::variable(v, static_cast<unsigned>(e)); }

MultiPoly shift_order(const MultiPoly& p, Var order, long delta) { return p.shift(order, Rational(delta)); }

// x -> x/2
MultiPoly halve_argument(const MultiPoly& p) {
    return p.subst(Var::x, Rational(1, 2) * MultiPoly::variable(Var::x));
}

// n! [u^n] (A(u) e^{u arg}) where A is recovered from the family's values at
// zero; an extraction route independent of the binomial-sum member build.
MultiPoly egf_route_member(const AppellFamily& fam, std::size_t n) {
    PowerSeries expser = PowerSeries::exp_arg(fam.argument(), n);
    MultiPoly acc;
    Rational inv_fact(1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) inv_fact /= Rational(static_cast<long>(i));
        acc += (inv_fact * fam.base(i)) * expser.coeff(n - i);
    }
    return Rational(factorial(static_cast<unsigned>(n))) * acc;
}

// --- checkers: each returns the exact residual LHS - RHS at degree n ---

MultiPoly check_appell_binomial(const Catalog& cat, std::size_t n) {
    for (const AppellFamily* fam : {&cat.gen_bernoulli_family(), &cat.gen_euler_family()}) {
        MultiPoly r = egf_route_member(*fam, n) - fam->member(n);
        if (!r.is_zero()) return r;
    }
    return MultiPoly();
}

MultiPoly check_mean_value_b(const Catalog& cat, std::size_t n) {
    return expect_uniform_shift(cat.bernoulli(n), Var::x) - var_power(Var::x, n);
}

MultiPoly check_mean_value_e(const Catalog& cat, std::size_t n) {
    return expect_bernoulli_shift(cat.euler(n), Var::x) - var_power(Var::x, n);
}

MultiPoly check_deriv_recursion(const Catalog& cat, std::size_t n) {
    const AppellFamily* fams[] = {&cat.bernoulli_family(), &cat.euler_family(), &cat.gen_bernoulli_family(),
                                  &cat.gen_euler_family(), &cat.mixed_family()};
    for (const AppellFamily* fam : fams) {
        MultiPoly lhs = fam->member(n).derivative(fam->argument());
        MultiPoly rhs = n == 0 ? MultiPoly() : Rational(static_cast<long>(n)) * fam->member(n - 1);
        MultiPoly r = lhs - rhs;
        if (!r.is_zero()) return r;
    }
    return MultiPoly();
}

MultiPoly check_order_addition_b(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_bernoulli(n).shift(Var::m, MultiPoly::variable(Var::l)).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t i = 0; i <= n; ++i)
        rhs += binom(n, i) * (cat.gen_bernoulli(i) * cat.gen_bernoulli(n - i, Var::l, Var::y));
    return lhs - rhs;
}

MultiPoly check_translation_b(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_bernoulli(n).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t i = 0; i <= n; ++i)
        rhs += binom(n, i) * (cat.gen_bernoulli(i) * var_power(Var::y, n - i));
    return lhs - rhs;
}

MultiPoly check_difference_b(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.gen_bernoulli(n);
    MultiPoly lhs = p.shift(Var::x, Rational(1)) - p;
    MultiPoly rhs;
    if (n > 0) rhs = Rational(static_cast<long>(n)) * shift_order(cat.gen_bernoulli(n - 1), Var::m, -1);
    return lhs - rhs;
}

MultiPoly check_order_addition_e(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_euler(n).shift(Var::m, MultiPoly::variable(Var::l)).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t i = 0; i <= n; ++i)
        rhs += binom(n, i) * (cat.gen_euler(i) * cat.gen_euler(n - i, Var::l, Var::y));
    return lhs - rhs;
}

MultiPoly check_translation_e(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_euler(n).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t i = 0; i <= n; ++i) rhs += binom(n, i) * (cat.gen_euler(i) * var_power(Var::y, n - i));
    return lhs - rhs;
}

MultiPoly check_difference_e(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.gen_euler(n);
    MultiPoly lhs = p.shift(Var::x, Rational(1)) + p;
    MultiPoly rhs = Rational(2) * shift_order(p, Var::m, -1);
    return lhs - rhs;
}

MultiPoly check_expect_reduce_b(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.gen_bernoulli(n);
    return expect_uniform_shift(p, Var::x) - shift_order(p, Var::m, -1);
}

MultiPoly check_expect_reduce_e(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.gen_euler(n);
    return expect_bernoulli_shift(p, Var::x) - shift_order(p, Var::m, -1);
}

MultiPoly check_mixed_conv(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.mixed_q(n).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += binom(n, k) * (cat.gen_bernoulli(k) * cat.gen_euler(n - k, Var::l, Var::y));
    return lhs - rhs;
}

MultiPoly check_mixed_binomial(const Catalog& cat, std::size_t n) {
    return egf_route_member(cat.mixed_family(), n) - cat.mixed_q(n);
}

MultiPoly check_mixed_two_expansions(const Catalog& cat, std::size_t n) {
    const AppellFamily& mixed = cat.mixed_family();
    MultiPoly lhs = cat.mixed_q(n);
    MultiPoly via_bernoulli, via_euler;
    for (std::size_t k = 0; k <= n; ++k) {
        via_bernoulli += binom(n, k) * (shift_order(mixed.base(k), Var::m, -1) * cat.bernoulli(n - k));
        via_euler += binom(n, k) * (shift_order(mixed.base(k), Var::l, -1) * cat.euler(n - k));
    }
    MultiPoly r = lhs - via_bernoulli;
    if (!r.is_zero()) return r;
    return lhs - via_euler;
}

MultiPoly check_mixed_difference(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.mixed_q(n);
    MultiPoly lhs = p.shift(Var::x, Rational(1)) - p;
    MultiPoly rhs;
    if (n > 0) rhs = Rational(static_cast<long>(n)) * shift_order(cat.mixed_q(n - 1), Var::m, -1);
    return lhs - rhs;
}

MultiPoly check_mixed_average(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.mixed_q(n);
    MultiPoly lhs = p.shift(Var::x, Rational(1)) + p;
    return lhs - Rational(2) * shift_order(p, Var::l, -1);
}

MultiPoly check_lemma_decomposition(const Catalog& cat, std::size_t n) {
    MultiPoly p = cat.mixed_q(n);
    MultiPoly rhs = shift_order(p, Var::l, -1);
    if (n > 0) rhs -= Rational(static_cast<long>(n), 2) * shift_order(cat.mixed_q(n - 1), Var::m, -1);
    return p - rhs;
}

MultiPoly check_main_theorem(const Catalog& cat, std::size_t n) {
    MultiPoly lhs, rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        MultiPoly e_part = cat.gen_euler(n - k, Var::l, Var::y);
        lhs += binom(n, k) * (cat.gen_bernoulli(k) * shift_order(e_part, Var::l, -1));
        MultiPoly b_part = cat.gen_bernoulli(k);
        if (k > 0)
            b_part += Rational(static_cast<long>(k), 2) * shift_order(cat.gen_bernoulli(k - 1), Var::m, -1);
        rhs += binom(n, k) * (b_part * e_part);
    }
    return lhs - rhs;
}

MultiPoly check_corollary_1(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_bernoulli(n).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        MultiPoly b_part = cat.gen_bernoulli(k);
        if (k > 0)
            b_part += Rational(static_cast<long>(k), 2) * shift_order(cat.gen_bernoulli(k - 1), Var::m, -1);
        rhs += binom(n, k) * (b_part * cat.euler(n - k, Var::y));
    }
    return lhs - rhs;
}

MultiPoly check_corollary_2(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.gen_euler(n, Var::l, Var::x).shift(Var::x, MultiPoly::variable(Var::y));
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        MultiPoly e_next = cat.gen_euler(k + 1, Var::l, Var::y);
        MultiPoly bracket = shift_order(e_next, Var::l, -1) - e_next;
        rhs += (binom(n, k) * Rational(2, static_cast<long>(k) + 1)) * (bracket * cat.bernoulli(n - k));
    }
    return lhs - rhs;
}

MultiPoly check_cheon(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.bernoulli(n, Var::y);
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 1) continue;
        rhs += (binom(n, k) * cat.bernoulli_number(k)) * cat.euler(n - k, Var::y);
    }
    return lhs - rhs;
}

MultiPoly check_sp_equivalence(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = Rational(2).pow(static_cast<long>(n)) * halve_argument(cat.bernoulli(n));
    MultiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += (binom(n, k) * cat.bernoulli_number(k)) * cat.euler(n - k);
    return lhs - rhs;
}

MultiPoly check_prop_identity(const Catalog& cat, std::size_t n) {
    MultiPoly lhs = cat.bernoulli(n);
    if (n > 0) lhs -= Rational(static_cast<long>(n), 2) * cat.euler(n - 1);
    return lhs - Rational(2).pow(static_cast<long>(n)) * halve_argument(cat.bernoulli(n));
}

using Checker = MultiPoly (*)(const Catalog&, std::size_t);

struct Entry {
    const char* name;
    Checker check;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"appell-binomial", &check_appell_binomial},
        {"mean-value-B", &check_mean_value_b},
        {"mean-value-E", &check_mean_value_e},
        {"deriv-recursion", &check_deriv_recursion},
        {"order-addition-B", &check_order_addition_b},
        {"translation-B", &check_translation_b},
        {"difference-B", &check_difference_b},
        {"order-addition-E", &check_order_addition_e},
        {"translation-E", &check_translation_e},
        {"difference-E", &check_difference_e},
        {"expect-reduce-B", &check_expect_reduce_b},
        {"expect-reduce-E", &check_expect_reduce_e},
        {"mixed-conv", &check_mixed_conv},
        {"mixed-binomial", &check_mixed_binomial},
        {"mixed-two-expansions", &check_mixed_two_expansions},
        {"mixed-difference", &check_mixed_difference},
        {"mixed-average", &check_mixed_average},
        {"lemma-decomposition", &check_lemma_decomposition},
        {"main-theorem", &check_main_theorem},
        {"corollary-1", &check_corollary_1},
        {"corollary-2", &check_corollary_2},
        {"cheon", &check_cheon},
        {"sp-equivalence", &check_sp_equivalence},
        {"prop-identity", &check_prop_identity},
    };
    return entries;
}

const Entry& find_entry(const std::string& name) {
    for (const Entry& e : registry())
        if (name == e.name) return e;
    throw std::invalid_argument("unknown identity '" + name + "'");
}

IdentityReport run_checker(const std::string& name, std::size_t n_max,
                           const std::function<MultiPoly(std::size_t)>& residual_at) {
    IdentityReport report;
    report.identity = name;
    report.n_max = n_max;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 0; n <= n_max; ++n) {
        MultiPoly residual = residual_at(n);
        if (!residual.is_zero()) {
            report.pass = false;
            report.residuals.emplace_back(n, std::move(residual));
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json residuals = nlohmann::json::array();
    for (const auto& [n, poly] : report.residuals)
        residuals.push_back({{"n", n}, {"polynomial", poly.to_string()}});
    return nlohmann::json{{"identity", report.identity},
                          {"n_range", {0, report.n_max}},
                          {"status", report.pass ? "pass" : "fail"},
                          {"residuals", std::move(residuals)},
                          {"elapsed_ms", report.elapsed_ms}};
}

IdentitySuite::IdentitySuite(std::size_t n_max) : n_max_(n_max), catalog_(n_max + 2) {}

const std::vector<std::string>& IdentitySuite::identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const Entry& e : registry()) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

bool IdentitySuite::known(const std::string& name) {
    for (const Entry& e : registry())
        if (name == e.name) return true;
    return false;
}

IdentityReport IdentitySuite::verify(const std::string& name, std::size_t n_max) const {
    const Entry& entry = find_entry(name);
    if (n_max > n_max_)
        throw std::invalid_argument("verify: n_max " + std::to_string(n_max) + " exceeds suite range " +
                                    std::to_string(n_max_));
    return run_checker(name, n_max, [&](std::size_t n) { return entry.check(catalog_, n); });
}

IdentityReport IdentitySuite::verify_expectation(const std::string& name, std::size_t n_max,
                                                 unsigned shift_count) const {
    if (shift_count == 0) throw std::invalid_argument("verify_expectation: shift_count must be >= 1");
    if (n_max > n_max_)
        throw std::invalid_argument("verify_expectation: n_max " + std::to_string(n_max) +
                                    " exceeds suite range " + std::to_string(n_max_));

    enum class Mode { MeanB, MeanE, ReduceB, ReduceE } mode;
    if (name == "mean-value-B")
        mode = Mode::MeanB;
    else if (name == "mean-value-E")
        mode = Mode::MeanE;
    else if (name == "expect-reduce-B")
        mode = Mode::ReduceB;
    else if (name == "expect-reduce-E")
        mode = Mode::ReduceE;
    else
        throw std::invalid_argument("verify_expectation: '" + name + "' is not an expectation identity");

    return run_checker(name, n_max, [&, mode](std::size_t n) {
        const bool uniform = (mode == Mode::MeanB || mode == Mode::ReduceB);
        const bool classical = (mode == Mode::MeanB || mode == Mode::MeanE);
        MultiPoly p;
        switch (mode) {
            case Mode::MeanB: p = catalog_.bernoulli(n); break;
            case Mode::MeanE: p = catalog_.euler(n); break;
            case Mode::ReduceB: p = catalog_.gen_bernoulli(n); break;
            case Mode::ReduceE: p = catalog_.gen_euler(n); break;
        }
        MultiPoly reference = classical
                                  ? var_power(Var::x, n)
                                  : p.shift(Var::m, Rational(-static_cast<long>(shift_count)));
        MultiPoly iterated = p;
        for (unsigned s = 0; s < shift_count; ++s)
            iterated = uniform ? expect_uniform_shift(iterated, Var::x) : expect_bernoulli_shift(iterated, Var::x);
        return iterated - reference;
    });
}

std::vector<IdentityReport> IdentitySuite::verify_all(std::size_t n_max) const {
    const auto& reg = registry();
    // build the shared families up front so the parallel loop only reads
    catalog_.bernoulli_family();
    catalog_.bernoulli_family(Var::y);
    catalog_.euler_family();
    catalog_.euler_family(Var::y);
    catalog_.gen_bernoulli_family();
    catalog_.gen_bernoulli_family(Var::l, Var::y);
    catalog_.gen_euler_family();
    catalog_.gen_euler_family(Var::l, Var::y);
    catalog_.gen_euler_family(Var::l, Var::x);
    catalog_.mixed_family();

    std::vector<IdentityReport> reports(reg.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(reg.size()); ++i) {
        try {
            reports[static_cast<std::size_t>(i)] = verify(reg[static_cast<std::size_t>(i)].name, n_max);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace appell
